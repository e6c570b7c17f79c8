#include "doctest.h"
#include "helpers.hpp"
#include "lpsem/checkers.hpp"

using namespace lpsem;

TEST_CASE("parses the three-rule flip-flop program") {
  auto p = parse_program("p :- not q. q :- not p. r :- q.");
  REQUIRE(p.rules().size() == 3);
  CHECK(p.atom_count() == 3);
  CHECK(p.atoms().name(0) == "p");
  CHECK(p.atoms().name(1) == "q");
  CHECK(p.atoms().name(2) == "r");
  CHECK(p.rules()[0].nbody == std::vector<AtomId>{1});
  CHECK(p.rules()[2].pbody == std::vector<AtomId>{1});
}

TEST_CASE("facts have empty bodies") {
  auto p = parse_program("p.");
  REQUIRE(p.rules().size() == 1);
  CHECK(p.rules()[0].pbody.empty());
  CHECK(p.rules()[0].nbody.empty());
}

TEST_CASE("an atom may occur positively and negatively in one body") {
  auto p = parse_program("p :- q, not q.");
  REQUIRE(p.rules().size() == 1);
  CHECK(p.rules()[0].pbody == std::vector<AtomId>{1});
  CHECK(p.rules()[0].nbody == std::vector<AtomId>{1});
}

TEST_CASE("tilde negation is accepted, canonical output uses not") {
  auto a = parse_program("p :- ~q.");
  auto b = parse_program("p :- not q.");
  CHECK(a == b);
  CHECK(serialize_program(a) == "p :- not q.\n");
}

TEST_CASE("comments and whitespace are skipped, empty input is empty") {
  CHECK(parse_program("").rules().empty());
  CHECK(parse_program("  % nothing here\n\n").rules().empty());
  auto p = parse_program("% lead\n  p\n :- \n not q % trailing\n .");
  CHECK(serialize_program(p) == "p :- not q.\n");
}

TEST_CASE("duplicate rules collapse") {
  auto p = parse_program("p :- q.\np :- q.\nq.\n");
  CHECK(p.rules().size() == 2);
  CHECK(serialize_program(p) == "p :- q.\nq.\n");
}

TEST_CASE("canonical serialization sorts literals") {
  auto p = parse_program("a :- z, b, not y, not c.");
  CHECK(serialize_program(p) == "a :- b, z, not c, not y.\n");
  CHECK(serialize_program(Program{}) == "");
}

TEST_CASE("canonical form of the flip-flop program") {
  CHECK(serialize_program(t::p1()) == "p :- not q.\nq :- not p.\nr :- q.\n");
}

namespace {
SourceSpan span_of(const std::string& text) {
  try {
    parse_program(text);
  } catch (const ParseError& e) {
    return e.span;
  }
  FAIL("expected a parse error for: ", text);
  return {};
}
}  // namespace

TEST_CASE("syntax errors carry positions inside the offending token") {
  CHECK(span_of("p :- q") == SourceSpan{1, 7, 1});        // missing dot at end
  CHECK(span_of("p :- Q.") == SourceSpan{1, 6, 1});       // uppercase start
  CHECK(span_of("p.\n:- q.") == SourceSpan{2, 1, 2});     // constraint
  CHECK(span_of("p | q :- r.") == SourceSpan{1, 3, 1});   // disjunction
  CHECK(span_of("p :- not.") == SourceSpan{1, 9, 1});     // nothing after not
  CHECK(span_of("not :- p.") == SourceSpan{1, 1, 3});     // reserved word
  CHECK(span_of("p :- -q.") == SourceSpan{1, 6, 1});      // classical negation
  CHECK(span_of("p q.") == SourceSpan{1, 3, 1});          // stray token
}

TEST_CASE("unsupported features name the feature") {
  CHECK_THROWS_WITH_AS(parse_program(":- p."),
                       "constraints (headless rules) are not supported", ParseError);
  CHECK_THROWS_WITH_AS(parse_program("a ; b :- c."), "disjunctive heads are not supported",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_program("-a :- b."), "classical negation is not supported",
                       ParseError);
}

TEST_CASE("parse after serialize is the identity on generated programs") {
  for (const auto& prof : t::mixed_profiles(200, 7, 77)) {
    Program g = gen_program(prof);
    std::string text = serialize_program(g);
    Program back = parse_program(text);
    CHECK(back == g);
    CHECK(serialize_program(back) == text);
  }
}
