#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

using namespace lpsem;

namespace {

std::vector<Interp3> all_interp3(const AtomTablePtr& atoms) {
  int n = atoms->size();
  std::vector<Interp3> out;
  for (std::uint64_t idx = 0; idx < pow3(n); ++idx) {
    std::vector<Tri> vals(static_cast<size_t>(n));
    std::uint64_t d = idx;
    for (int a = n - 1; a >= 0; --a) {
      static constexpr Tri kDigit[3] = {Tri::T, Tri::F, Tri::U};
      vals[static_cast<size_t>(a)] = kDigit[d % 3];
      d /= 3;
    }
    out.emplace_back(atoms, std::move(vals));
  }
  return out;
}

bool subset(const std::vector<Interp2>& a, const std::vector<Interp2>& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("truth order is pointwise f < u < t") {
  auto p = t::p1();
  CHECK(leq_t(t::i3(p, "fff"), t::i3(p, "ttt")));
  CHECK(leq_t(t::i3(p, "uff"), t::i3(p, "tff")));
  CHECK_FALSE(leq_t(t::i3(p, "tff"), t::i3(p, "uff")));
  CHECK_FALSE(leq_t(t::i3(p, "tff"), t::i3(p, "ftf")));  // incomparable
  CHECK_FALSE(leq_t(t::i3(p, "ftf"), t::i3(p, "tff")));
}

TEST_CASE("subset order treats u as the top") {
  auto p = t::p1();
  CHECK(leq_s(t::i3(p, "tff"), t::i3(p, "tfu")));
  CHECK(leq_s(t::i3(p, "tff"), t::i3(p, "uuu")));
  CHECK(leq_s(t::i3(p, "ftt"), t::i3(p, "uuu")));
  CHECK_FALSE(leq_s(t::i3(p, "tff"), t::i3(p, "fff")));
}

TEST_CASE("orders reject mismatched atom tables") {
  auto p = t::p1();
  auto q = parse_program("a.\nb.\nc.\n");
  CHECK_THROWS_AS(leq_t(t::i3(p, "ttt"), t::i3(q, "ttt")), DomainMismatchError);
  CHECK_THROWS_AS(leq_s(t::i3(p, "ttt"), t::i3(q, "ttt")), DomainMismatchError);
}

TEST_CASE("gamma expands undefined atoms") {
  auto p = t::p1();
  auto g = gamma(t::i3(p, "tfu"));
  REQUIRE(g.size() == 2);
  CHECK(t::patterns2(g) == std::vector<std::string>{"101", "100"});  // {p,r} then {p}

  auto two_valued = gamma(t::i3(p, "ftt"));
  REQUIRE(two_valued.size() == 1);
  CHECK(two_valued[0] == t::i2(p, "011"));

  CHECK(gamma(Interp3::all_u(p.atoms_ptr())).size() == 8);
}

TEST_CASE("gamma respects the enumeration limit") {
  auto p = t::p1();
  Limits tiny;
  tiny.max_atoms_2v = 2;
  CHECK_NOTHROW(gamma(t::i3(p, "tuu"), tiny));
  CHECK_THROWS_AS(gamma(Interp3::all_u(p.atoms_ptr()), tiny), TooLargeError);
}

TEST_CASE("subset order coincides with gamma containment, exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    std::string text;
    for (int i = 0; i < n; ++i) text += "a" + std::to_string(i) + ".\n";
    auto p = parse_program(text);
    auto interps = all_interp3(p.atoms_ptr());
    for (const auto& a : interps)
      for (const auto& b : interps)
        CHECK(leq_s(a, b) == subset(gamma(a), gamma(b)));
  }
}

TEST_CASE("both orders are partial orders") {
  auto p = parse_program("a.\nb.\n");
  auto interps = all_interp3(p.atoms_ptr());
  for (const auto& a : interps) {
    CHECK(leq_t(a, a));
    CHECK(leq_s(a, a));
    for (const auto& b : interps) {
      if (leq_t(a, b) && leq_t(b, a)) CHECK(a == b);
      if (leq_s(a, b) && leq_s(b, a)) CHECK(a == b);
      for (const auto& c : interps) {
        if (leq_t(a, b) && leq_t(b, c)) CHECK(leq_t(a, c));
        if (leq_s(a, b) && leq_s(b, c)) CHECK(leq_s(a, c));
      }
    }
  }
}

TEST_CASE("interpretation helpers round-trip") {
  auto p = t::p1();
  CHECK(t::i3(p, "tfu").to_pattern() == "tfu");
  CHECK(t::i3(p, "10*").to_pattern() == "tfu");
  CHECK(t::i3(p, "tfu").to_pattern(true) == "10*");
  CHECK(t::i2(p, "101").to_index() == 5);
  CHECK(Interp2::from_index(p.atoms_ptr(), 5) == t::i2(p, "101"));
  CHECK(t::i2(p, "011").true_names() == std::vector<std::string>{"q", "r"});
  CHECK(Interp3::from_interp2(t::i2(p, "011")) == t::i3(p, "ftt"));
  CHECK(t::i3(p, "tft").as_interp2() == t::i2(p, "101"));
  CHECK_THROWS_AS(t::i3(p, "tfu").as_interp2(), Error);
}

TEST_CASE("program equality is a set comparison") {
  auto a = parse_program("p :- q, r.\np :- q, r.\n");
  auto b = parse_program("p :- r, q.\n");
  CHECK(a == b);
  CHECK(a.rules().size() == 1);
  auto c = parse_program("p :- q, not r.\n");
  CHECK_FALSE(a == c);
}
