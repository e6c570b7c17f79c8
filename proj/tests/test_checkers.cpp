#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "lpsem/checkers.hpp"
#include "lpsem/depgraph.hpp"
#include "lpsem/parser.hpp"

using namespace lpsem;

TEST_CASE("generation is deterministic and honors its bias") {
  GenProfile prof;
  prof.n_atoms = 6;
  prof.n_rules = 9;
  prof.seed = 1;
  CHECK(serialize_program(gen_program(prof)) == serialize_program(gen_program(prof)));
  GenProfile other = prof;
  other.seed = 2;
  CHECK(serialize_program(gen_program(prof)) != serialize_program(gen_program(other)));

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenProfile q = prof;
    q.seed = seed;
    q.bias = GenBias::Quasi;
    CHECK(classify(gen_program(q)).quasi_interpretation);
    q.bias = GenBias::Tight;
    CHECK(classify(gen_program(q)).tight);
    q.bias = GenBias::NegativeHeavy;
    Program neg = gen_program(q);
    for (const Rule& r : neg.rules()) CHECK_FALSE(r.nbody.empty());
  }
}

TEST_CASE("encoding bridge holds on curated programs") {
  auto r = check_encoding_bridge(t::p1());
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.stats["ig_equals_dg"] == true);

  auto quasi = check_encoding_bridge(parse_program("a :- not b.\nb :- not a.\n"));
  CHECK(quasi.verdict == Verdict::Holds);
  CHECK(quasi.stats["ig_equals_dg"] == true);
}

TEST_CASE("a redundant fact can hide an influence without breaking the bridge") {
  // quasi program whose influence graph is strictly smaller than its
  // dependency graph: the fact makes the negative rule irrelevant
  auto p = parse_program("p.\np :- not q.\nq.\n");
  CHECK(classify(p).quasi_interpretation);
  auto r = check_encoding_bridge(p);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.stats["ig_equals_dg"] == false);
}

TEST_CASE("cross-route check holds on curated programs") {
  for (const Program& p : {t::p1(), t::fork3(), t::neg_loop(), t::fact_p(), t::pos_loop()}) {
    auto r = check_regular_equals_min_stable_ts(p);
    CHECK(r.verdict == Verdict::Holds);
  }
}

TEST_CASE("negative-cycle necessity check") {
  auto r1 = check_neg_cycle_necessity(t::p1());
  CHECK(r1.verdict == Verdict::Holds);  // p1 has no negative cycle
  auto r2 = check_neg_cycle_necessity(t::neg_loop());
  CHECK(r2.verdict == Verdict::SkippedPrecondition);
  auto r3 = check_neg_cycle_necessity(t::pos_loop());  // locally stratified
  CHECK(r3.verdict == Verdict::Holds);
  CHECK(r3.stats["locally_stratified"] == true);
}

TEST_CASE("positive-cycle unicity check") {
  auto r1 = check_pos_cycle_unicity(t::fork3());
  CHECK(r1.verdict == Verdict::Holds);
  CHECK(r1.stats["regular_models"] == 1);
  CHECK(r1.stats["stable_models"] == 0);
  auto r2 = check_pos_cycle_unicity(t::p1());
  CHECK(r2.verdict == Verdict::SkippedPrecondition);
  auto r3 = check_pos_cycle_unicity(t::neg_loop());
  CHECK(r3.verdict == Verdict::Holds);
}

TEST_CASE("feedback bound check") {
  auto r1 = check_fvs_bounds(t::p1());
  CHECK(r1.verdict == Verdict::Holds);
  CHECK(r1.stats["k"] == 1);
  CHECK(r1.stats["regular_models"] == 2);
  CHECK(r1.stats["tight"] == true);
  CHECK(r1.stats["bound_2k"] == 2);

  // acyclic dependency graph: k = 0 forces exactly one regular model
  auto acyclic = parse_program("a :- not b.\nb :- c.\nc.\n");
  auto r2 = check_fvs_bounds(acyclic);
  CHECK(r2.verdict == Verdict::Holds);
  CHECK(r2.stats["k"] == 0);
  CHECK(r2.stats["regular_models"] == 1);
  CHECK(r2.stats["margin_3k"] == 0);
}

TEST_CASE("unfolding invariants check and the fork observation") {
  auto r1 = check_lfp_invariants(t::p1());
  CHECK(r1.verdict == Verdict::Holds);
  auto r2 = check_lfp_invariants(t::fork3());
  CHECK(r2.verdict == Verdict::Holds);
  CHECK(r2.stats["dg_has_pos_cycle"] == false);
  CHECK(r2.stats["dg_lfp_has_pos_cycle"] == true);
}

TEST_CASE("all checks pass over a random corpus") {
  int violated = 0, held = 0, skipped_count = 0;
  for (const auto& prof : t::mixed_profiles(100, 6, 46)) {
    Program p = gen_program(prof);
    for (const auto& name : check_names()) {
      auto r = run_check(name, p);
      if (r.verdict == Verdict::Violated) ++violated;
      if (r.verdict == Verdict::Holds) ++held;
      if (r.verdict == Verdict::SkippedPrecondition) ++skipped_count;
    }
  }
  CHECK(violated == 0);
  CHECK(held > 300);
  CHECK(skipped_count > 0);  // preconditions do get exercised
}

TEST_CASE("too-large inputs surface as a verdict, not an exception") {
  Limits tiny;
  tiny.max_atoms_3v = 2;
  auto r = check_regular_equals_min_stable_ts(t::p1(), tiny);
  CHECK(r.verdict == Verdict::TooLarge);
}

TEST_CASE("the bound hunter holds on a small seeded run") {
  GenProfile prof;
  prof.n_atoms = 5;
  prof.n_rules = 8;
  prof.seed = 10;
  auto r = hunt_conjecture_2k(prof, 50);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.stats["non_tight_checked"] == 50);
  CHECK(r.stats["tight_skipped"].get<int>() >= 0);
}

TEST_CASE("the hunter is skipped on tight programs") {
  auto r = hunt_bound_single(t::p1());
  CHECK(r.verdict == Verdict::SkippedPrecondition);
}

TEST_CASE("a weakened bound fires a replayable witness") {
  GenProfile prof;
  prof.n_atoms = 5;
  prof.n_rules = 8;
  prof.seed = 11;
  auto r = hunt_conjecture_2k(prof, 400, Limits{}, /*bound_base=*/1);
  REQUIRE(r.verdict == Verdict::Violated);
  REQUIRE(r.witness.has_value());

  auto file = witness_file_json(r, std::nullopt);
  CHECK(file["check"] == "hunt-2k");
  CHECK(file["profile"].is_object());  // the hunter embeds the trial profile
  CHECK(file["details"]["bound_base"] == 1);

  auto replayed = replay_witness(file);
  CHECK(replayed.verdict == Verdict::Violated);
  REQUIRE(replayed.witness.has_value());
  CHECK((*replayed.witness)["program"] == (*r.witness)["program"]);
  CHECK((*replayed.witness)["k"] == (*r.witness)["k"]);
  CHECK((*replayed.witness)["regular_count"] == (*r.witness)["regular_count"]);
}

TEST_CASE("violated verdicts replay bit for bit") {
  // force a violation by weakening the bound on a known non-tight program
  auto p = parse_program("p :- p.\np :- not q.\nq :- not p.\n");
  auto r = hunt_bound_single(p, Limits{}, /*bound_base=*/1);
  REQUIRE(r.verdict == Verdict::Violated);
  auto file = witness_file_json(r, std::nullopt);
  auto again = replay_witness(file);
  CHECK(witness_file_json(again, std::nullopt) == file);
}

TEST_CASE("report json carries the verdict names") {
  auto r = check_fvs_bounds(t::p1());
  auto j = report_to_json(r);
  CHECK(j["check"] == "fvs-bounds");
  CHECK(j["verdict"] == "holds");
  CHECK(j["stats"]["k"] == 1);
}

TEST_CASE("profiles round-trip through json") {
  GenProfile prof;
  prof.n_atoms = 7;
  prof.n_rules = 11;
  prof.max_pbody = 3;
  prof.max_nbody = 1;
  prof.bias = GenBias::NegativeHeavy;
  prof.seed = 4242;
  GenProfile back = profile_from_json(profile_to_json(prof));
  CHECK(serialize_program(gen_program(back)) == serialize_program(gen_program(prof)));
}
