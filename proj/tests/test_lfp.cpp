#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "lpsem/depgraph.hpp"
#include "lpsem/dynamics.hpp"
#include "lpsem/lfp.hpp"

using namespace lpsem;

namespace {

using NameRule = std::pair<std::string, std::set<std::string>>;  // head <- not ...

std::set<NameRule> as_name_rules(const Program& p) {
  std::set<NameRule> out;
  for (const Rule& r : p.rules()) {
    REQUIRE(r.pbody.empty());
    std::set<std::string> nb;
    for (AtomId a : r.nbody) nb.insert(p.atoms().name(a));
    out.insert({p.atoms().name(r.head), nb});
  }
  return out;
}

// Independent unfolding oracle over name-level rule sets: iterate the
// resolver-product step from the empty set until it stabilizes.
std::set<NameRule> oracle_lfp(const Program& p) {
  struct Src {
    std::string head;
    std::vector<std::string> pbody;
    std::set<std::string> nbody;
  };
  std::vector<Src> src;
  for (const Rule& r : p.rules()) {
    Src s;
    s.head = p.atoms().name(r.head);
    for (AtomId a : r.pbody) s.pbody.push_back(p.atoms().name(a));
    for (AtomId a : r.nbody) s.nbody.insert(p.atoms().name(a));
    src.push_back(std::move(s));
  }
  std::set<NameRule> q;
  while (true) {
    std::set<NameRule> next;
    for (const Src& s : src) {
      std::vector<std::vector<const NameRule*>> pools;
      bool stuck = false;
      for (const std::string& b : s.pbody) {
        std::vector<const NameRule*> pool;
        for (const NameRule& nr : q)
          if (nr.first == b) pool.push_back(&nr);
        if (pool.empty()) {
          stuck = true;
          break;
        }
        pools.push_back(std::move(pool));
      }
      if (stuck) continue;
      std::vector<size_t> pick(pools.size(), 0);
      while (true) {
        std::set<std::string> nb = s.nbody;
        for (size_t i = 0; i < pools.size(); ++i)
          nb.insert(pools[i][pick[i]]->second.begin(), pools[i][pick[i]]->second.end());
        next.insert({s.head, nb});
        size_t i = pools.size();
        bool done = pools.empty();
        while (i > 0) {
          --i;
          if (pick[i] + 1 < pools[i].size()) {
            ++pick[i];
            break;
          }
          pick[i] = 0;
          if (i == 0) done = true;
        }
        if (done) break;
      }
    }
    if (next == q) return q;
    q = std::move(next);
  }
}

}  // namespace

TEST_CASE("resolving a rule against quasi rules") {
  auto p = parse_program("r :- q.\nq :- not p.\n");
  Rule resolved = sigma_rule(p.rules()[0], {p.rules()[1]});
  CHECK(resolved == make_rule(p.rules()[0].head, {}, {*p.atoms().find("p")}));

  // no positive body: the rule passes through untouched
  auto q = parse_program("a :- not b.\n");
  CHECK(sigma_rule(q.rules()[0], {}) == q.rules()[0]);

  auto two = parse_program("a :- b, c.\nb :- not x.\nc :- not y.\n");
  Rule r2 = sigma_rule(two.rules()[0], {two.rules()[1], two.rules()[2]});
  CHECK(r2 == make_rule(two.rules()[0].head, {},
                        {*two.atoms().find("x"), *two.atoms().find("y")}));
}

TEST_CASE("resolution errors") {
  auto p = parse_program("r :- q.\nq :- not p.\nz :- not p.\nw :- v.\n");
  CHECK_THROWS_AS(sigma_rule(p.rules()[0], {}), ResolutionError);              // arity
  CHECK_THROWS_AS(sigma_rule(p.rules()[0], {p.rules()[2]}), ResolutionError);  // wrong head
  CHECK_THROWS_AS(sigma_rule(p.rules()[0], {p.rules()[3]}), ResolutionError);  // not quasi
}

TEST_CASE("least fixpoint of the flip-flop program") {
  auto lf = lfp(t::p1());
  CHECK(lf.program == parse_program("p :- not q.\nq :- not p.\nr :- not p.\n"));
}

TEST_CASE("least fixpoint keeps quasi programs intact") {
  auto q = parse_program("a :- not b.\nb :- not a, not c.\nc.\n");
  CHECK(lfp(q).program == q);
}

TEST_CASE("least fixpoint of the fork program") {
  // frozen from the oracle: every head resolves to the same negative body
  auto lf = lfp(t::fork3());
  auto expected = oracle_lfp(t::fork3());
  CHECK(as_name_rules(lf.program) == expected);
  CHECK(as_name_rules(lf.program) ==
        std::set<NameRule>{{"a", {"a", "b"}}, {"b", {"a", "b"}}, {"c", {"a", "b"}}});
  // the unfolding introduced a positive cycle that the source program lacks
  CHECK_FALSE(has_positive_cycle(build_dg(t::fork3())));
  CHECK(has_positive_cycle(build_dg(lf.program)));
}

TEST_CASE("rules can vanish entirely") {
  auto p = parse_program("a :- b.\n");
  auto lf = lfp(p);
  CHECK(lf.program.rules().empty());
  CHECK(lf.program.atom_count() == 2);  // atom table is preserved
}

TEST_CASE("unfolding matches the oracle on random programs") {
  for (const auto& prof : t::mixed_profiles(120, 6, 31)) {
    Program p = gen_program(prof);
    CHECK(as_name_rules(lfp(p).program) == oracle_lfp(p));
  }
}

TEST_CASE("unfolding invariants on random programs") {
  for (const auto& prof : t::mixed_profiles(100, 6, 87)) {
    Program p = gen_program(prof);
    auto lf = lfp(p);
    for (const Rule& r : lf.program.rules()) CHECK(r.pbody.empty());
    CHECK(same_domain(lf.program.atoms_ptr(), p.atoms_ptr()));
    std::set<AtomId> heads, lf_heads;
    for (const Rule& r : p.rules()) heads.insert(r.head);
    for (const Rule& r : lf.program.rules()) lf_heads.insert(r.head);
    CHECK(std::includes(heads.begin(), heads.end(), lf_heads.begin(), lf_heads.end()));
    CHECK(lfp(lf.program).program == lf.program);  // idempotent
  }
}

TEST_CASE("unfolding preserves the stable transition graph") {
  for (const auto& prof : t::mixed_profiles(80, 7, 12)) {
    Program p = gen_program(prof);
    auto lf = lfp(p);
    CHECK(build_tgst(p) == build_tgst(lf.program));
    // quasi programs have identical stable and supported dynamics
    CHECK(build_tgst(lf.program) == build_tgsp(lf.program));
  }
}

TEST_CASE("unfolding preserves graph hygiene") {
  for (const auto& prof : t::mixed_profiles(80, 6, 99)) {
    Program p = gen_program(prof);
    auto lf = lfp(p);
    if (!has_negative_cycle(build_dg(p))) CHECK_FALSE(has_negative_cycle(build_dg(lf.program)));
    if (classify(p).locally_stratified) CHECK_FALSE(has_any_cycle(build_dg(lf.program)));
  }
}
