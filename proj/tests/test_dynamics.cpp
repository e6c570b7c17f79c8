#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "lpsem/depgraph.hpp"
#include "lpsem/dynamics.hpp"
#include "lpsem/lfp.hpp"
#include "lpsem/semantics.hpp"

using namespace lpsem;

TEST_CASE("immediate consequence steps of the flip-flop program") {
  auto p = t::p1();
  CHECK(tp_step(p, t::i2(p, "000")) == t::i2(p, "110"));
  CHECK(tp_step(p, t::i2(p, "111")) == t::i2(p, "001"));
  // supported models are fixed points
  CHECK(tp_step(p, t::i2(p, "100")) == t::i2(p, "100"));
  CHECK(tp_step(p, t::i2(p, "011")) == t::i2(p, "011"));
}

TEST_CASE("reduct operator steps of the flip-flop program") {
  auto p = t::p1();
  CHECK(fp_step(p, t::i2(p, "111")) == t::i2(p, "000"));
  CHECK(fp_step(p, t::i2(p, "010")) == t::i2(p, "011"));
  CHECK(fp_step(p, t::i2(p, "100")) == t::i2(p, "100"));
}

TEST_CASE("full transition tables of the flip-flop program") {
  // bit 0 = p, bit 1 = q, bit 2 = r
  auto st = build_tgst(t::p1());
  CHECK(st.succ == std::vector<std::uint32_t>{7, 1, 6, 0, 7, 1, 6, 0});
  auto sp = build_tgsp(t::p1());
  CHECK(sp.succ == std::vector<std::uint32_t>{3, 1, 6, 4, 3, 1, 6, 4});
}

TEST_CASE("quasi programs have identical stable and supported tables") {
  auto q = parse_program("a :- not b.\nb :- not a, not c.\nc.\n");
  CHECK(build_tgst(q) == build_tgsp(q));
}

TEST_CASE("trap space membership") {
  auto p = t::p1();
  CHECK(is_stable_trap_space(p, t::i3(p, "tfu")));
  CHECK(is_supported_trap_space(p, t::i3(p, "tfu")));
  CHECK(is_stable_trap_space(p, Interp3::all_u(p.atoms_ptr())));
  CHECK(is_supported_trap_space(p, Interp3::all_u(p.atoms_ptr())));
  CHECK_FALSE(is_stable_trap_space(p, t::i3(p, "ttu")));
  CHECK_FALSE(is_supported_trap_space(p, t::i3(p, "ttu")));
}

TEST_CASE("trap spaces of the flip-flop program") {
  auto p = t::p1();
  auto expected = std::vector<std::string>{"tff", "tfu", "ftt", "ftu", "uuu"};
  CHECK(t::patterns(stable_trap_spaces(p)) == expected);
  CHECK(t::patterns(supported_trap_spaces(p)) == expected);
}

TEST_CASE("trap spaces of tiny programs") {
  CHECK(t::patterns(stable_trap_spaces(t::fact_p())) == std::vector<std::string>{"t", "u"});

  auto loop = t::pos_loop();
  auto stable = t::patterns(stable_trap_spaces(loop));
  auto supported = t::patterns(supported_trap_spaces(loop));
  // both closed under the reduct operator
  CHECK(std::find(stable.begin(), stable.end(), "ff") != stable.end());
  CHECK(std::find(stable.begin(), stable.end(), "uu") != stable.end());
  // {p=t,q=t} survives the one-step operator but not the reduct operator
  CHECK(std::find(supported.begin(), supported.end(), "tt") != supported.end());
  CHECK(std::find(stable.begin(), stable.end(), "tt") == stable.end());
}

TEST_CASE("minimal stable trap spaces") {
  CHECK(t::patterns(min_stable_trap_spaces(t::p1())) == std::vector<std::string>{"tff", "ftt"});
  CHECK(t::patterns(min_stable_trap_spaces(t::neg_loop())) == std::vector<std::string>{"u"});
}

TEST_CASE("trap spaces are the gamma-closed sets of the transition table") {
  for (const auto& prof : t::mixed_profiles(80, 6, 404)) {
    Program p = gen_program(prof);
    auto st = build_tgst(p);
    auto spaces = stable_trap_spaces(p);
    for (const auto& i : spaces) {
      for (const auto& s : gamma(i)) {
        std::uint64_t idx = s.to_index();
        std::uint64_t next = st.succ[idx];
        // no outgoing arc may leave gamma(i)
        for (int a = 0; a < p.atom_count(); ++a) {
          if (i.get(a) == Tri::U) continue;
          CHECK(((next >> a) & 1u) == (i.get(a) == Tri::T ? 1u : 0u));
        }
      }
      CHECK(is_stable_trap_space(p, i));
    }
  }
}

TEST_CASE("cross-route identity: regular models are the minimal stable trap spaces") {
  for (const auto& prof : t::mixed_profiles(120, 6, 51)) {
    Program p = gen_program(prof);
    CHECK(regular_models(p) == min_stable_trap_spaces(p));
  }
}

TEST_CASE("every supported trap space sits above a supported partial model") {
  for (const auto& prof : t::mixed_profiles(80, 5, 3030)) {
    Program p = gen_program(prof);
    auto supp_models = supported_partial_models(p);
    for (const auto& ts : supported_trap_spaces(p)) {
      bool found = false;
      for (const auto& m : supp_models)
        if (leq_s(m, ts)) {
          found = true;
          break;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("quasi programs: stable and supported trap spaces coincide") {
  for (const auto& prof : t::mixed_profiles(60, 6, 61)) {
    GenProfile quasi = prof;
    quasi.bias = GenBias::Quasi;
    Program p = gen_program(quasi);
    CHECK(stable_trap_spaces(p) == supported_trap_spaces(p));
  }
}

TEST_CASE("the unfolding preserves stable trap spaces state for state") {
  for (const auto& prof : t::mixed_profiles(60, 6, 71)) {
    Program p = gen_program(prof);
    auto lf = lfp(p);
    CHECK(build_tgst(p).succ == build_tgst(lf.program).succ);
    CHECK(stable_trap_spaces(p) == stable_trap_spaces(lf.program));
  }
}

TEST_CASE("transition tables respect the state-space limit") {
  Limits tiny;
  tiny.max_atoms_2v = 2;
  CHECK_THROWS_AS(build_tgst(t::p1(), tiny), TooLargeError);
  CHECK_THROWS_AS(build_tgsp(t::p1(), tiny), TooLargeError);
}

TEST_CASE("dot export labels states with the true atoms") {
  auto dot = to_dot(build_tgsp(t::p1()));
  CHECK(dot.find("label=\"∅\"") != std::string::npos);
  CHECK(dot.find("label=\"{p, q, r}\"") != std::string::npos);
  CHECK(dot.find("s0 -> s3;") != std::string::npos);
}

TEST_CASE("parallel sweeps return identical results") {
  Limits par;
  par.jobs = 4;
  auto p = t::p1();
  CHECK(stable_trap_spaces(p, par) == stable_trap_spaces(p));
  CHECK(supported_trap_spaces(p, par) == supported_trap_spaces(p));
  CHECK(stable_partial_models(p, par) == stable_partial_models(p));
  CHECK(build_tgst(p, par) == build_tgst(p));
}
