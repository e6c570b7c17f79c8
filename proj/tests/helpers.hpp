#pragma once

#include <string>
#include <vector>

#include "lpsem/checkers.hpp"
#include "lpsem/core.hpp"
#include "lpsem/parser.hpp"

namespace t {

using namespace lpsem;

// two-atom flip-flop feeding a third atom; the running example everywhere
inline Program p1() { return parse_program("p :- not q.\nq :- not p.\nr :- q.\n"); }

// no positive cycle in the program itself, one appears after unfolding
inline Program fork3() { return parse_program("a :- c.\nb :- c.\nc :- not a, not b.\n"); }

inline Program neg_loop() { return parse_program("p :- not p.\n"); }
inline Program fact_p() { return parse_program("p.\n"); }
inline Program pos_loop() { return parse_program("p :- q.\nq :- p.\n"); }

inline Interp3 i3(const Program& p, std::string_view pattern) {
  return Interp3::from_pattern(p.atoms_ptr(), pattern);
}
inline Interp2 i2(const Program& p, std::string_view pattern) {
  return Interp2::from_pattern(p.atoms_ptr(), pattern);
}

inline std::vector<std::string> patterns(const std::vector<Interp3>& models) {
  std::vector<std::string> out;
  for (const auto& m : models) out.push_back(m.to_pattern());
  return out;
}

inline std::vector<std::string> patterns2(const std::vector<Interp2>& models) {
  std::vector<std::string> out;
  for (const auto& m : models) out.push_back(m.to_pattern());
  return out;
}

// small deterministic corpus for property tests
inline std::vector<GenProfile> mixed_profiles(int count, int max_atoms, std::uint64_t seed0) {
  std::vector<GenProfile> out;
  const GenBias biases[4] = {GenBias::Uniform, GenBias::Tight, GenBias::Quasi,
                             GenBias::NegativeHeavy};
  for (int i = 0; i < count; ++i) {
    GenProfile prof;
    prof.n_atoms = 2 + i % (max_atoms - 1);
    prof.n_rules = 1 + (i * 3) % (2 * prof.n_atoms);
    prof.max_pbody = 1 + i % 2;
    prof.max_nbody = 1 + (i / 2) % 2;
    prof.bias = biases[i % 4];
    prof.seed = seed0 + static_cast<std::uint64_t>(i);
    out.push_back(prof);
  }
  return out;
}

}  // namespace t
