#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpsem/core.hpp"
#include "lpsem/semantics.hpp"

namespace lpsem {

/// Deterministic successor map over all 2^n states, indexed by bit pattern
/// (bit i = atom i). Graph identity checks are plain array equality.
struct TransitionGraph {
  int n = 0;
  AtomTablePtr atoms;
  std::vector<std::uint32_t> succ;

  bool operator==(const TransitionGraph& other) const {
    return n == other.n && same_domain(atoms, other.atoms) && succ == other.succ;
  }
};

/// Immediate consequence operator: a is true in the result iff some rule for
/// a has its body satisfied by j.
Interp2 tp_step(const Program& p, const Interp2& j);

/// Gelfond-Lifschitz operator: least model of the 2-valued reduct by j.
Interp2 fp_step(const Program& p, const Interp2& j);

TransitionGraph build_tgsp(const Program& p, const Limits& lim = {});
TransitionGraph build_tgst(const Program& p, const Limits& lim = {});

/// gamma(i) is closed under fp_step (resp. tp_step).
bool is_stable_trap_space(const Program& p, const Interp3& i, const Limits& lim = {});
bool is_supported_trap_space(const Program& p, const Interp3& i, const Limits& lim = {});

std::vector<Interp3> stable_trap_spaces(const Program& p, const Limits& lim = {});
std::vector<Interp3> supported_trap_spaces(const Program& p, const Limits& lim = {});

/// Subset-order-minimal stable trap spaces; the transition-graph route to
/// the regular models.
std::vector<Interp3> min_stable_trap_spaces(const Program& p, const Limits& lim = {});

/// All sub-spaces closed under the successor table, canonical order.
std::vector<Interp3> closed_subspaces(const AtomTablePtr& atoms,
                                      const std::vector<std::uint32_t>& succ, const Limits& lim);

std::string state_label(const AtomTable& atoms, std::uint64_t state);
std::string to_dot(const TransitionGraph& g);

}  // namespace lpsem
