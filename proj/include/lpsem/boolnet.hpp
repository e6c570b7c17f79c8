#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpsem/core.hpp"
#include "lpsem/depgraph.hpp"
#include "lpsem/dynamics.hpp"
#include "lpsem/semantics.hpp"

namespace lpsem {

/// One Boolean update function per variable; functions are formula trees
/// without undefined leaves. Variables with no defining rule get constant
/// false when encoded from a program.
struct BooleanNetwork {
  AtomTablePtr vars;
  std::vector<Formula> funcs;  // indexed by variable id
};

/// Nondeterministic successor sets over all 2^n states. Under the fully
/// asynchronous scheme a state's successors are its one-variable updates that
/// change it; fixed points carry the self-loop as their only successor.
struct NondetTransitionGraph {
  int n = 0;
  AtomTablePtr vars;
  std::vector<std::vector<std::uint32_t>> succs;

  bool operator==(const NondetTransitionGraph& other) const {
    return n == other.n && same_domain(vars, other.vars) && succs == other.succs;
  }
};

/// f_v = disjunction of the body formulas of the rules with head v.
BooleanNetwork encode_bn(const Program& p);

/// Signed influence graph: an arc (u, v, +) iff some state witnesses a strict
/// increase of f_v in u, (u, v, -) iff some state witnesses a strict
/// decrease. Witness search sweeps the syntactic support of f_v only.
SignedDigraph influence_graph(const BooleanNetwork& f, const Limits& lim = {});

TransitionGraph sync_stg(const BooleanNetwork& f, const Limits& lim = {});
NondetTransitionGraph async_stg(const BooleanNetwork& f, const Limits& lim = {});

/// Terminal strongly connected components, each a sorted state list; the
/// list is ordered by smallest state.
std::vector<std::vector<std::uint32_t>> attractors(const TransitionGraph& g);
std::vector<std::vector<std::uint32_t>> attractors(const NondetTransitionGraph& g);

/// Sub-spaces m with f_v(s) = m(v) for every state s in m and every defined
/// variable v; independent of the update scheme.
std::vector<Interp3> trap_spaces(const BooleanNetwork& f, const Limits& lim = {});

/// Inclusion-minimal trap spaces; never empty.
std::vector<Interp3> min_trap_spaces(const BooleanNetwork& f, const Limits& lim = {});

/// Text format: one `v = expr` line per variable with & | ! ( ) 0 1.
BooleanNetwork parse_bn(std::string_view text);
std::string serialize_bn(const BooleanNetwork& f);

std::string to_dot(const TransitionGraph& g, const std::vector<std::vector<std::uint32_t>>& attrs);
std::string to_dot(const NondetTransitionGraph& g,
                   const std::vector<std::vector<std::uint32_t>>& attrs);

}  // namespace lpsem
