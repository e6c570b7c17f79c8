#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpsem/core.hpp"

namespace lpsem {

enum class Sign : std::uint8_t { Pos, Neg };

constexpr char sign_char(Sign s) { return s == Sign::Pos ? '+' : '-'; }

struct Arc {
  AtomId from = -1;
  AtomId to = -1;
  Sign sign = Sign::Pos;
  auto operator<=>(const Arc&) const = default;
};

/// Signed directed graph over a vertex name table. Parallel arcs of opposite
/// sign are allowed; at most one arc per (from, to, sign).
class SignedDigraph {
 public:
  SignedDigraph(AtomTablePtr vertices, std::vector<Arc> arcs);

  int vertex_count() const { return vertices_->size(); }
  const AtomTable& vertices() const { return *vertices_; }
  const AtomTablePtr& vertices_ptr() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(AtomId from, AtomId to, Sign sign) const;

  /// Same vertex table and arc set contained in other's.
  bool subgraph_of(const SignedDigraph& other) const;
  bool operator==(const SignedDigraph& other) const;

 private:
  AtomTablePtr vertices_;
  std::vector<Arc> arcs_;  // sorted, unique
};

/// Dependency graph: one positive arc per (body atom, head) pair from a
/// positive body occurrence, one negative arc from a negated occurrence.
SignedDigraph build_dg(const Program& p);

/// Positive dependency graph: the positive arcs of build_dg only.
SignedDigraph build_pdg(const Program& p);

struct CondArc {
  int from = -1;
  int to = -1;
  int pos_count = 0;
  int neg_count = 0;
  auto operator<=>(const CondArc&) const = default;
};

struct SccResult {
  std::vector<std::vector<AtomId>> components;  // topological order, each sorted
  std::vector<int> comp_of;                     // vertex -> component index
  std::vector<CondArc> cond_arcs;               // sorted
};

SccResult sccs(const SignedDigraph& g);

/// A simple cycle at the arc level. Arcs are listed in traversal order
/// starting from the smallest vertex on the cycle; a self-loop is a cycle of
/// length 1. The sign is negative iff the number of negative arcs is odd.
struct Cycle {
  std::vector<Arc> arcs;
  Sign sign = Sign::Pos;
  bool operator==(const Cycle&) const = default;
};

struct CycleReport {
  std::vector<Cycle> cycles;
};

/// All simple cycles (Johnson-style enumeration, deterministic order).
/// Parallel arcs of opposite sign yield one cycle per sign combination but do
/// not form a length-2 cycle by themselves.
CycleReport enumerate_simple_cycles(const SignedDigraph& g, const Limits& lim = {});

/// Streaming variant; return false from the callback to stop early.
void scan_simple_cycles(const SignedDigraph& g, const Limits& lim,
                        const std::function<bool(const Cycle&)>& cb);

bool has_positive_cycle(const SignedDigraph& g, const Limits& lim = {});
bool has_negative_cycle(const SignedDigraph& g, const Limits& lim = {});

/// Sign-blind cycle existence (self-loops count), by plain DFS.
bool has_any_cycle(const SignedDigraph& g);

/// Exact minimum-cardinality hitting set of the positive cycles, ties broken
/// by the lexicographically smallest sorted name sequence. Sorted by id.
std::vector<AtomId> min_positive_fvs(const SignedDigraph& g, const Limits& lim = {});

struct Classification {
  bool tight = false;
  bool locally_stratified = false;
  bool well_founded_stratified = false;
  bool neg_cycle_free = false;
  bool pos_cycle_free = false;
  bool quasi_interpretation = false;
  bool positive = false;
};

Classification classify(const Program& p, const Limits& lim = {});

/// DOT export: positive arcs solid, negative arcs dashed and labeled.
std::string to_dot(const SignedDigraph& g);

}  // namespace lpsem
