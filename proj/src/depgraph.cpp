#include "lpsem/depgraph.hpp"

#include <algorithm>
#include <map>
#include <span>

#include "scc.hpp"

namespace lpsem {

SignedDigraph::SignedDigraph(AtomTablePtr vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= vertices_->size() || a.to < 0 || a.to >= vertices_->size())
      throw Error("arc endpoint outside the vertex table");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool SignedDigraph::has_arc(AtomId from, AtomId to, Sign sign) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to, sign});
}

bool SignedDigraph::subgraph_of(const SignedDigraph& other) const {
  if (!same_domain(vertices_, other.vertices_)) return false;
  return std::includes(other.arcs_.begin(), other.arcs_.end(), arcs_.begin(), arcs_.end());
}

bool SignedDigraph::operator==(const SignedDigraph& other) const {
  return same_domain(vertices_, other.vertices_) && arcs_ == other.arcs_;
}

SignedDigraph build_dg(const Program& p) {
  std::vector<Arc> arcs;
  for (const Rule& r : p.rules()) {
    for (AtomId u : r.pbody) arcs.push_back(Arc{u, r.head, Sign::Pos});
    for (AtomId u : r.nbody) arcs.push_back(Arc{u, r.head, Sign::Neg});
  }
  return SignedDigraph(p.atoms_ptr(), std::move(arcs));
}

SignedDigraph build_pdg(const Program& p) {
  std::vector<Arc> arcs;
  for (const Rule& r : p.rules())
    for (AtomId u : r.pbody) arcs.push_back(Arc{u, r.head, Sign::Pos});
  return SignedDigraph(p.atoms_ptr(), std::move(arcs));
}

namespace {

// Sign-blind adjacency, deduplicated; self-loops excluded (handled apart).
std::vector<std::vector<int>> plain_adjacency(const SignedDigraph& g, bool with_self) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
  for (const Arc& a : g.arcs()) {
    if (!with_self && a.from == a.to) continue;
    adj[static_cast<size_t>(a.from)].push_back(a.to);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return adj;
}

bool digraph_has_cycle(const SignedDigraph& g) {
  for (const Arc& a : g.arcs())
    if (a.from == a.to) return true;
  auto adj = plain_adjacency(g, false);
  int n = g.vertex_count();
  std::vector<char> color(static_cast<size_t>(n), 0);  // 0 white, 1 grey, 2 black
  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> st;
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<size_t>(root)] != 0) continue;
    st.push_back({root, 0});
    color[static_cast<size_t>(root)] = 1;
    while (!st.empty()) {
      Frame& f = st.back();
      auto& succs = adj[static_cast<size_t>(f.v)];
      if (f.child < succs.size()) {
        int w = succs[f.child++];
        if (color[static_cast<size_t>(w)] == 1) return true;
        if (color[static_cast<size_t>(w)] == 0) {
          color[static_cast<size_t>(w)] = 1;
          st.push_back({w, 0});
        }
      } else {
        color[static_cast<size_t>(f.v)] = 2;
        st.pop_back();
      }
    }
  }
  return false;
}

bool reaches(const std::vector<std::vector<int>>& adj, int from, int to) {
  if (from == to) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> queue{from};
  seen[static_cast<size_t>(from)] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : adj[static_cast<size_t>(v)]) {
      if (w == to) return true;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

// Johnson-style enumeration of simple cycles, expanded to the arc level when
// parallel arcs of opposite sign exist. Deterministic: start vertices
// ascending, successors ascending, positive sign before negative.
struct CycleScanner {
  const SignedDigraph& g;
  std::int64_t cap;
  const std::function<bool(const Cycle&)>& cb;

  std::vector<std::vector<int>> adj;      // no self-loops
  std::vector<std::vector<int>> adj_scc;  // restricted to the current search scc
  std::vector<char> blocked;
  std::vector<std::vector<int>> blist;
  std::vector<int> path;
  int start = 0;
  std::int64_t emitted = 0;
  bool stopped = false;

  CycleScanner(const SignedDigraph& graph, std::int64_t cycle_cap,
               const std::function<bool(const Cycle&)>& callback)
      : g(graph), cap(cycle_cap), cb(callback), adj(plain_adjacency(graph, false)) {
    size_t n = static_cast<size_t>(g.vertex_count());
    adj_scc.resize(n);
    blocked.assign(n, 0);
    blist.resize(n);
  }

  void emit_arc_cycle(std::vector<Arc> arcs) {
    int neg = 0;
    for (const Arc& a : arcs)
      if (a.sign == Sign::Neg) ++neg;
    if (++emitted > cap)
      throw TooLargeError("simple-cycle enumeration exceeded the cap of " + std::to_string(cap));
    Cycle c{std::move(arcs), (neg % 2 == 1) ? Sign::Neg : Sign::Pos};
    if (!cb(c)) stopped = true;
  }

  // Expands a vertex cycle into every combination of parallel-arc signs.
  void emit_vertex_cycle(const std::vector<int>& vpath) {
    size_t len = vpath.size();
    std::vector<std::vector<Sign>> options(len);
    for (size_t i = 0; i < len; ++i) {
      int u = vpath[i], v = vpath[(i + 1) % len];
      if (g.has_arc(u, v, Sign::Pos)) options[i].push_back(Sign::Pos);
      if (g.has_arc(u, v, Sign::Neg)) options[i].push_back(Sign::Neg);
    }
    std::vector<size_t> choice(len, 0);
    while (!stopped) {
      std::vector<Arc> arcs(len);
      for (size_t i = 0; i < len; ++i)
        arcs[i] = Arc{vpath[i], vpath[(i + 1) % len], options[i][choice[i]]};
      emit_arc_cycle(std::move(arcs));
      size_t i = len;
      while (i > 0) {
        --i;
        if (choice[i] + 1 < options[i].size()) {
          ++choice[i];
          break;
        }
        choice[i] = 0;
        if (i == 0) return;
      }
      if (len == 0) return;
    }
  }

  void unblock(int v) {
    blocked[static_cast<size_t>(v)] = 0;
    std::vector<int> pending;
    pending.swap(blist[static_cast<size_t>(v)]);
    for (int w : pending)
      if (blocked[static_cast<size_t>(w)]) unblock(w);
  }

  bool circuit(int v) {
    bool found = false;
    path.push_back(v);
    blocked[static_cast<size_t>(v)] = 1;
    for (int w : adj_scc[static_cast<size_t>(v)]) {
      if (stopped) break;
      if (w == start) {
        emit_vertex_cycle(path);
        found = true;
      } else if (!blocked[static_cast<size_t>(w)]) {
        if (circuit(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : adj_scc[static_cast<size_t>(v)]) {
        auto& bl = blist[static_cast<size_t>(w)];
        if (std::find(bl.begin(), bl.end(), v) == bl.end()) bl.push_back(v);
      }
    }
    path.pop_back();
    return found;
  }

  void run() {
    int n = g.vertex_count();
    for (int s = 0; s < n && !stopped; ++s) {
      // self-loops first: length-1 cycles
      for (Sign sg : {Sign::Pos, Sign::Neg}) {
        if (stopped) break;
        if (g.has_arc(s, s, sg)) emit_arc_cycle({Arc{s, s, sg}});
      }
      if (stopped) break;
      // strongly connected component of s in the subgraph induced by {s..n-1}
      auto res = detail::tarjan_scc(n, [&](int v) -> std::span<const int> {
        if (v < s) return {};
        return std::span<const int>(adj[static_cast<size_t>(v)]);
      });
      // tarjan sees arcs into vertices < s; drop them by component filtering
      int sc = res.comp_of[static_cast<size_t>(s)];
      int members = 0;
      for (int v = s; v < n; ++v)
        if (res.comp_of[static_cast<size_t>(v)] == sc) ++members;
      if (members < 2) continue;
      for (int v = s; v < n; ++v) {
        auto& restricted = adj_scc[static_cast<size_t>(v)];
        restricted.clear();
        if (res.comp_of[static_cast<size_t>(v)] != sc) continue;
        for (int w : adj[static_cast<size_t>(v)])
          if (w >= s && res.comp_of[static_cast<size_t>(w)] == sc) restricted.push_back(w);
      }
      std::fill(blocked.begin(), blocked.end(), 0);
      for (auto& b : blist) b.clear();
      start = s;
      circuit(s);
    }
  }
};

}  // namespace

void scan_simple_cycles(const SignedDigraph& g, const Limits& lim,
                        const std::function<bool(const Cycle&)>& cb) {
  CycleScanner scanner(g, lim.cycle_cap, cb);
  scanner.run();
}

CycleReport enumerate_simple_cycles(const SignedDigraph& g, const Limits& lim) {
  CycleReport report;
  scan_simple_cycles(g, lim, [&](const Cycle& c) {
    report.cycles.push_back(c);
    return true;
  });
  return report;
}

bool has_positive_cycle(const SignedDigraph& g, const Limits& lim) {
  bool found = false;
  scan_simple_cycles(g, lim, [&](const Cycle& c) {
    if (c.sign == Sign::Pos) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool has_negative_cycle(const SignedDigraph& g, const Limits& lim) {
  bool found = false;
  scan_simple_cycles(g, lim, [&](const Cycle& c) {
    if (c.sign == Sign::Neg) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool has_any_cycle(const SignedDigraph& g) { return digraph_has_cycle(g); }

SccResult sccs(const SignedDigraph& g) {
  auto adj = plain_adjacency(g, true);
  auto raw = detail::tarjan_scc(g.vertex_count(),
                                [&](int v) -> std::span<const int> { return adj[static_cast<size_t>(v)]; });
  // Tarjan emits components in reverse topological order; flip to sources-first.
  int m = static_cast<int>(raw.comps.size());
  SccResult res;
  res.components.resize(static_cast<size_t>(m));
  res.comp_of.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (int c = 0; c < m; ++c) res.components[static_cast<size_t>(c)] = raw.comps[static_cast<size_t>(m - 1 - c)];
  for (int v = 0; v < g.vertex_count(); ++v)
    res.comp_of[static_cast<size_t>(v)] = m - 1 - raw.comp_of[static_cast<size_t>(v)];
  std::map<std::pair<int, int>, std::pair<int, int>> agg;
  for (const Arc& a : g.arcs()) {
    int cf = res.comp_of[static_cast<size_t>(a.from)], ct = res.comp_of[static_cast<size_t>(a.to)];
    if (cf == ct) continue;
    auto& counts = agg[{cf, ct}];
    (a.sign == Sign::Pos ? counts.first : counts.second) += 1;
  }
  for (const auto& [key, counts] : agg)
    res.cond_arcs.push_back(CondArc{key.first, key.second, counts.first, counts.second});
  std::sort(res.cond_arcs.begin(), res.cond_arcs.end());
  return res;
}

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return static_cast<int>(__builtin_popcountll(m)); }

// Greedy count of pairwise-disjoint cycles among `remaining`: a lower bound
// on the hitting-set size.
int disjoint_lower_bound(const std::vector<Mask>& cycles, const std::vector<int>& remaining) {
  Mask taken = 0;
  int count = 0;
  for (int idx : remaining) {
    if ((cycles[static_cast<size_t>(idx)] & taken) == 0) {
      taken |= cycles[static_cast<size_t>(idx)];
      ++count;
    }
  }
  return count;
}

struct FvsSearch {
  const std::vector<Mask>& cycles;
  int best;

  void shrink(Mask chosen, const std::vector<int>& remaining, int chosen_count) {
    if (remaining.empty()) {
      best = std::min(best, chosen_count);
      return;
    }
    if (chosen_count + disjoint_lower_bound(cycles, remaining) >= best) return;
    // branch on the unhit cycle with the fewest vertices
    int pick = remaining[0];
    for (int idx : remaining)
      if (popcount(cycles[static_cast<size_t>(idx)]) < popcount(cycles[static_cast<size_t>(pick)]))
        pick = idx;
    Mask m = cycles[static_cast<size_t>(pick)];
    for (int v = 0; v < 64; ++v) {
      if (!(m & (Mask(1) << v))) continue;
      Mask next_chosen = chosen | (Mask(1) << v);
      std::vector<int> next;
      next.reserve(remaining.size());
      for (int idx : remaining)
        if (!(cycles[static_cast<size_t>(idx)] & (Mask(1) << v))) next.push_back(idx);
      shrink(next_chosen, next, chosen_count + 1);
    }
  }
};

// First hitting set of size k in lexicographic order over name-sorted
// vertex sequences.
struct LexSearch {
  const std::vector<Mask>& cycles;
  const std::vector<int>& by_name;  // candidate vertices in name order
  int k;
  std::vector<int> chosen;
  bool done = false;

  bool feasible(size_t pos, const std::vector<int>& remaining) const {
    if (static_cast<int>(chosen.size()) + disjoint_lower_bound(cycles, remaining) > k) return false;
    Mask suffix = 0;
    for (size_t i = pos; i < by_name.size(); ++i)
      suffix |= Mask(1) << by_name[i];
    for (int idx : remaining)
      if ((cycles[static_cast<size_t>(idx)] & suffix) == 0) return false;
    return true;
  }

  void search(size_t pos, const std::vector<int>& remaining) {
    if (done) return;
    if (remaining.empty()) {
      done = true;
      return;
    }
    if (static_cast<int>(chosen.size()) == k) return;
    if (!feasible(pos, remaining)) return;
    for (size_t i = pos; i < by_name.size() && !done; ++i) {
      int v = by_name[i];
      Mask bit = Mask(1) << v;
      std::vector<int> next;
      next.reserve(remaining.size());
      bool useful = false;
      for (int idx : remaining) {
        if (cycles[static_cast<size_t>(idx)] & bit)
          useful = true;
        else
          next.push_back(idx);
      }
      if (!useful) continue;
      chosen.push_back(v);
      search(i + 1, next);
      if (done) return;
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<AtomId> min_positive_fvs(const SignedDigraph& g, const Limits& lim) {
  if (g.vertex_count() > 64)
    throw TooLargeError("positive feedback vertex set search supports at most 64 vertices");
  std::vector<Mask> cycles;
  scan_simple_cycles(g, lim, [&](const Cycle& c) {
    if (c.sign == Sign::Pos) {
      Mask m = 0;
      for (const Arc& a : c.arcs) m |= Mask(1) << a.from;
      cycles.push_back(m);
    }
    return true;
  });
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  // keep inclusion-minimal vertex sets only (quadratic; skip when huge)
  if (cycles.size() <= 5000) {
    std::vector<Mask> minimal;
    for (Mask m : cycles) {
      bool dominated = false;
      for (Mask o : cycles)
        if (o != m && (o & m) == o) {
          dominated = true;
          break;
        }
      if (!dominated) minimal.push_back(m);
    }
    cycles = std::move(minimal);
  }
  if (cycles.empty()) return {};

  // greedy cover upper bound
  std::vector<int> all(cycles.size());
  for (size_t i = 0; i < cycles.size(); ++i) all[i] = static_cast<int>(i);
  {
    std::vector<int> remaining = all;
    int greedy = 0;
    while (!remaining.empty()) {
      int best_v = -1, best_hits = -1;
      for (int v = 0; v < g.vertex_count(); ++v) {
        int hits = 0;
        for (int idx : remaining)
          if (cycles[static_cast<size_t>(idx)] & (Mask(1) << v)) ++hits;
        if (hits > best_hits) {
          best_hits = hits;
          best_v = v;
        }
      }
      std::vector<int> next;
      for (int idx : remaining)
        if (!(cycles[static_cast<size_t>(idx)] & (Mask(1) << best_v))) next.push_back(idx);
      remaining = std::move(next);
      ++greedy;
    }
    FvsSearch bb{cycles, greedy};
    bb.shrink(0, all, 0);
    greedy = bb.best;

    // lexicographically smallest among the minimum-size hitting sets
    Mask candidates = 0;
    for (Mask m : cycles) candidates |= m;
    std::vector<int> by_name;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (candidates & (Mask(1) << v)) by_name.push_back(v);
    std::sort(by_name.begin(), by_name.end(), [&](int a, int b) {
      return g.vertices().name(a) < g.vertices().name(b);
    });
    LexSearch lex{cycles, by_name, greedy, {}, false};
    lex.search(0, all);
    std::vector<AtomId> out = lex.chosen;
    std::sort(out.begin(), out.end());
    return out;
  }
}

Classification classify(const Program& p, const Limits& lim) {
  Classification c;
  SignedDigraph dg = build_dg(p);
  SignedDigraph pdg = build_pdg(p);

  c.quasi_interpretation = true;
  c.positive = true;
  for (const Rule& r : p.rules()) {
    if (!r.pbody.empty()) c.quasi_interpretation = false;
    if (!r.nbody.empty()) c.positive = false;
  }

  c.tight = !digraph_has_cycle(pdg);

  // locally stratified: no negative arc lies on any cycle
  auto adj = plain_adjacency(dg, true);
  c.locally_stratified = true;
  for (const Arc& a : dg.arcs()) {
    if (a.sign != Sign::Neg) continue;
    if (reaches(adj, a.to, a.from)) {
      c.locally_stratified = false;
      break;
    }
  }

  bool pos_found = false, neg_found = false;
  scan_simple_cycles(dg, lim, [&](const Cycle& cy) {
    (cy.sign == Sign::Pos ? pos_found : neg_found) = true;
    return !(pos_found && neg_found);
  });
  c.pos_cycle_free = !pos_found;
  c.neg_cycle_free = !neg_found;

  // well-founded stratification, finite form: every source component of the
  // condensation carries no internal negative arc
  SccResult scc = sccs(dg);
  std::vector<char> has_pred(scc.components.size(), 0);
  for (const CondArc& ca : scc.cond_arcs) has_pred[static_cast<size_t>(ca.to)] = 1;
  std::vector<char> internal_neg(scc.components.size(), 0);
  for (const Arc& a : dg.arcs()) {
    int cf = scc.comp_of[static_cast<size_t>(a.from)], ct = scc.comp_of[static_cast<size_t>(a.to)];
    if (cf == ct && a.sign == Sign::Neg) internal_neg[static_cast<size_t>(cf)] = 1;
  }
  c.well_founded_stratified = true;
  for (size_t i = 0; i < scc.components.size(); ++i)
    if (!has_pred[i] && internal_neg[i]) c.well_founded_stratified = false;

  return c;
}

std::string to_dot(const SignedDigraph& g) {
  std::string out = "digraph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out += "  \"" + g.vertices().name(v) + "\";\n";
  for (const Arc& a : g.arcs()) {
    out += "  \"" + g.vertices().name(a.from) + "\" -> \"" + g.vertices().name(a.to) + "\"";
    if (a.sign == Sign::Neg) out += " [style=dashed, label=\"⊖\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace lpsem
