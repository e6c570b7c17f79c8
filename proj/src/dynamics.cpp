#include "lpsem/dynamics.hpp"

#include <algorithm>

namespace lpsem {

Interp2 tp_step(const Program& p, const Interp2& j) {
  require_same_domain(p.atoms_ptr(), j.atoms_ptr());
  std::vector<std::uint8_t> out(static_cast<size_t>(p.atom_count()), 0);
  for (const Rule& r : p.rules()) {
    if (out[static_cast<size_t>(r.head)]) continue;
    bool body = true;
    for (AtomId a : r.pbody)
      if (!j.get(a)) {
        body = false;
        break;
      }
    if (body)
      for (AtomId a : r.nbody)
        if (j.get(a)) {
          body = false;
          break;
        }
    if (body) out[static_cast<size_t>(r.head)] = 1;
  }
  return Interp2(p.atoms_ptr(), std::move(out));
}

Interp2 fp_step(const Program& p, const Interp2& j) {
  require_same_domain(p.atoms_ptr(), j.atoms_ptr());
  // 2-valued reduct: keep rules with no true negated atom, drop negations
  std::vector<const Rule*> active;
  for (const Rule& r : p.rules()) {
    bool removed = false;
    for (AtomId a : r.nbody)
      if (j.get(a)) {
        removed = true;
        break;
      }
    if (!removed) active.push_back(&r);
  }
  std::vector<std::uint8_t> cur(static_cast<size_t>(p.atom_count()), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule* r : active) {
      if (cur[static_cast<size_t>(r->head)]) continue;
      bool body = true;
      for (AtomId a : r->pbody)
        if (!cur[static_cast<size_t>(a)]) {
          body = false;
          break;
        }
      if (body) {
        cur[static_cast<size_t>(r->head)] = 1;
        changed = true;
      }
    }
  }
  return Interp2(p.atoms_ptr(), std::move(cur));
}

namespace {

struct MaskRule {
  int head;
  std::uint32_t pmask;
  std::uint32_t nmask;
};

std::vector<MaskRule> mask_rules(const Program& p) {
  std::vector<MaskRule> out;
  out.reserve(p.rules().size());
  for (const Rule& r : p.rules()) {
    MaskRule m{r.head, 0, 0};
    for (AtomId a : r.pbody) m.pmask |= std::uint32_t(1) << a;
    for (AtomId a : r.nbody) m.nmask |= std::uint32_t(1) << a;
    out.push_back(m);
  }
  return out;
}

std::uint32_t tp_index(const std::vector<MaskRule>& rules, std::uint32_t s) {
  std::uint32_t out = 0;
  for (const MaskRule& r : rules)
    if ((s & r.pmask) == r.pmask && (s & r.nmask) == 0) out |= std::uint32_t(1) << r.head;
  return out;
}

std::uint32_t fp_index(const std::vector<MaskRule>& rules, std::uint32_t s) {
  std::uint32_t cur = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const MaskRule& r : rules) {
      if ((s & r.nmask) != 0) continue;
      std::uint32_t bit = std::uint32_t(1) << r.head;
      if ((cur & bit) == 0 && (cur & r.pmask) == r.pmask) {
        cur |= bit;
        changed = true;
      }
    }
  }
  return cur;
}

void require_2v(int n, const Limits& lim) {
  if (n > lim.max_atoms_2v)
    throw TooLargeError("state space of 2^" + std::to_string(n) +
                        " states exceeds the limit of 2^" + std::to_string(lim.max_atoms_2v));
  if (n > 28) throw TooLargeError("state-space tables support at most 28 atoms");
}

template <class StepFn>
TransitionGraph build_table(const Program& p, const Limits& lim, StepFn&& step) {
  int n = p.atom_count();
  require_2v(n, lim);
  TransitionGraph g;
  g.n = n;
  g.atoms = p.atoms_ptr();
  g.succ.resize(size_t(1) << n);
  auto rules = mask_rules(p);
  parallel_ranges(std::uint64_t(1) << n, lim.jobs,
                  [&](int, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t s = begin; s < end; ++s)
                      g.succ[s] = step(rules, static_cast<std::uint32_t>(s));
                  });
  return g;
}

}  // namespace

TransitionGraph build_tgsp(const Program& p, const Limits& lim) {
  return build_table(p, lim, [](const std::vector<MaskRule>& r, std::uint32_t s) {
    return tp_index(r, s);
  });
}

TransitionGraph build_tgst(const Program& p, const Limits& lim) {
  return build_table(p, lim, [](const std::vector<MaskRule>& r, std::uint32_t s) {
    return fp_index(r, s);
  });
}

namespace {

template <class StepFn>
bool trap_space_member(const Program& p, const Interp3& i, const Limits& lim, StepFn&& step) {
  require_same_domain(p.atoms_ptr(), i.atoms_ptr());
  std::vector<int> upos;
  for (int a = 0; a < i.size(); ++a)
    if (i.get(a) == Tri::U) upos.push_back(a);
  if (static_cast<int>(upos.size()) > lim.max_atoms_2v)
    throw TooLargeError("trap-space membership would enumerate 2^" +
                        std::to_string(upos.size()) + " states");
  std::vector<std::uint8_t> base(static_cast<size_t>(i.size()), 0);
  for (int a = 0; a < i.size(); ++a)
    if (i.get(a) == Tri::T) base[static_cast<size_t>(a)] = 1;
  for (std::uint64_t c = 0; c < (std::uint64_t(1) << upos.size()); ++c) {
    std::vector<std::uint8_t> bits = base;
    for (size_t k = 0; k < upos.size(); ++k)
      bits[static_cast<size_t>(upos[k])] = (c >> k) & 1u;
    Interp2 next = step(p, Interp2(i.atoms_ptr(), std::move(bits)));
    for (int a = 0; a < i.size(); ++a) {
      Tri v = i.get(a);
      if (v == Tri::U) continue;
      if (next.get(a) != (v == Tri::T)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_stable_trap_space(const Program& p, const Interp3& i, const Limits& lim) {
  return trap_space_member(p, i, lim, [](const Program& pr, const Interp2& j) {
    return fp_step(pr, j);
  });
}

bool is_supported_trap_space(const Program& p, const Interp3& i, const Limits& lim) {
  return trap_space_member(p, i, lim, [](const Program& pr, const Interp2& j) {
    return tp_step(pr, j);
  });
}

std::vector<Interp3> closed_subspaces(const AtomTablePtr& atoms,
                                      const std::vector<std::uint32_t>& succ, const Limits& lim) {
  int n = atoms->size();
  if (n > lim.max_atoms_3v)
    throw TooLargeError("sub-space enumeration over 3^" + std::to_string(n) +
                        " exceeds the limit of 3^" + std::to_string(lim.max_atoms_3v));
  if (succ.size() != (size_t(1) << n)) throw Error("successor table has the wrong size");
  static constexpr Tri kDigit[3] = {Tri::T, Tri::F, Tri::U};
  std::uint64_t total = pow3(n);
  int jobs = std::max(1, lim.jobs);
  std::vector<std::vector<Interp3>> partial(static_cast<size_t>(jobs));
  parallel_ranges(total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    std::vector<Tri> vals(static_cast<size_t>(n));
    const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t d = idx;
      for (int a = n - 1; a >= 0; --a) {
        vals[static_cast<size_t>(a)] = kDigit[d % 3];
        d /= 3;
      }
      std::uint32_t defined = 0, tvals = 0;
      for (int a = 0; a < n; ++a) {
        if (vals[static_cast<size_t>(a)] == Tri::U) continue;
        defined |= std::uint32_t(1) << a;
        if (vals[static_cast<size_t>(a)] == Tri::T) tvals |= std::uint32_t(1) << a;
      }
      std::uint32_t free = full & ~defined;
      bool closed = true;
      std::uint32_t sub = free;
      while (true) {
        std::uint32_t s = tvals | sub;
        if ((succ[s] & defined) != tvals) {
          closed = false;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & free;
      }
      if (closed) partial[static_cast<size_t>(chunk)].emplace_back(atoms, vals);
    }
  });
  std::vector<Interp3> out;
  for (auto& chunk : partial)
    for (auto& i : chunk) out.push_back(std::move(i));
  return out;
}

std::vector<Interp3> stable_trap_spaces(const Program& p, const Limits& lim) {
  TransitionGraph g = build_tgst(p, lim);
  return closed_subspaces(p.atoms_ptr(), g.succ, lim);
}

std::vector<Interp3> supported_trap_spaces(const Program& p, const Limits& lim) {
  TransitionGraph g = build_tgsp(p, lim);
  return closed_subspaces(p.atoms_ptr(), g.succ, lim);
}

std::vector<Interp3> min_stable_trap_spaces(const Program& p, const Limits& lim) {
  return s_minimal(stable_trap_spaces(p, lim));
}

std::string state_label(const AtomTable& atoms, std::uint64_t state) {
  std::string out;
  for (int a = 0; a < atoms.size(); ++a) {
    if ((state >> a) & 1u) {
      if (!out.empty()) out += ", ";
      out += atoms.name(a);
    }
  }
  if (out.empty()) return "∅";
  return "{" + out + "}";
}

std::string to_dot(const TransitionGraph& g) {
  std::string out = "digraph tg {\n";
  for (size_t s = 0; s < g.succ.size(); ++s)
    out += "  s" + std::to_string(s) + " [label=\"" + state_label(*g.atoms, s) + "\"];\n";
  for (size_t s = 0; s < g.succ.size(); ++s)
    out += "  s" + std::to_string(s) + " -> s" + std::to_string(g.succ[s]) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace lpsem
