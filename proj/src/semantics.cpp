#include "lpsem/semantics.hpp"

#include <algorithm>
#include <cassert>

namespace lpsem {

std::vector<AtomId> formula_support(const Formula& f) {
  std::vector<AtomId> out;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    if (cur->kind == Formula::Kind::Atom) out.push_back(cur->atom);
    for (const Formula& c : cur->children) stack.push_back(&c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// precedence: or < and < not/leaf
std::string render(const Formula& f, const AtomTable& atoms, int parent_level) {
  auto wrap = [&](const std::string& s, int level) {
    return level < parent_level ? "(" + s + ")" : s;
  };
  switch (f.kind) {
    case Formula::Kind::Atom:
      return atoms.name(f.atom);
    case Formula::Kind::U:
      return "u";
    case Formula::Kind::Not:
      return "!" + render(f.children[0], atoms, 2);
    case Formula::Kind::And: {
      if (f.children.empty()) return "1";
      if (f.children.size() == 1) return render(f.children[0], atoms, parent_level);
      std::string s;
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) s += " & ";
        s += render(f.children[i], atoms, 1);
      }
      return wrap(s, 1);
    }
    case Formula::Kind::Or: {
      if (f.children.empty()) return "0";
      if (f.children.size() == 1) return render(f.children[0], atoms, parent_level);
      std::string s;
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) s += " | ";
        s += render(f.children[i], atoms, 0);
      }
      return wrap(s, 0);
    }
  }
  return "?";
}

}  // namespace

std::string formula_to_string(const Formula& f, const AtomTable& atoms) {
  return render(f, atoms, 0);
}

static Tri eval3_raw(const Tri* vals, int n, const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      if (f.atom < 0 || f.atom >= n) throw DomainMismatchError("formula references an unknown atom");
      return vals[f.atom];
    case Formula::Kind::U:
      return Tri::U;
    case Formula::Kind::Not:
      return tri_not(eval3_raw(vals, n, f.children[0]));
    case Formula::Kind::And: {
      Tri v = Tri::T;
      for (const Formula& c : f.children) {
        v = tri_and(v, eval3_raw(vals, n, c));
        if (v == Tri::F) break;
      }
      return v;
    }
    case Formula::Kind::Or: {
      Tri v = Tri::F;
      for (const Formula& c : f.children) {
        v = tri_or(v, eval3_raw(vals, n, c));
        if (v == Tri::T) break;
      }
      return v;
    }
  }
  return Tri::U;
}

Tri eval3(const Interp3& i, const Formula& f) {
  return eval3_raw(i.vals().data(), i.size(), f);
}

bool eval2(const Interp2& i, const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      if (f.atom < 0 || f.atom >= i.size())
        throw DomainMismatchError("formula references an unknown atom");
      return i.get(f.atom);
    case Formula::Kind::U:
      throw Error("2-valued evaluation of a formula with an undefined leaf");
    case Formula::Kind::Not:
      return !eval2(i, f.children[0]);
    case Formula::Kind::And:
      for (const Formula& c : f.children)
        if (!eval2(i, c)) return false;
      return true;
    case Formula::Kind::Or:
      for (const Formula& c : f.children)
        if (eval2(i, c)) return true;
      return false;
  }
  return false;
}

Formula body_formula(const Rule& r) {
  std::vector<Formula> parts;
  parts.reserve(r.pbody.size() + r.nbody.size());
  for (AtomId a : r.pbody) parts.push_back(Formula::atom_ref(a));
  for (AtomId a : r.nbody) parts.push_back(Formula::negate(Formula::atom_ref(a)));
  return Formula::conj(std::move(parts));
}

Completion clark_completion(const Program& p) {
  Completion c;
  c.atoms = p.atoms_ptr();
  std::vector<std::vector<Formula>> bodies(static_cast<size_t>(p.atom_count()));
  for (const Rule& r : p.rules()) bodies[static_cast<size_t>(r.head)].push_back(body_formula(r));
  c.rhs.reserve(bodies.size());
  for (auto& b : bodies) c.rhs.push_back(Formula::disj(std::move(b)));
  return c;
}

ReductProgram reduct3(const Program& p, const Interp3& i) {
  require_same_domain(p.atoms_ptr(), i.atoms_ptr());
  ReductProgram rp;
  rp.atoms = p.atoms_ptr();
  for (const Rule& r : p.rules()) {
    bool removed = false;
    bool has_u = false;
    for (AtomId b : r.nbody) {
      Tri v = i.get(b);
      if (v == Tri::T) {
        removed = true;
        break;
      }
      if (v == Tri::U) has_u = true;
    }
    if (removed) continue;
    rp.rules.push_back(ReductRule{r.head, r.pbody, has_u});
  }
  return rp;
}

namespace {

// Flattened view of a program's rules for the fixpoint sweeps; the scratch
// buffers let the 3^n enumeration run without per-candidate allocation.
struct EvalContext {
  int n_atoms = 0;
  struct FlatRule {
    AtomId head;
    const AtomId* pbegin;
    const AtomId* pend;
    const AtomId* nbegin;
    const AtomId* nend;
  };
  std::vector<FlatRule> rules;
  std::vector<std::vector<int>> rules_by_head;
  std::vector<Tri> cur;
  std::vector<std::uint8_t> removed;
  std::vector<std::uint8_t> has_u;

  explicit EvalContext(const Program& p) : n_atoms(p.atom_count()) {
    rules.reserve(p.rules().size());
    rules_by_head.resize(static_cast<size_t>(n_atoms));
    for (const Rule& r : p.rules()) {
      rules_by_head[static_cast<size_t>(r.head)].push_back(static_cast<int>(rules.size()));
      rules.push_back(FlatRule{r.head, r.pbody.data(), r.pbody.data() + r.pbody.size(),
                               r.nbody.data(), r.nbody.data() + r.nbody.size()});
    }
    cur.resize(static_cast<size_t>(n_atoms));
    removed.resize(rules.size());
    has_u.resize(rules.size());
  }
};

// Least 3-valued model of the positive residue selected by the removed/has_u
// flags. When `bound` is given the sweep aborts as soon as some atom climbs
// above bound's value in the truth order, since the result could then no
// longer equal bound.
bool least3_sweep(EvalContext& ctx, const Tri* bound) {
  std::fill(ctx.cur.begin(), ctx.cur.end(), Tri::F);
  while (true) {
    bool changed = false;
    for (int a = 0; a < ctx.n_atoms; ++a) {
      Tri best = Tri::F;
      for (int ri : ctx.rules_by_head[static_cast<size_t>(a)]) {
        if (ctx.removed[static_cast<size_t>(ri)]) continue;
        const auto& r = ctx.rules[static_cast<size_t>(ri)];
        Tri v = ctx.has_u[static_cast<size_t>(ri)] ? Tri::U : Tri::T;
        for (const AtomId* p = r.pbegin; p != r.pend && v != Tri::F; ++p)
          v = tri_and(v, ctx.cur[static_cast<size_t>(*p)]);
        best = tri_or(best, v);
        if (best == Tri::T) break;
      }
      if (best != ctx.cur[static_cast<size_t>(a)]) {
        ctx.cur[static_cast<size_t>(a)] = best;
        changed = true;
        if (bound && truth_rank(best) > truth_rank(bound[a])) return false;
      }
    }
    if (!changed) return true;
  }
}

bool stable_at(EvalContext& ctx, const Tri* vals) {
  for (size_t ri = 0; ri < ctx.rules.size(); ++ri) {
    const auto& r = ctx.rules[ri];
    bool removed = false, has_u = false;
    for (const AtomId* b = r.nbegin; b != r.nend; ++b) {
      Tri v = vals[*b];
      if (v == Tri::T) {
        removed = true;
        break;
      }
      if (v == Tri::U) has_u = true;
    }
    ctx.removed[ri] = removed ? 1 : 0;
    ctx.has_u[ri] = (!removed && has_u) ? 1 : 0;
  }
  if (!least3_sweep(ctx, vals)) return false;
  for (int a = 0; a < ctx.n_atoms; ++a)
    if (ctx.cur[static_cast<size_t>(a)] != vals[a]) return false;
  return true;
}

void decode_interp3(std::uint64_t idx, int n, Tri* out) {
  static constexpr Tri kDigit[3] = {Tri::T, Tri::F, Tri::U};  // canonical digit order
  for (int a = n - 1; a >= 0; --a) {
    out[a] = kDigit[idx % 3];
    idx /= 3;
  }
}

void require_3v(int n, const Limits& lim) {
  if (n > lim.max_atoms_3v)
    throw TooLargeError("enumeration over 3^" + std::to_string(n) +
                        " interpretations exceeds the limit of 3^" +
                        std::to_string(lim.max_atoms_3v));
}

// Sweeps all 3^n interpretations in canonical order and keeps those accepted
// by pred; parallel chunks are concatenated in order, so the result is
// deterministic regardless of the job count.
template <class MakeWorker>
std::vector<Interp3> filter_interp3(const AtomTablePtr& atoms, const Limits& lim,
                                    MakeWorker&& make_worker) {
  int n = atoms->size();
  require_3v(n, lim);
  std::uint64_t total = pow3(n);
  int jobs = std::max(1, lim.jobs);
  std::vector<std::vector<Interp3>> partial(static_cast<size_t>(jobs));
  parallel_ranges(total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    auto pred = make_worker();
    std::vector<Tri> vals(static_cast<size_t>(n));
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      decode_interp3(idx, n, vals.data());
      if (pred(vals.data()))
        partial[static_cast<size_t>(chunk)].emplace_back(atoms, vals);
    }
  });
  std::vector<Interp3> out;
  for (auto& chunk : partial)
    for (auto& i : chunk) out.push_back(std::move(i));
  return out;
}

}  // namespace

Interp3 least3_model_positive(const ReductProgram& rp) {
  int n = rp.atoms->size();
  std::vector<Tri> cur(static_cast<size_t>(n), Tri::F);
  std::vector<std::vector<int>> by_head(static_cast<size_t>(n));
  for (size_t ri = 0; ri < rp.rules.size(); ++ri)
    by_head[static_cast<size_t>(rp.rules[ri].head)].push_back(static_cast<int>(ri));
  while (true) {
    bool changed = false;
    for (int a = 0; a < n; ++a) {
      Tri best = Tri::F;
      for (int ri : by_head[static_cast<size_t>(a)]) {
        const ReductRule& r = rp.rules[static_cast<size_t>(ri)];
        Tri v = r.has_u ? Tri::U : Tri::T;
        for (AtomId p : r.pbody) {
          v = tri_and(v, cur[static_cast<size_t>(p)]);
          if (v == Tri::F) break;
        }
        best = tri_or(best, v);
        if (best == Tri::T) break;
      }
      if (best != cur[static_cast<size_t>(a)]) {
        cur[static_cast<size_t>(a)] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return Interp3(rp.atoms, std::move(cur));
}

bool is_stable_partial_model(const Program& p, const Interp3& i) {
  require_same_domain(p.atoms_ptr(), i.atoms_ptr());
  EvalContext ctx(p);
  return stable_at(ctx, i.vals().data());
}

std::vector<Interp3> stable_partial_models(const Program& p, const Limits& lim) {
  return filter_interp3(p.atoms_ptr(), lim, [&p]() {
    return [ctx = std::make_shared<EvalContext>(p)](const Tri* vals) {
      return stable_at(*ctx, vals);
    };
  });
}

std::vector<Interp3> supported_partial_models(const Program& p, const Limits& lim) {
  Completion c = clark_completion(p);
  int n = p.atom_count();
  return filter_interp3(p.atoms_ptr(), lim, [&c, n]() {
    return [&c, n](const Tri* vals) {
      for (int a = 0; a < n; ++a)
        if (eval3_raw(vals, n, c.rhs[static_cast<size_t>(a)]) != vals[a]) return false;
      return true;
    };
  });
}

std::vector<Interp3> s_minimal(const std::vector<Interp3>& set) {
  std::vector<Interp3> out;
  for (const Interp3& i : set) {
    bool minimal = true;
    for (const Interp3& j : set) {
      if (&i == &j) continue;
      if (leq_s(j, i) && !(j == i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<Interp3> regular_models(const Program& p, const Limits& lim) {
  return s_minimal(stable_partial_models(p, lim));
}

std::vector<Interp2> stable_models(const Program& p, const Limits& lim) {
  int n = p.atom_count();
  if (n > lim.max_atoms_2v)
    throw TooLargeError("enumeration over 2^" + std::to_string(n) +
                        " interpretations exceeds the limit of 2^" +
                        std::to_string(lim.max_atoms_2v));
  EvalContext ctx(p);
  std::vector<Tri> vals(static_cast<size_t>(n));
  std::vector<Interp2> out;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    for (int a = 0; a < n; ++a)
      vals[static_cast<size_t>(a)] = ((s >> a) & 1u) ? Tri::T : Tri::F;
    if (stable_at(ctx, vals.data())) out.push_back(Interp2::from_index(p.atoms_ptr(), s));
  }
  std::sort(out.begin(), out.end(),
            [](const Interp2& a, const Interp2& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace lpsem
