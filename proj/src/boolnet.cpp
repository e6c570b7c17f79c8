#include "lpsem/boolnet.hpp"

#include <algorithm>
#include <cctype>
#include <span>

#include "lpsem/parser.hpp"
#include "scc.hpp"

namespace lpsem {

BooleanNetwork encode_bn(const Program& p) {
  BooleanNetwork f;
  f.vars = p.atoms_ptr();
  std::vector<std::vector<Formula>> bodies(static_cast<size_t>(p.atom_count()));
  for (const Rule& r : p.rules()) bodies[static_cast<size_t>(r.head)].push_back(body_formula(r));
  f.funcs.reserve(bodies.size());
  for (auto& b : bodies) f.funcs.push_back(Formula::disj(std::move(b)));
  return f;
}

SignedDigraph influence_graph(const BooleanNetwork& f, const Limits& lim) {
  std::vector<Arc> arcs;
  int n = f.vars->size();
  for (int v = 0; v < n; ++v) {
    std::vector<AtomId> support = formula_support(f.funcs[static_cast<size_t>(v)]);
    int k = static_cast<int>(support.size());
    if (k > lim.max_atoms_2v)
      throw TooLargeError("influence witnesses for '" + f.vars->name(v) + "' would sweep 2^" +
                          std::to_string(k) + " states");
    for (AtomId u : support) {
      bool pos = false, neg = false;
      std::vector<std::uint8_t> bits(static_cast<size_t>(n), 0);
      // sweep assignments of the support with u pinned to 0 then flipped
      for (std::uint64_t c = 0; c < (std::uint64_t(1) << (k - 1)) && !(pos && neg); ++c) {
        std::uint64_t rest = c;
        for (AtomId w : support) {
          if (w == u) continue;
          bits[static_cast<size_t>(w)] = rest & 1u;
          rest >>= 1;
        }
        bits[static_cast<size_t>(u)] = 0;
        bool v0 = eval2(Interp2(f.vars, bits), f.funcs[static_cast<size_t>(v)]);
        bits[static_cast<size_t>(u)] = 1;
        bool v1 = eval2(Interp2(f.vars, bits), f.funcs[static_cast<size_t>(v)]);
        if (!v0 && v1) pos = true;
        if (v0 && !v1) neg = true;
      }
      if (pos) arcs.push_back(Arc{u, v, Sign::Pos});
      if (neg) arcs.push_back(Arc{u, v, Sign::Neg});
    }
  }
  return SignedDigraph(f.vars, std::move(arcs));
}

namespace {

void require_2v(int n, const Limits& lim) {
  if (n > lim.max_atoms_2v)
    throw TooLargeError("state space of 2^" + std::to_string(n) +
                        " states exceeds the limit of 2^" + std::to_string(lim.max_atoms_2v));
  if (n > 28) throw TooLargeError("state-space tables support at most 28 variables");
}

}  // namespace

TransitionGraph sync_stg(const BooleanNetwork& f, const Limits& lim) {
  int n = f.vars->size();
  require_2v(n, lim);
  TransitionGraph g;
  g.n = n;
  g.atoms = f.vars;
  g.succ.resize(size_t(1) << n);
  parallel_ranges(std::uint64_t(1) << n, lim.jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      Interp2 state = Interp2::from_index(f.vars, s);
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (eval2(state, f.funcs[static_cast<size_t>(v)])) next |= std::uint32_t(1) << v;
      g.succ[s] = next;
    }
  });
  return g;
}

NondetTransitionGraph async_stg(const BooleanNetwork& f, const Limits& lim) {
  int n = f.vars->size();
  require_2v(n, lim);
  NondetTransitionGraph g;
  g.n = n;
  g.vars = f.vars;
  g.succs.resize(size_t(1) << n);
  parallel_ranges(std::uint64_t(1) << n, lim.jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      Interp2 state = Interp2::from_index(f.vars, s);
      auto& out = g.succs[s];
      for (int v = 0; v < n; ++v) {
        bool cur = (s >> v) & 1u;
        bool next = eval2(state, f.funcs[static_cast<size_t>(v)]);
        if (next != cur) out.push_back(static_cast<std::uint32_t>(s ^ (std::uint64_t(1) << v)));
      }
      if (out.empty())
        out.push_back(static_cast<std::uint32_t>(s));  // fixed point
      else
        std::sort(out.begin(), out.end());
    }
  });
  return g;
}

namespace {

template <class AdjFn>
std::vector<std::vector<std::uint32_t>> terminal_sccs(int n_states, AdjFn&& adj) {
  auto res = detail::tarjan_scc(n_states, adj);
  std::vector<char> terminal(res.comps.size(), 1);
  for (int v = 0; v < n_states; ++v) {
    int c = res.comp_of[static_cast<size_t>(v)];
    for (auto w : adj(v))
      if (res.comp_of[static_cast<size_t>(w)] != c) terminal[static_cast<size_t>(c)] = 0;
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (size_t c = 0; c < res.comps.size(); ++c) {
    if (!terminal[c]) continue;
    std::vector<std::uint32_t> states(res.comps[c].begin(), res.comps[c].end());
    out.push_back(std::move(states));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> attractors(const TransitionGraph& g) {
  return terminal_sccs(static_cast<int>(g.succ.size()), [&](int v) {
    return std::span<const std::uint32_t>(&g.succ[static_cast<size_t>(v)], 1);
  });
}

std::vector<std::vector<std::uint32_t>> attractors(const NondetTransitionGraph& g) {
  return terminal_sccs(static_cast<int>(g.succs.size()), [&](int v) {
    return std::span<const std::uint32_t>(g.succs[static_cast<size_t>(v)]);
  });
}

std::vector<Interp3> trap_spaces(const BooleanNetwork& f, const Limits& lim) {
  TransitionGraph g = sync_stg(f, lim);
  return closed_subspaces(f.vars, g.succ, lim);
}

std::vector<Interp3> min_trap_spaces(const BooleanNetwork& f, const Limits& lim) {
  return s_minimal(trap_spaces(f, lim));
}

namespace {

struct BnCursor {
  std::string_view line;
  size_t pos = 0;
  int line_no = 1;

  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }
  bool eof() const { return pos >= line.size(); }
  char peek() const { return line[pos]; }
  [[noreturn]] void fail(const std::string& msg, int length = 1) const {
    throw ParseError(msg, SourceSpan{line_no, static_cast<int>(pos) + 1, length});
  }
};

bool is_var_start(char c) { return (c >= 'a' && c <= 'z'); }
bool is_var_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string lex_var(BnCursor& cur) {
  if (cur.eof() || !is_var_start(cur.peek()))
    cur.fail("expected a variable name (matching [a-z][a-zA-Z0-9_]*)");
  std::string name;
  while (!cur.eof() && is_var_char(cur.peek())) {
    name.push_back(cur.peek());
    ++cur.pos;
  }
  return name;
}

Formula parse_or(BnCursor& cur, AtomTable& vars);

Formula parse_factor(BnCursor& cur, AtomTable& vars) {
  cur.skip_ws();
  if (cur.eof()) cur.fail("unexpected end of line in expression");
  char c = cur.peek();
  if (c == '!') {
    ++cur.pos;
    return Formula::negate(parse_factor(cur, vars));
  }
  if (c == '(') {
    ++cur.pos;
    Formula f = parse_or(cur, vars);
    cur.skip_ws();
    if (cur.eof() || cur.peek() != ')') cur.fail("expected ')'");
    ++cur.pos;
    return f;
  }
  if (c == '0') {
    ++cur.pos;
    return Formula::constant(false);
  }
  if (c == '1') {
    ++cur.pos;
    return Formula::constant(true);
  }
  return Formula::atom_ref(vars.intern(lex_var(cur)));
}

Formula parse_and(BnCursor& cur, AtomTable& vars) {
  Formula f = parse_factor(cur, vars);
  cur.skip_ws();
  if (cur.eof() || cur.peek() != '&') return f;
  std::vector<Formula> parts{std::move(f)};
  while (!cur.eof() && cur.peek() == '&') {
    ++cur.pos;
    parts.push_back(parse_factor(cur, vars));
    cur.skip_ws();
  }
  return Formula::conj(std::move(parts));
}

Formula parse_or(BnCursor& cur, AtomTable& vars) {
  Formula f = parse_and(cur, vars);
  cur.skip_ws();
  if (cur.eof() || cur.peek() != '|') return f;
  std::vector<Formula> parts{std::move(f)};
  while (!cur.eof() && cur.peek() == '|') {
    ++cur.pos;
    parts.push_back(parse_and(cur, vars));
    cur.skip_ws();
  }
  return Formula::disj(std::move(parts));
}

}  // namespace

BooleanNetwork parse_bn(std::string_view text) {
  auto vars = std::make_shared<AtomTable>();
  std::vector<std::pair<AtomId, Formula>> defs;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    ++line_no;
    start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    BnCursor cur{line, 0, line_no};
    cur.skip_ws();
    if (cur.eof() || cur.peek() == '#') continue;
    std::string lhs = lex_var(cur);
    AtomId v = vars->intern(lhs);
    cur.skip_ws();
    if (cur.eof() || cur.peek() != '=') cur.fail("expected '=' after the variable name");
    ++cur.pos;
    Formula f = parse_or(cur, *vars);
    cur.skip_ws();
    if (!cur.eof()) cur.fail("trailing input after the expression");
    for (const auto& d : defs)
      if (d.first == v)
        throw ParseError("duplicate definition of variable '" + lhs + "'",
                         SourceSpan{line_no, 1, static_cast<int>(lhs.size())});
    defs.emplace_back(v, std::move(f));
  }
  BooleanNetwork f;
  f.funcs.resize(static_cast<size_t>(vars->size()), Formula::constant(false));
  std::vector<char> defined(static_cast<size_t>(vars->size()), 0);
  for (auto& d : defs) {
    f.funcs[static_cast<size_t>(d.first)] = std::move(d.second);
    defined[static_cast<size_t>(d.first)] = 1;
  }
  for (int v = 0; v < vars->size(); ++v)
    if (!defined[static_cast<size_t>(v)])
      throw ParseError("variable '" + vars->name(v) + "' has no update function",
                       SourceSpan{line_no, 1, 1});
  f.vars = AtomTablePtr(std::move(vars));
  return f;
}

std::string serialize_bn(const BooleanNetwork& f) {
  std::string out;
  for (int v = 0; v < f.vars->size(); ++v) {
    out += f.vars->name(v);
    out += " = ";
    out += formula_to_string(f.funcs[static_cast<size_t>(v)], *f.vars);
    out += "\n";
  }
  return out;
}

namespace {

std::string dot_states(const AtomTable& vars, size_t count,
                       const std::vector<std::vector<std::uint32_t>>& attrs) {
  std::vector<char> boxed(count, 0);
  for (const auto& a : attrs)
    for (std::uint32_t s : a) boxed[s] = 1;
  std::string out;
  for (size_t s = 0; s < count; ++s) {
    out += "  s" + std::to_string(s) + " [label=\"" + state_label(vars, s) + "\"";
    if (boxed[s]) out += ", shape=box";
    out += "];\n";
  }
  return out;
}

}  // namespace

std::string to_dot(const TransitionGraph& g, const std::vector<std::vector<std::uint32_t>>& attrs) {
  std::string out = "digraph stg {\n";
  out += dot_states(*g.atoms, g.succ.size(), attrs);
  for (size_t s = 0; s < g.succ.size(); ++s)
    out += "  s" + std::to_string(s) + " -> s" + std::to_string(g.succ[s]) + ";\n";
  out += "}\n";
  return out;
}

std::string to_dot(const NondetTransitionGraph& g,
                   const std::vector<std::vector<std::uint32_t>>& attrs) {
  std::string out = "digraph atg {\n";
  out += dot_states(*g.vars, g.succs.size(), attrs);
  for (size_t s = 0; s < g.succs.size(); ++s)
    for (std::uint32_t t : g.succs[s])
      out += "  s" + std::to_string(s) + " -> s" + std::to_string(t) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace lpsem
