#include "lpsem/lfp.hpp"

#include <algorithm>
#include <set>

namespace lpsem {

QuasiProgram::QuasiProgram(Program p) : program(std::move(p)) {
  for (const Rule& r : program.rules())
    if (!r.pbody.empty()) throw Error("quasi-interpretation program has a rule with a positive body");
}

Rule sigma_rule(const Rule& r, const std::vector<Rule>& resolvers) {
  if (resolvers.size() != r.pbody.size())
    throw ResolutionError("expected one resolver per positive body atom");
  std::vector<AtomId> nbody = r.nbody;
  for (size_t i = 0; i < resolvers.size(); ++i) {
    const Rule& ri = resolvers[i];
    if (!ri.pbody.empty())
      throw ResolutionError("resolver rules must have empty positive bodies");
    if (ri.head != r.pbody[i])
      throw ResolutionError("resolver head does not match the positive body atom");
    nbody.insert(nbody.end(), ri.nbody.begin(), ri.nbody.end());
  }
  return make_rule(r.head, {}, std::move(nbody));
}

namespace {

// All resolver tuples for r drawn from q, in deterministic order.
void resolve_all(const Rule& r, const std::vector<std::vector<const Rule*>>& q_by_head,
                 std::set<Rule>& out) {
  size_t j = r.pbody.size();
  std::vector<const std::vector<const Rule*>*> pools(j);
  for (size_t i = 0; i < j; ++i) {
    pools[i] = &q_by_head[static_cast<size_t>(r.pbody[i])];
    if (pools[i]->empty()) return;  // unresolvable this round
  }
  std::vector<size_t> choice(j, 0);
  std::vector<Rule> resolvers(j);
  while (true) {
    for (size_t i = 0; i < j; ++i) resolvers[i] = *(*pools[i])[choice[i]];
    out.insert(sigma_rule(r, resolvers));
    size_t i = j;
    while (i > 0) {
      --i;
      if (choice[i] + 1 < pools[i]->size()) {
        ++choice[i];
        break;
      }
      choice[i] = 0;
      if (i == 0) return;
    }
    if (j == 0) return;
  }
}

}  // namespace

QuasiProgram lfp(const Program& p) {
  std::set<Rule> q;
  while (true) {
    std::vector<std::vector<const Rule*>> q_by_head(static_cast<size_t>(p.atom_count()));
    for (const Rule& r : q) q_by_head[static_cast<size_t>(r.head)].push_back(&r);
    std::set<Rule> next;
    for (const Rule& r : p.rules()) resolve_all(r, q_by_head, next);
    if (next == q) break;
    q = std::move(next);
  }
  std::vector<Rule> rules(q.begin(), q.end());
  return QuasiProgram(Program(p.atoms_ptr(), std::move(rules)));
}

}  // namespace lpsem
