#pragma once

#include <vector>

#include "lpsem/core.hpp"

namespace lpsem {

/// A program whose rules all have empty positive bodies. The constructor
/// validates the invariant.
struct QuasiProgram {
  Program program;
  explicit QuasiProgram(Program p);
};

/// Resolves the positive body of r against quasi-interpretation rules, one
/// per positive body atom in sorted body order: the result keeps r's head and
/// collects r's negative body together with all resolver negative bodies.
Rule sigma_rule(const Rule& r, const std::vector<Rule>& resolvers);

/// Least fixpoint of the rule-unfolding transformation, iterated from the
/// empty rule set until the set stabilizes. The atom table of p is kept even
/// for atoms that lose all their rules, so interpretations stay comparable.
QuasiProgram lfp(const Program& p);

}  // namespace lpsem
