#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpsem/core.hpp"

namespace lpsem {

/// Propositional formula tree over a program's atoms plus the special
/// undefined leaf. Conjunction and disjunction are n-ary; the empty
/// conjunction is true and the empty disjunction is false.
struct Formula {
  enum class Kind : std::uint8_t { Atom, U, Not, And, Or };

  Kind kind = Kind::Or;
  AtomId atom = -1;
  std::vector<Formula> children;

  static Formula atom_ref(AtomId a) { return Formula{Kind::Atom, a, {}}; }
  static Formula undefined() { return Formula{Kind::U, -1, {}}; }
  static Formula negate(Formula f) { return Formula{Kind::Not, -1, {std::move(f)}}; }
  static Formula conj(std::vector<Formula> fs) { return Formula{Kind::And, -1, std::move(fs)}; }
  static Formula disj(std::vector<Formula> fs) { return Formula{Kind::Or, -1, std::move(fs)}; }
  static Formula constant(bool v) { return v ? conj({}) : disj({}); }

  bool operator==(const Formula&) const = default;
};

/// Atoms syntactically occurring in f, sorted and unique.
std::vector<AtomId> formula_support(const Formula& f);

/// Renders with & | ! ( ) 0 1; singleton conjunctions/disjunctions flatten.
std::string formula_to_string(const Formula& f, const AtomTable& atoms);

/// 3-valued valuation: not flips t/f and keeps u; and/or are min/max in the
/// truth order; the U leaf evaluates to u.
Tri eval3(const Interp3& i, const Formula& f);

/// 2-valued valuation; f must not contain U leaves.
bool eval2(const Interp2& i, const Formula& f);

/// body formula: conjunction of positive atoms and negated body atoms.
Formula body_formula(const Rule& r);

/// Clark's completion: for every atom the disjunction of its rule bodies,
/// constant false for atoms with no rule.
struct Completion {
  AtomTablePtr atoms;
  std::vector<Formula> rhs;  // indexed by atom id
};

Completion clark_completion(const Program& p);

/// One rule of a reduct: positive body plus an optional undefined conjunct.
struct ReductRule {
  AtomId head = -1;
  std::vector<AtomId> pbody;
  bool has_u = false;
  bool operator==(const ReductRule&) const = default;
};

/// Positive program over atom(P) with U leaves standing for the replaced
/// negative literals.
struct ReductProgram {
  AtomTablePtr atoms;
  std::vector<ReductRule> rules;
};

/// 3-valued reduct: drop rules with a true negated atom, erase negated atoms
/// that are false, replace the undefined ones by the special U conjunct.
ReductProgram reduct3(const Program& p, const Interp3& i);

/// Least 3-valued model of a positive program-with-u, computed as the limit
/// of the monotone one-step operator from the all-false interpretation.
Interp3 least3_model_positive(const ReductProgram& rp);

/// I is stable iff it equals the least 3-valued model of the reduct by I.
bool is_stable_partial_model(const Program& p, const Interp3& i);

/// All stable partial models, canonical order. Brute force over 3^n
/// interpretations; this is the reference route the transition-graph route
/// is cross-checked against.
std::vector<Interp3> stable_partial_models(const Program& p, const Limits& lim = {});

/// All 3-valued models of the completion (I(a) = I(rhs(a)) for every atom).
std::vector<Interp3> supported_partial_models(const Program& p, const Limits& lim = {});

/// Subset-order-minimal stable partial models; never empty.
std::vector<Interp3> regular_models(const Program& p, const Limits& lim = {});

/// 2-valued stable models, canonical order.
std::vector<Interp2> stable_models(const Program& p, const Limits& lim = {});

/// Subset-order-minimal elements of a set of interpretations.
std::vector<Interp3> s_minimal(const std::vector<Interp3>& set);

}  // namespace lpsem
