#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpsem {

using AtomId = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values over different atom tables were mixed.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// An enumeration limit was exceeded (see Limits).
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Caps for the exponential enumerations. Exceeding a cap is a hard error
/// (TooLargeError), never a silent truncation.
struct Limits {
  int max_atoms_2v = 20;               ///< ops sweeping 2^n states
  int max_atoms_3v = 12;               ///< ops sweeping 3^n interpretations
  std::int64_t cycle_cap = 1'000'000;  ///< simple-cycle enumeration cap
  int jobs = 1;                        ///< worker threads for state sweeps
};

/// Interned atom names. Ids are dense and assigned in first-occurrence order,
/// which fixes every iteration order downstream.
class AtomTable {
 public:
  AtomId intern(std::string_view name);
  std::optional<AtomId> find(std::string_view name) const;
  const std::string& name(AtomId id) const { return names_.at(static_cast<size_t>(id)); }
  int size() const { return static_cast<int>(names_.size()); }
  bool operator==(const AtomTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
};

using AtomTablePtr = std::shared_ptr<const AtomTable>;

bool same_domain(const AtomTablePtr& a, const AtomTablePtr& b);
void require_same_domain(const AtomTablePtr& a, const AtomTablePtr& b);

/// head :- pbody, not nbody. Bodies are sorted duplicate-free id vectors;
/// pbody and nbody may intersect.
struct Rule {
  AtomId head = -1;
  std::vector<AtomId> pbody;
  std::vector<AtomId> nbody;
  auto operator<=>(const Rule&) const = default;
};

/// Normalizes bodies (sort + unique).
Rule make_rule(AtomId head, std::vector<AtomId> pbody, std::vector<AtomId> nbody);

/// A finite ground normal logic program: an atom table plus a duplicate-free
/// rule list (source order retained for display). Immutable once built.
class Program {
 public:
  Program();
  Program(AtomTablePtr atoms, std::vector<Rule> rules);

  const AtomTable& atoms() const { return *atoms_; }
  const AtomTablePtr& atoms_ptr() const { return atoms_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int atom_count() const { return atoms_->size(); }

  /// Set equality: same atom names and same rules, independent of interning
  /// order and rule order.
  bool operator==(const Program& other) const;

 private:
  AtomTablePtr atoms_;
  std::vector<Rule> rules_;
};

/// Single-shot builder used by the parser and the generator; interns atoms in
/// encounter order and collapses duplicate rules.
class ProgramBuilder {
 public:
  ProgramBuilder() : table_(std::make_shared<AtomTable>()) {}
  AtomId intern(std::string_view name) { return table_->intern(name); }
  void add_rule(AtomId head, std::vector<AtomId> pbody, std::vector<AtomId> nbody);
  Program build();

 private:
  std::shared_ptr<AtomTable> table_;
  std::vector<Rule> rules_;
};

/// Three-valued truth value. The numeric values are not an order; use
/// truth_rank / canonical_rank.
enum class Tri : std::uint8_t { F = 0, T = 1, U = 2 };

constexpr char tri_char(Tri v) { return v == Tri::T ? 't' : (v == Tri::F ? 'f' : 'u'); }

/// Rank in the truth order f < u < t.
constexpr int truth_rank(Tri v) { return v == Tri::F ? 0 : (v == Tri::U ? 1 : 2); }

/// Rank used for canonical output ordering: t < f < u per atom.
constexpr int canonical_rank(Tri v) { return v == Tri::T ? 0 : (v == Tri::F ? 1 : 2); }

constexpr Tri tri_not(Tri v) {
  return v == Tri::U ? Tri::U : (v == Tri::T ? Tri::F : Tri::T);
}
constexpr Tri tri_and(Tri a, Tri b) { return truth_rank(a) <= truth_rank(b) ? a : b; }
constexpr Tri tri_or(Tri a, Tri b) { return truth_rank(a) >= truth_rank(b) ? a : b; }

/// Total 2-valued interpretation over a program's atoms.
class Interp2 {
 public:
  Interp2(AtomTablePtr atoms, std::vector<std::uint8_t> bits);
  static Interp2 all_false(AtomTablePtr atoms);
  static Interp2 from_index(AtomTablePtr atoms, std::uint64_t index);
  static Interp2 from_pattern(AtomTablePtr atoms, std::string_view pattern);  // '0'/'1'
  static Interp2 from_true_names(AtomTablePtr atoms, const std::vector<std::string>& names);

  bool get(AtomId a) const { return bits_[static_cast<size_t>(a)] != 0; }
  int size() const { return static_cast<int>(bits_.size()); }
  std::uint64_t to_index() const;  // requires size() <= 63
  std::string to_pattern() const;
  std::vector<std::string> true_names() const;  // sorted by name
  const AtomTablePtr& atoms_ptr() const { return atoms_; }
  const AtomTable& atoms() const { return *atoms_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const Interp2& other) const;

 private:
  AtomTablePtr atoms_;
  std::vector<std::uint8_t> bits_;
};

/// Total 3-valued interpretation; doubles as a Boolean-network sub-space
/// with U playing the wildcard.
class Interp3 {
 public:
  Interp3(AtomTablePtr atoms, std::vector<Tri> vals);
  static Interp3 all_u(AtomTablePtr atoms);
  static Interp3 from_pattern(AtomTablePtr atoms, std::string_view pattern);  // tfu or 01*
  static Interp3 from_interp2(const Interp2& i);

  Tri get(AtomId a) const { return vals_[static_cast<size_t>(a)]; }
  int size() const { return static_cast<int>(vals_.size()); }
  int u_count() const;
  bool is_two_valued() const { return u_count() == 0; }
  Interp2 as_interp2() const;  // requires no U
  std::string to_pattern(bool binary = false) const;  // "tfu" or "10*"
  const AtomTablePtr& atoms_ptr() const { return atoms_; }
  const AtomTable& atoms() const { return *atoms_; }
  const std::vector<Tri>& vals() const { return vals_; }

  bool operator==(const Interp3& other) const;

 private:
  AtomTablePtr atoms_;
  std::vector<Tri> vals_;
};

/// Truth order, pointwise: a <= b iff a(x) <=t b(x) for every atom.
bool leq_t(const Interp3& a, const Interp3& b);

/// Subset (precision) order, pointwise f,t <s u; equivalent to
/// gamma(a) being a subset of gamma(b).
bool leq_s(const Interp3& a, const Interp3& b);

/// All 2-valued interpretations agreeing with I on its defined atoms,
/// in canonical order. Size is 2^(#U atoms).
std::vector<Interp2> gamma(const Interp3& i, const Limits& lim = {});

/// Canonical output order: lexicographic per atom id with t < f < u.
bool canonical_less(const Interp3& a, const Interp3& b);
bool canonical_less(const Interp2& a, const Interp2& b);

std::uint64_t pow3(int n);

/// Splits [0,total) into at most `jobs` contiguous chunks and runs
/// fn(chunk_index, begin, end), possibly on worker threads. Callers must
/// merge per-chunk results in chunk order to stay deterministic.
void parallel_ranges(std::uint64_t total, int jobs,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace lpsem
