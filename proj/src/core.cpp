#include "lpsem/core.hpp"

#include <algorithm>
#include <thread>

namespace lpsem {

AtomId AtomTable::intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  AtomId id = static_cast<AtomId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_domain(const AtomTablePtr& a, const AtomTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_domain(const AtomTablePtr& a, const AtomTablePtr& b) {
  if (!same_domain(a, b)) throw DomainMismatchError("values belong to different atom tables");
}

static void sort_unique(std::vector<AtomId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Rule make_rule(AtomId head, std::vector<AtomId> pbody, std::vector<AtomId> nbody) {
  sort_unique(pbody);
  sort_unique(nbody);
  return Rule{head, std::move(pbody), std::move(nbody)};
}

Program::Program() : atoms_(std::make_shared<AtomTable>()) {}

Program::Program(AtomTablePtr atoms, std::vector<Rule> rules) : atoms_(std::move(atoms)) {
  rules_.reserve(rules.size());
  for (auto& r : rules) {
    Rule nr = make_rule(r.head, std::move(r.pbody), std::move(r.nbody));
    if (std::find(rules_.begin(), rules_.end(), nr) == rules_.end()) rules_.push_back(std::move(nr));
  }
}

namespace {
using NamedRule = std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>;

std::vector<NamedRule> named_rules(const Program& p) {
  std::vector<NamedRule> out;
  out.reserve(p.rules().size());
  for (const Rule& r : p.rules()) {
    std::vector<std::string> pb, nb;
    for (AtomId a : r.pbody) pb.push_back(p.atoms().name(a));
    for (AtomId a : r.nbody) nb.push_back(p.atoms().name(a));
    std::sort(pb.begin(), pb.end());
    std::sort(nb.begin(), nb.end());
    out.emplace_back(p.atoms().name(r.head), std::move(pb), std::move(nb));
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

bool Program::operator==(const Program& other) const {
  if (same_domain(atoms_, other.atoms_)) {
    std::vector<Rule> a = rules_, b = other.rules_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  std::vector<std::string> na, nb;
  for (int i = 0; i < atoms_->size(); ++i) na.push_back(atoms_->name(i));
  for (int i = 0; i < other.atoms_->size(); ++i) nb.push_back(other.atoms_->name(i));
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  if (na != nb) return false;
  return named_rules(*this) == named_rules(other);
}

void ProgramBuilder::add_rule(AtomId head, std::vector<AtomId> pbody, std::vector<AtomId> nbody) {
  rules_.push_back(make_rule(head, std::move(pbody), std::move(nbody)));
}

Program ProgramBuilder::build() {
  return Program(AtomTablePtr(table_), std::move(rules_));
}

Interp2::Interp2(AtomTablePtr atoms, std::vector<std::uint8_t> bits)
    : atoms_(std::move(atoms)), bits_(std::move(bits)) {
  if (static_cast<int>(bits_.size()) != atoms_->size())
    throw Error("interpretation width does not match the atom table");
}

Interp2 Interp2::all_false(AtomTablePtr atoms) {
  size_t n = static_cast<size_t>(atoms->size());
  return Interp2(std::move(atoms), std::vector<std::uint8_t>(n, 0));
}

Interp2 Interp2::from_index(AtomTablePtr atoms, std::uint64_t index) {
  std::vector<std::uint8_t> bits(static_cast<size_t>(atoms->size()));
  for (size_t i = 0; i < bits.size(); ++i) bits[i] = (index >> i) & 1u;
  return Interp2(std::move(atoms), std::move(bits));
}

Interp2 Interp2::from_pattern(AtomTablePtr atoms, std::string_view pattern) {
  if (static_cast<int>(pattern.size()) != atoms->size())
    throw Error("pattern length does not match the atom table");
  std::vector<std::uint8_t> bits(pattern.size());
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == '1')
      bits[i] = 1;
    else if (pattern[i] == '0')
      bits[i] = 0;
    else
      throw Error("2-valued pattern must consist of '0'/'1'");
  }
  return Interp2(std::move(atoms), std::move(bits));
}

Interp2 Interp2::from_true_names(AtomTablePtr atoms, const std::vector<std::string>& names) {
  std::vector<std::uint8_t> bits(static_cast<size_t>(atoms->size()), 0);
  for (const auto& n : names) {
    auto id = atoms->find(n);
    if (!id) throw DomainMismatchError("unknown atom '" + n + "'");
    bits[static_cast<size_t>(*id)] = 1;
  }
  return Interp2(std::move(atoms), std::move(bits));
}

std::uint64_t Interp2::to_index() const {
  if (size() > 63) throw TooLargeError("state index requires at most 63 atoms");
  std::uint64_t idx = 0;
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) idx |= std::uint64_t(1) << i;
  return idx;
}

std::string Interp2::to_pattern() const {
  std::string s(bits_.size(), '0');
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::vector<std::string> Interp2::true_names() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(atoms_->name(static_cast<AtomId>(i)));
  std::sort(out.begin(), out.end());
  return out;
}

bool Interp2::operator==(const Interp2& other) const {
  return same_domain(atoms_, other.atoms_) && bits_ == other.bits_;
}

Interp3::Interp3(AtomTablePtr atoms, std::vector<Tri> vals)
    : atoms_(std::move(atoms)), vals_(std::move(vals)) {
  if (static_cast<int>(vals_.size()) != atoms_->size())
    throw Error("interpretation width does not match the atom table");
}

Interp3 Interp3::all_u(AtomTablePtr atoms) {
  size_t n = static_cast<size_t>(atoms->size());
  return Interp3(std::move(atoms), std::vector<Tri>(n, Tri::U));
}

Interp3 Interp3::from_pattern(AtomTablePtr atoms, std::string_view pattern) {
  if (static_cast<int>(pattern.size()) != atoms->size())
    throw Error("pattern length does not match the atom table");
  std::vector<Tri> vals(pattern.size());
  for (size_t i = 0; i < pattern.size(); ++i) {
    switch (pattern[i]) {
      case 't': case '1': vals[i] = Tri::T; break;
      case 'f': case '0': vals[i] = Tri::F; break;
      case 'u': case '*': vals[i] = Tri::U; break;
      default: throw Error("3-valued pattern must consist of t/f/u or 0/1/*");
    }
  }
  return Interp3(std::move(atoms), std::move(vals));
}

Interp3 Interp3::from_interp2(const Interp2& i) {
  std::vector<Tri> vals(static_cast<size_t>(i.size()));
  for (int a = 0; a < i.size(); ++a) vals[static_cast<size_t>(a)] = i.get(a) ? Tri::T : Tri::F;
  return Interp3(i.atoms_ptr(), std::move(vals));
}

int Interp3::u_count() const {
  int c = 0;
  for (Tri v : vals_)
    if (v == Tri::U) ++c;
  return c;
}

Interp2 Interp3::as_interp2() const {
  std::vector<std::uint8_t> bits(vals_.size());
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (vals_[i] == Tri::U) throw Error("interpretation is not 2-valued");
    bits[i] = vals_[i] == Tri::T ? 1 : 0;
  }
  return Interp2(atoms_, std::move(bits));
}

std::string Interp3::to_pattern(bool binary) const {
  std::string s(vals_.size(), '?');
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (binary)
      s[i] = vals_[i] == Tri::T ? '1' : (vals_[i] == Tri::F ? '0' : '*');
    else
      s[i] = tri_char(vals_[i]);
  }
  return s;
}

bool Interp3::operator==(const Interp3& other) const {
  return same_domain(atoms_, other.atoms_) && vals_ == other.vals_;
}

bool leq_t(const Interp3& a, const Interp3& b) {
  require_same_domain(a.atoms_ptr(), b.atoms_ptr());
  for (int i = 0; i < a.size(); ++i)
    if (truth_rank(a.get(i)) > truth_rank(b.get(i))) return false;
  return true;
}

bool leq_s(const Interp3& a, const Interp3& b) {
  require_same_domain(a.atoms_ptr(), b.atoms_ptr());
  for (int i = 0; i < a.size(); ++i) {
    Tri av = a.get(i), bv = b.get(i);
    if (av != bv && bv != Tri::U) return false;
  }
  return true;
}

std::vector<Interp2> gamma(const Interp3& i, const Limits& lim) {
  std::vector<int> upos;
  for (int a = 0; a < i.size(); ++a)
    if (i.get(a) == Tri::U) upos.push_back(a);
  int k = static_cast<int>(upos.size());
  if (k > lim.max_atoms_2v)
    throw TooLargeError("gamma would enumerate 2^" + std::to_string(k) + " interpretations");
  std::vector<std::uint8_t> base(static_cast<size_t>(i.size()), 0);
  for (int a = 0; a < i.size(); ++a)
    if (i.get(a) == Tri::T) base[static_cast<size_t>(a)] = 1;
  std::vector<Interp2> out;
  out.reserve(size_t(1) << k);
  for (std::uint64_t c = 0; c < (std::uint64_t(1) << k); ++c) {
    std::vector<std::uint8_t> bits = base;
    for (int j = 0; j < k; ++j) {
      bool is_false = (c >> (k - 1 - j)) & 1u;  // canonical: t before f
      bits[static_cast<size_t>(upos[static_cast<size_t>(j)])] = is_false ? 0 : 1;
    }
    out.emplace_back(i.atoms_ptr(), std::move(bits));
  }
  return out;
}

bool canonical_less(const Interp3& a, const Interp3& b) {
  for (int i = 0; i < a.size() && i < b.size(); ++i) {
    int ra = canonical_rank(a.get(i)), rb = canonical_rank(b.get(i));
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

bool canonical_less(const Interp2& a, const Interp2& b) {
  for (int i = 0; i < a.size() && i < b.size(); ++i) {
    if (a.get(i) != b.get(i)) return a.get(i);  // true sorts first
  }
  return a.size() < b.size();
}

std::uint64_t pow3(int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

void parallel_ranges(std::uint64_t total, int jobs,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (jobs < 1) jobs = 1;
  std::uint64_t chunk_count = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs),
                                                      total == 0 ? 1 : total);
  if (chunk_count <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(chunk_count);
  std::uint64_t per = total / chunk_count, rem = total % chunk_count;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    std::uint64_t len = per + (c < rem ? 1 : 0);
    workers.emplace_back(fn, static_cast<int>(c), begin, begin + len);
    begin += len;
  }
  for (auto& w : workers) w.join();
}

}  // namespace lpsem
