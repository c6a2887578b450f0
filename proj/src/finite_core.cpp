#include "unlock/finite_core.hpp"

#include <sstream>

#include "unlock/error.hpp"

namespace unlock {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "E_SYNTAX";
    case ErrorCode::kSchema: return "E_SCHEMA";
    case ErrorCode::kUnknownKey: return "E_UNKNOWN_KEY";
    case ErrorCode::kVersion: return "E_VERSION";
    case ErrorCode::kDanglingRef: return "E_DANGLING_REF";
    case ErrorCode::kDuplicateId: return "E_DUPLICATE_ID";
    case ErrorCode::kDuplicateFunction: return "E_DUPLICATE_FUNCTION";
    case ErrorCode::kNotTotal: return "E_NOT_TOTAL";
    case ErrorCode::kEmptySet: return "E_EMPTY_SET";
    case ErrorCode::kEmptyWindow: return "E_EMPTY_WINDOW";
    case ErrorCode::kDuplicateWindow: return "E_DUPLICATE_WINDOW";
    case ErrorCode::kUniverseMismatch: return "E_UNIVERSE_MISMATCH";
    case ErrorCode::kNotPartialOrder: return "E_NOT_PARTIAL_ORDER";
    case ErrorCode::kNotSelection: return "E_NOT_SELECTION";
    case ErrorCode::kNotUnlocking: return "E_NOT_UNLOCKING";
    case ErrorCode::kNotRestrictive: return "E_NOT_RESTRICTIVE";
    case ErrorCode::kNotIsotone: return "E_NOT_ISOTONE";
    case ErrorCode::kNoGreatest: return "E_NO_GREATEST";
    case ErrorCode::kCapExceeded: return "E_CAP_EXCEEDED";
    case ErrorCode::kIo: return "E_IO";
  }
  return "E_UNKNOWN";
}

// --- Universe ---------------------------------------------------------------

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw InputError(ErrorCode::kEmptySet, "universe must be nonempty");
  }
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw InputError(ErrorCode::kDuplicateId, "duplicate element '" + elements_[i] + "'");
    }
  }
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> elements) {
  return std::make_shared<const Universe>(std::move(elements));
}

std::shared_ptr<const Universe> Universe::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return make(std::move(names));
}

bool Universe::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

std::size_t Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw InputError(ErrorCode::kDanglingRef, "unknown element '" + std::string(name) + "'");
  }
  return it->second;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

// --- Subset -----------------------------------------------------------------

Subset::Subset(UniversePtr universe) : universe_(std::move(universe)), bits_(universe_->size()) {}

Subset::Subset(UniversePtr universe, Bits bits) : universe_(std::move(universe)), bits_(std::move(bits)) {
  if (bits_.size() != universe_->size()) {
    throw InputError(ErrorCode::kUniverseMismatch, "membership vector length differs from universe size");
  }
}

Subset Subset::full(UniversePtr universe) {
  Subset s(std::move(universe));
  s.bits_.set();
  return s;
}

Subset Subset::of(UniversePtr universe, std::initializer_list<std::string_view> names) {
  Subset s(std::move(universe));
  for (auto name : names) s.insert(s.universe_->index_of(name));
  return s;
}

Subset Subset::of(UniversePtr universe, std::span<const std::string> names) {
  Subset s(std::move(universe));
  for (const auto& name : names) s.insert(s.universe_->index_of(name));
  return s;
}

Subset Subset::singleton(UniversePtr universe, std::size_t i) {
  Subset s(std::move(universe));
  s.insert(i);
  return s;
}

void Subset::require_same(const Subset& other) const {
  if (!same_universe(universe_, other.universe_)) {
    throw InputError(ErrorCode::kUniverseMismatch, "subsets of different universes");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same(other);
  return bits_.is_subset_of(other.bits_);
}

Subset Subset::complement() const { return Subset(universe_, ~bits_); }

Subset& Subset::operator&=(const Subset& other) {
  require_same(other);
  bits_ &= other.bits_;
  return *this;
}

Subset& Subset::operator|=(const Subset& other) {
  require_same(other);
  bits_ |= other.bits_;
  return *this;
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(i);
  return out;
}

std::vector<std::string> Subset::names() const {
  std::vector<std::string> out;
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(universe_->name(i));
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& name : names()) {
    if (!first) out += ", ";
    out += name;
    first = false;
  }
  return out + "}";
}

bool Subset::operator==(const Subset& other) const {
  return bits_ == other.bits_ && same_universe(universe_, other.universe_);
}

// --- Predicate --------------------------------------------------------------

Predicate::Predicate(UniversePtr universe, std::vector<bool> truth)
    : universe_(std::move(universe)), truth_(std::move(truth)) {
  if (truth_.size() != universe_->size()) {
    throw InputError(ErrorCode::kUniverseMismatch, "truth vector length differs from universe size");
  }
}

Predicate Predicate::always_true(UniversePtr universe) {
  auto n = universe->size();
  return Predicate(std::move(universe), std::vector<bool>(n, true));
}

Predicate Predicate::always_false(UniversePtr universe) {
  auto n = universe->size();
  return Predicate(std::move(universe), std::vector<bool>(n, false));
}

Predicate Predicate::from_truth_set(const Subset& truth_set) {
  std::vector<bool> truth(truth_set.universe_size());
  for (std::size_t i = 0; i < truth.size(); ++i) truth[i] = truth_set.contains(i);
  return Predicate(truth_set.universe(), std::move(truth));
}

Subset Predicate::truth_set() const {
  Subset s(universe_);
  for (std::size_t i = 0; i < truth_.size(); ++i) {
    if (truth_[i]) s.insert(i);
  }
  return s;
}

Predicate Predicate::operator!() const {
  auto truth = truth_;
  truth.flip();
  return Predicate(universe_, std::move(truth));
}

Predicate operator&&(const Predicate& a, const Predicate& b) {
  if (!same_universe(a.universe_, b.universe_)) {
    throw InputError(ErrorCode::kUniverseMismatch, "predicates on different universes");
  }
  std::vector<bool> truth(a.truth_.size());
  for (std::size_t i = 0; i < truth.size(); ++i) truth[i] = a.truth_[i] && b.truth_[i];
  return Predicate(a.universe_, std::move(truth));
}

Predicate operator||(const Predicate& a, const Predicate& b) {
  if (!same_universe(a.universe_, b.universe_)) {
    throw InputError(ErrorCode::kUniverseMismatch, "predicates on different universes");
  }
  std::vector<bool> truth(a.truth_.size());
  for (std::size_t i = 0; i < truth.size(); ++i) truth[i] = a.truth_[i] || b.truth_[i];
  return Predicate(a.universe_, std::move(truth));
}

Predicate Predicate::restrict(const Subset& y) const {
  if (!same_universe(universe_, y.universe())) {
    throw InputError(ErrorCode::kUniverseMismatch, "restriction set is not a subset of the predicate's universe");
  }
  auto sub = Universe::make(y.names());
  std::vector<bool> truth;
  for (auto i : y.indices()) truth.push_back(truth_[i]);
  return Predicate(std::move(sub), std::move(truth));
}

bool Predicate::operator==(const Predicate& other) const {
  return truth_ == other.truth_ && same_universe(universe_, other.universe_);
}

// --- Multifunction ----------------------------------------------------------

Multifunction::Multifunction(UniversePtr domain, UniversePtr codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  values_.assign(domain_->size(), Subset(codomain_));
}

Multifunction::Multifunction(UniversePtr domain, std::vector<Subset> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_->size()) {
    throw InputError(ErrorCode::kNotTotal, "multifunction needs one value per domain element");
  }
  codomain_ = values_.front().universe();
  for (const auto& v : values_) {
    if (!same_universe(v.universe(), codomain_)) {
      throw InputError(ErrorCode::kUniverseMismatch, "multifunction values over different universes");
    }
  }
}

void Multifunction::set(std::size_t i, Subset value) {
  if (!same_universe(value.universe(), codomain_)) {
    throw InputError(ErrorCode::kUniverseMismatch, "value is not a subset of the codomain");
  }
  values_.at(i) = std::move(value);
}

bool Multifunction::pointwise_leq(const Multifunction& other) const {
  if (!same_universe(domain_, other.domain_)) {
    throw InputError(ErrorCode::kUniverseMismatch, "multifunctions on different domains");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].is_subset_of(other.values_[i])) return false;
  }
  return true;
}

std::string Multifunction::to_table() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out << domain_->name(i) << ": [";
    bool first = true;
    for (const auto& name : values_[i].names()) {
      out << (first ? "" : ", ") << name;
      first = false;
    }
    out << "]\n";
  }
  return out.str();
}

bool Multifunction::operator==(const Multifunction& other) const {
  return same_universe(domain_, other.domain_) && values_ == other.values_;
}

// --- operations -------------------------------------------------------------

Subset fix_points(const Multifunction& f) {
  if (!f.is_endo()) {
    throw InputError(ErrorCode::kUniverseMismatch, "fixed points need domain = codomain");
  }
  Subset out(f.domain());
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f(i).contains(i)) out.insert(i);
  }
  return out;
}

Multifunction inverse(const Multifunction& f) {
  Multifunction inv(f.codomain(), f.domain());
  std::vector<Subset> values(f.codomain()->size(), Subset(f.domain()));
  for (std::size_t a = 0; a < f.values().size(); ++a) {
    for (auto b : f(a).indices()) values[b].insert(a);
  }
  for (std::size_t b = 0; b < values.size(); ++b) inv.set(b, std::move(values[b]));
  return inv;
}

bool is_unlocking(const Multifunction& f, const Predicate& p) {
  if (!f.is_endo() || !same_universe(f.domain(), p.universe())) {
    throw InputError(ErrorCode::kUniverseMismatch, "multifunction and predicate on different universes");
  }
  return fix_points(f) == p.truth_set();
}

Multifunction lift_function(const UniversePtr& universe, std::span<const std::size_t> g) {
  if (g.size() != universe->size()) {
    throw InputError(ErrorCode::kNotTotal, "function must be total on the universe");
  }
  Multifunction f(universe);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] >= universe->size()) {
      throw InputError(ErrorCode::kDanglingRef, "function value outside the universe");
    }
    f.set(i, Subset::singleton(universe, g[i]));
  }
  return f;
}

Subset fixed_points(const UniversePtr& universe, std::span<const std::size_t> g) {
  Subset out(universe);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == i) out.insert(i);
  }
  return out;
}

}  // namespace unlock
