#include "unlock/product_unlock.hpp"

#include <limits>

#include "unlock/error.hpp"

namespace unlock {

namespace {

void require_within_cap(const ProductSpace& space, std::uint64_t cap) {
  if (space.cardinality() > cap) {
    throw InputError(ErrorCode::kCapExceeded,
                     "product of " + std::to_string(space.cardinality()) + " tuples exceeds the cap " + std::to_string(cap));
  }
}

bool same_product(const ProductSpace& a, const ProductSpace& b) {
  if (&a == &b) return true;
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!same_universe(a.factor(i), b.factor(i))) return false;
  }
  return true;
}

}  // namespace

ProductSpace::ProductSpace(std::vector<std::string> index_names, std::vector<UniversePtr> factors)
    : index_names_(std::move(index_names)), factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError(ErrorCode::kEmptySet, "product needs at least one index");
  if (index_names_.size() != factors_.size()) {
    throw InputError(ErrorCode::kNotTotal, "one factor per index is required");
  }
  Universe check(index_names_);  // rejects duplicate index names
  cardinality_ = 1;
  for (const auto& f : factors_) {
    if (!f) throw InputError(ErrorCode::kEmptySet, "missing factor");
    if (cardinality_ > std::numeric_limits<std::uint64_t>::max() / f->size()) {
      cardinality_ = std::numeric_limits<std::uint64_t>::max();
    } else {
      cardinality_ *= f->size();
    }
  }
}

std::uint64_t ProductSpace::rank(const Tuple& x) const {
  if (x.coords.size() != arity()) throw InputError(ErrorCode::kNotTotal, "tuple has the wrong arity");
  std::uint64_t r = 0;
  for (std::size_t i = arity(); i-- > 0;) {
    if (x.coords[i] >= factors_[i]->size()) {
      throw InputError(ErrorCode::kDanglingRef, "coordinate outside its factor");
    }
    r = r * factors_[i]->size() + x.coords[i];
  }
  return r;
}

Tuple ProductSpace::unrank(std::uint64_t r) const {
  Tuple x;
  x.coords.resize(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    x.coords[i] = r % factors_[i]->size();
    r /= factors_[i]->size();
  }
  return x;
}

Tuple ProductSpace::make(const std::vector<std::string>& names) const {
  if (names.size() != arity()) throw InputError(ErrorCode::kNotTotal, "tuple has the wrong arity");
  Tuple x;
  for (std::size_t i = 0; i < arity(); ++i) x.coords.push_back(factors_[i]->index_of(names[i]));
  return x;
}

std::string ProductSpace::to_string(const Tuple& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ", ";
    out += factors_[i]->name(x.coords[i]);
  }
  return out + ")";
}

Tuple substitute(const ProductSpace& space, const Tuple& x, std::size_t index, std::size_t y) {
  if (index >= space.arity()) throw InputError(ErrorCode::kDanglingRef, "unknown index");
  if (y >= space.factor(index)->size()) throw InputError(ErrorCode::kDanglingRef, "element not in the factor");
  Tuple out = x;
  out.coords[index] = y;
  return out;
}

// --- predicates -------------------------------------------------------------

ProductPredicate::ProductPredicate(ProductSpacePtr space, std::vector<bool> truth)
    : space_(std::move(space)), truth_(std::move(truth)) {
  if (truth_.size() != space_->cardinality()) {
    throw InputError(ErrorCode::kNotTotal, "truth table length differs from the product size");
  }
}

ProductPredicate ProductPredicate::from_test(ProductSpacePtr space, const std::function<bool(const Tuple&)>& test,
                                             std::uint64_t cap) {
  require_within_cap(*space, cap);
  std::vector<bool> truth(space->cardinality());
  for (std::uint64_t r = 0; r < truth.size(); ++r) truth[r] = test(space->unrank(r));
  return ProductPredicate(std::move(space), std::move(truth));
}

ProductPredicate ProductPredicate::always_true(ProductSpacePtr space) {
  auto n = space->cardinality();
  return ProductPredicate(std::move(space), std::vector<bool>(n, true));
}

ProductPredicate ProductPredicate::always_false(ProductSpacePtr space) {
  auto n = space->cardinality();
  return ProductPredicate(std::move(space), std::vector<bool>(n, false));
}

ProductPredicate ProductPredicate::operator!() const {
  auto truth = truth_;
  truth.flip();
  return ProductPredicate(space_, std::move(truth));
}

PredicateFamily::PredicateFamily(ProductSpacePtr space, std::vector<ProductPredicate> predicates)
    : PredicateFamily(space, std::move(predicates), {}) {}

PredicateFamily::PredicateFamily(ProductSpacePtr space, std::vector<ProductPredicate> predicates,
                                 std::vector<std::size_t> injection)
    : space_(std::move(space)), predicates_(std::move(predicates)), injection_(std::move(injection)) {
  if (predicates_.size() > space_->arity()) {
    throw InputError(ErrorCode::kSchema, "a family may not have more predicates than the product has indices");
  }
  if (injection_.empty()) {
    for (std::size_t j = 0; j < predicates_.size(); ++j) injection_.push_back(j);
  }
  if (injection_.size() != predicates_.size()) {
    throw InputError(ErrorCode::kNotTotal, "injection needs one index per predicate");
  }
  governing_.assign(space_->arity(), std::nullopt);
  for (std::size_t j = 0; j < injection_.size(); ++j) {
    const auto i = injection_[j];
    if (i >= space_->arity()) throw InputError(ErrorCode::kDanglingRef, "injection points outside the index set");
    if (governing_[i]) throw InputError(ErrorCode::kSchema, "injection is not injective");
    governing_[i] = j;
  }
  for (const auto& p : predicates_) {
    if (!same_product(*p.space(), *space_)) {
      throw InputError(ErrorCode::kUniverseMismatch, "family member on a different product");
    }
  }
}

bool PredicateFamily::conjunction(const Tuple& x) const {
  for (const auto& p : predicates_) {
    if (!p(x)) return false;
  }
  return true;
}

// --- box --------------------------------------------------------------------

Subset coordinate_feasible(const ProductPredicate& p, std::size_t index, const Tuple& x) {
  const auto& space = *p.space();
  Subset out(space.factor(index));
  for (std::size_t y = 0; y < space.factor(index)->size(); ++y) {
    if (p(substitute(space, x, index, y))) out.insert(y);
  }
  return out;
}

bool BoxValue::contains(const Tuple& z) const {
  if (z.coords.size() != sides.size()) return false;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (!sides[i].contains(z.coords[i])) return false;
  }
  return true;
}

std::uint64_t BoxValue::volume() const {
  std::uint64_t v = 1;
  for (const auto& s : sides) v *= s.count();
  return v;
}

BoxValue box_value(const PredicateFamily& family, const Tuple& x) {
  const auto& space = *family.space();
  BoxValue box;
  box.sides.reserve(space.arity());
  for (std::size_t i = 0; i < space.arity(); ++i) {
    if (auto j = family.governing(i)) {
      box.sides.push_back(coordinate_feasible(family.predicates()[*j], i, x));
    } else {
      box.sides.push_back(Subset::full(space.factor(i)));
    }
  }
  return box;
}

std::vector<Tuple> fix_of_box(const PredicateFamily& family, std::uint64_t cap) {
  const auto& space = *family.space();
  require_within_cap(space, cap);
  std::vector<Tuple> out;
  for (std::uint64_t r = 0; r < space.cardinality(); ++r) {
    auto x = space.unrank(r);
    if (box_value(family, x).contains(x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<Tuple> conjunction_truth_set(const PredicateFamily& family, std::uint64_t cap) {
  const auto& space = *family.space();
  require_within_cap(space, cap);
  std::vector<Tuple> out;
  for (std::uint64_t r = 0; r < space.cardinality(); ++r) {
    auto x = space.unrank(r);
    if (family.conjunction(x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace unlock
