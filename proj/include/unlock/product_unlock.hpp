#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unlock/finite_core.hpp"

namespace unlock {

/// A tuple of a product space: one factor element index per coordinate.
struct Tuple {
  std::vector<std::size_t> coords;
  bool operator==(const Tuple&) const = default;
  auto operator<=>(const Tuple&) const = default;
};

/// Finite product of named, nonempty factors.
class ProductSpace {
 public:
  ProductSpace(std::vector<std::string> index_names, std::vector<UniversePtr> factors);

  std::size_t arity() const { return factors_.size(); }
  const std::vector<std::string>& index_names() const { return index_names_; }
  const UniversePtr& factor(std::size_t i) const { return factors_.at(i); }
  // Number of tuples, saturating at UINT64_MAX.
  std::uint64_t cardinality() const { return cardinality_; }

  // Mixed-radix rank; coordinate 0 varies fastest.
  std::uint64_t rank(const Tuple& x) const;
  Tuple unrank(std::uint64_t r) const;
  Tuple make(const std::vector<std::string>& names) const;
  std::string to_string(const Tuple& x) const;  // "(a, b)"

 private:
  std::vector<std::string> index_names_;
  std::vector<UniversePtr> factors_;
  std::uint64_t cardinality_;
};

using ProductSpacePtr = std::shared_ptr<const ProductSpace>;

/// (y, x_{-i}): x with coordinate i replaced by y.
Tuple substitute(const ProductSpace& space, const Tuple& x, std::size_t index, std::size_t y);

inline constexpr std::uint64_t kDefaultProductCap = 1'000'000;

/// A predicate on a product space, materialized as a truth table by tuple rank.
class ProductPredicate {
 public:
  ProductPredicate(ProductSpacePtr space, std::vector<bool> truth);
  static ProductPredicate from_test(ProductSpacePtr space, const std::function<bool(const Tuple&)>& test,
                                    std::uint64_t cap = kDefaultProductCap);
  static ProductPredicate always_true(ProductSpacePtr space);
  static ProductPredicate always_false(ProductSpacePtr space);

  const ProductSpacePtr& space() const { return space_; }
  bool operator()(const Tuple& x) const { return truth_[space_->rank(x)]; }
  ProductPredicate operator!() const;

 private:
  ProductSpacePtr space_;
  std::vector<bool> truth_;
};

/// A family of predicates P_j on one product space together with an injection
/// q from predicate positions to coordinate indices.
class PredicateFamily {
 public:
  // Identity injection: predicate j governs coordinate j.
  PredicateFamily(ProductSpacePtr space, std::vector<ProductPredicate> predicates);
  PredicateFamily(ProductSpacePtr space, std::vector<ProductPredicate> predicates, std::vector<std::size_t> injection);

  const ProductSpacePtr& space() const { return space_; }
  const std::vector<ProductPredicate>& predicates() const { return predicates_; }
  const std::vector<std::size_t>& injection() const { return injection_; }
  // q^-1(i), if coordinate i is governed by some predicate.
  std::optional<std::size_t> governing(std::size_t index) const { return governing_.at(index); }

  // Conjunction of all members evaluated directly.
  bool conjunction(const Tuple& x) const;

 private:
  ProductSpacePtr space_;
  std::vector<ProductPredicate> predicates_;
  std::vector<std::size_t> injection_;
  std::vector<std::optional<std::size_t>> governing_;
};

/// {y in X_i | P((y, x_{-i}))}.
Subset coordinate_feasible(const ProductPredicate& p, std::size_t index, const Tuple& x);

/// The box F_P(x) = prod_i B_i(x). Only the sides are stored; the box itself can
/// be exponentially large.
struct BoxValue {
  std::vector<Subset> sides;

  bool contains(const Tuple& z) const;
  std::uint64_t volume() const;
};

/// B_i(x) = coordinate_feasible(P_{q^-1(i)}, i, x) for governed coordinates,
/// the whole factor X_i otherwise.
BoxValue box_value(const PredicateFamily& family, const Tuple& x);

/// {x | x in F_P(x)}, enumerating X in rank order. Refuses products above cap.
std::vector<Tuple> fix_of_box(const PredicateFamily& family, std::uint64_t cap = kDefaultProductCap);

/// {x | P_j(x) for all j}, by direct evaluation.
std::vector<Tuple> conjunction_truth_set(const PredicateFamily& family, std::uint64_t cap = kDefaultProductCap);

}  // namespace unlock
