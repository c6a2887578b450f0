#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace unlock {

using Bits = boost::dynamic_bitset<>;

/// A nonempty, ordered collection of distinct element names. The order given
/// at construction is the canonical order of every printed set.
class Universe {
 public:
  explicit Universe(std::vector<std::string> elements);

  static std::shared_ptr<const Universe> make(std::vector<std::string> elements);
  // Elements named "0", "1", ..., "n-1".
  static std::shared_ptr<const Universe> numbered(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  const std::string& name(std::size_t i) const { return elements_.at(i); }
  const std::vector<std::string>& elements() const { return elements_; }

  bool contains(std::string_view name) const;
  // Throws InputError(kDanglingRef) for unknown names.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const Universe& other) const { return elements_ == other.elements_; }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// Element of P(X): a dense membership vector over a universe.
class Subset {
 public:
  explicit Subset(UniversePtr universe);
  Subset(UniversePtr universe, Bits bits);

  static Subset full(UniversePtr universe);
  static Subset of(UniversePtr universe, std::initializer_list<std::string_view> names);
  static Subset of(UniversePtr universe, std::span<const std::string> names);
  static Subset singleton(UniversePtr universe, std::size_t i);

  const UniversePtr& universe() const { return universe_; }
  const Bits& bits() const { return bits_; }
  std::size_t universe_size() const { return bits_.size(); }

  bool contains(std::size_t i) const { return bits_.test(i); }
  bool contains(std::string_view name) const { return bits_.test(universe_->index_of(name)); }
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_subset_of(const Subset& other) const;

  Subset complement() const;
  Subset& operator&=(const Subset& other);
  Subset& operator|=(const Subset& other);
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }

  // Member indices and names in canonical order.
  std::vector<std::size_t> indices() const;
  std::vector<std::string> names() const;
  std::string to_string() const;  // "{a, b}"

  bool operator==(const Subset& other) const;

 private:
  void require_same(const Subset& other) const;

  UniversePtr universe_;
  Bits bits_;
};

/// A {0,1}-valued function on a universe.
class Predicate {
 public:
  Predicate(UniversePtr universe, std::vector<bool> truth);

  static Predicate always_true(UniversePtr universe);
  static Predicate always_false(UniversePtr universe);
  static Predicate from_truth_set(const Subset& truth_set);

  const UniversePtr& universe() const { return universe_; }
  bool operator()(std::size_t i) const { return truth_.at(i); }
  Subset truth_set() const;

  Predicate operator!() const;
  friend Predicate operator&&(const Predicate& a, const Predicate& b);
  friend Predicate operator||(const Predicate& a, const Predicate& b);

  // P restricted to Y; the result lives on a new universe holding Y's elements.
  Predicate restrict(const Subset& y) const;

  bool operator==(const Predicate& other) const;

 private:
  UniversePtr universe_;
  std::vector<bool> truth_;
};

/// A map from each domain element to a subset of the codomain.
class Multifunction {
 public:
  // Every value starts empty.
  Multifunction(UniversePtr domain, UniversePtr codomain);
  // Endo-multifunction with empty values.
  explicit Multifunction(UniversePtr universe) : Multifunction(universe, universe) {}
  Multifunction(UniversePtr domain, std::vector<Subset> values);

  const UniversePtr& domain() const { return domain_; }
  const UniversePtr& codomain() const { return codomain_; }
  bool is_endo() const { return same_universe(domain_, codomain_); }

  const Subset& operator()(std::size_t i) const { return values_.at(i); }
  const Subset& at(std::string_view name) const { return values_.at(domain_->index_of(name)); }
  const std::vector<Subset>& values() const { return values_; }
  void set(std::size_t i, Subset value);

  // Pointwise inclusion: the order on P(X)^X.
  bool pointwise_leq(const Multifunction& other) const;

  // One line per domain element in canonical order: "a: [a, b]".
  std::string to_table() const;

  bool operator==(const Multifunction& other) const;

 private:
  UniversePtr domain_;
  UniversePtr codomain_;
  std::vector<Subset> values_;
};

/// {x | x in f(x)}.
Subset fix_points(const Multifunction& f);

/// f^-1(b) = {a | b in f(a)}.
Multifunction inverse(const Multifunction& f);

/// fix f equals the truth set of P.
bool is_unlocking(const Multifunction& f, const Predicate& p);

/// Element index to element index; a total function on a universe.
using Endofunction = std::vector<std::size_t>;

/// x -> {g(x)}.
Multifunction lift_function(const UniversePtr& universe, std::span<const std::size_t> g);

/// {x | g(x) = x}.
Subset fixed_points(const UniversePtr& universe, std::span<const std::size_t> g);

}  // namespace unlock
