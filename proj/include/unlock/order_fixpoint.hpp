#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "unlock/finite_core.hpp"

namespace unlock {

/// A partial order on a finite universe, stored as a dense relation matrix.
class FinitePoset {
 public:
  // leq[i][j] holds when i <= j. Reflexivity, antisymmetry and transitivity
  // are checked; violations throw InputError(kNotPartialOrder).
  FinitePoset(UniversePtr universe, std::vector<std::vector<bool>> leq);

  // Reflexive-transitive closure of the given (lower, upper) pairs.
  static FinitePoset from_pairs(UniversePtr universe, std::span<const std::pair<std::size_t, std::size_t>> pairs);
  // Total order listing elements from least to greatest.
  static FinitePoset chain(UniversePtr universe, std::span<const std::size_t> ascending);
  // Total order following canonical element order.
  static FinitePoset chain(UniversePtr universe);
  static FinitePoset antichain(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  const std::vector<std::vector<bool>>& relation() const { return leq_; }

  std::optional<std::size_t> greatest() const;
  std::optional<std::size_t> least() const;
  // Greatest element of a subset, if it has one.
  std::optional<std::size_t> greatest_of(const Subset& s) const;

 private:
  UniversePtr universe_;
  std::vector<std::vector<bool>> leq_;
};

/// For a finite poset every nonempty chain has a minimum, so chain-completeness
/// comes down to the empty chain: a greatest element must exist.
bool is_chain_complete(const FinitePoset& order);

bool is_restrictive(std::span<const std::size_t> f, const FinitePoset& order);
bool is_isotone(std::span<const std::size_t> f, const FinitePoset& order);

/// x -> {y | y <= x}. Unlocks the always-true predicate.
Multifunction le_map(const FinitePoset& order);

/// Result of narrowing an unlocking multifunction to a single-valued map.
struct NarrowedFunction {
  Multifunction candidates;                     // G(x) = LE(x) & f(x)
  Subset domain;                                // Y = {x | G(x) nonempty}
  std::vector<std::optional<std::size_t>> map;  // g, indexed by X, set exactly on Y
  // A point of Y whose image falls outside Y, if any. Narrowing does not
  // guarantee g(Y) is contained in Y, so this is reported rather than assumed.
  std::optional<std::size_t> escape;

  bool maps_into_domain() const { return !escape.has_value(); }
  Subset fixed_points() const;
  // g(x) <= x for every x in Y.
  bool is_restrictive(const FinitePoset& order) const;
};

/// Builds G = LE & f, its support Y and the selection g(x) = greatest element
/// of G(x). When G(x) has no greatest element the member with the smallest
/// canonical index is chosen. Throws InputError(kNotUnlocking) if f does not
/// unlock p.
NarrowedFunction narrow_to_function(const Multifunction& f, const Predicate& p, const FinitePoset& order);

/// Successive values of an iterated map. values[0] is the start point and
/// values[k + 1] = step(values[k]).
template <class T>
struct IterationTrace {
  std::vector<T> values;
  bool converged = false;

  std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
  const T& last() const { return values.back(); }
};

/// Applies step until two consecutive values coincide or max_steps applications
/// have been made. The confirming application counts as a step.
template <class T, class Step>
IterationTrace<T> iterate_until_stable(T start, Step&& step, std::size_t max_steps) {
  IterationTrace<T> trace;
  trace.values.push_back(std::move(start));
  for (std::size_t k = 0; k < max_steps; ++k) {
    T next = step(trace.values.back());
    const bool stable = next == trace.values.back();
    trace.values.push_back(std::move(next));
    if (stable) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

IterationTrace<std::size_t> iterate_from(std::span<const std::size_t> f, std::size_t start, std::size_t max_steps);

/// {limit of the f-iteration from x : x in X} for a restrictive f on a
/// chain-complete poset. Each start is allowed |X| applications. The result is
/// checked against the literal set {x | f(x) = x}.
Subset iterate_to_fixpoints(std::span<const std::size_t> f, const FinitePoset& order);

/// Stabilized value of iterating f from the greatest element. For a restrictive
/// isotone f this is the greatest fixed point; that claim is cross-checked.
std::size_t greatest_fixpoint_descent(std::span<const std::size_t> f, const FinitePoset& order);

}  // namespace unlock
