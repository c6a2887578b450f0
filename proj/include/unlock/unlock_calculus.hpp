#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "unlock/finite_core.hpp"

namespace unlock {

/// Greatest unlocking multifunction: x -> X when P(x), X \ {x} otherwise.
Multifunction um_top(const Predicate& p);

/// Least unlocking multifunction: x -> {x} when P(x), the empty set otherwise.
Multifunction um_bottom(const Predicate& p);

struct UnlockingFamilyBounds {
  Predicate predicate;
  Multifunction top;
  Multifunction bottom;
};

UnlockingFamilyBounds um_bounds(const Predicate& p);

/// Sandwich test bottom <= f <= top. Equivalent to is_unlocking(f, p).
bool um_contains(const Multifunction& f, const Predicate& p);

// Pointwise combinators. They do not check that their operands unlock anything:
// fed members of UM(P) and UM(Q) they produce members of UM(!P), UM(P && Q)
// and UM(P || Q) respectively.
Multifunction um_negate(const Multifunction& g);
Multifunction um_and(const Multifunction& g, const Multifunction& q);
Multifunction um_or(const Multifunction& g, const Multifunction& q);

/// y -> Y & phi(y) on the universe made of Y's elements.
Multifunction um_restrict(const Multifunction& phi, const Subset& y);

inline constexpr std::size_t kDefaultUnlockingEnumerationCap = 4;

/// Streams every member of UM(P), one at a time, in a fixed order.
///
/// The free bits are the pairs (x, y) with x != y; the pair (x, x) is pinned by
/// P(x). UM(P) therefore has 2^(n(n-1)) members for |X| = n, which is why the
/// universe size is capped.
class UnlockingEnumerator {
 public:
  explicit UnlockingEnumerator(Predicate p, std::size_t cap = kDefaultUnlockingEnumerationCap);

  std::optional<Multifunction> next();
  std::uint64_t total() const { return total_; }

 private:
  Multifunction bottom_;
  std::size_t n_;
  std::uint64_t counter_ = 0;
  std::uint64_t total_;
};

/// Uniform sample from UM(P): each free bit is an independent fair coin.
Multifunction um_sample(const Predicate& p, std::mt19937_64& rng);

}  // namespace unlock
