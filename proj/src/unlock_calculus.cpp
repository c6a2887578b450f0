#include "unlock/unlock_calculus.hpp"

#include "unlock/error.hpp"

namespace unlock {

namespace {

void require_endo_on(const Multifunction& f, const Predicate& p) {
  if (!f.is_endo() || !same_universe(f.domain(), p.universe())) {
    throw InputError(ErrorCode::kUniverseMismatch, "multifunction is not an endo-map on the predicate's universe");
  }
}

void require_same_domain(const Multifunction& g, const Multifunction& q) {
  if (!same_universe(g.domain(), q.domain()) || !same_universe(g.codomain(), q.codomain())) {
    throw InputError(ErrorCode::kUniverseMismatch, "combinator operands on different universes");
  }
}

}  // namespace

Multifunction um_top(const Predicate& p) {
  const auto& u = p.universe();
  Multifunction f(u);
  for (std::size_t x = 0; x < u->size(); ++x) {
    auto value = Subset::full(u);
    if (!p(x)) value.erase(x);
    f.set(x, std::move(value));
  }
  return f;
}

Multifunction um_bottom(const Predicate& p) {
  const auto& u = p.universe();
  Multifunction f(u);
  for (std::size_t x = 0; x < u->size(); ++x) {
    if (p(x)) f.set(x, Subset::singleton(u, x));
  }
  return f;
}

UnlockingFamilyBounds um_bounds(const Predicate& p) { return {p, um_top(p), um_bottom(p)}; }

bool um_contains(const Multifunction& f, const Predicate& p) {
  require_endo_on(f, p);
  return um_bottom(p).pointwise_leq(f) && f.pointwise_leq(um_top(p));
}

Multifunction um_negate(const Multifunction& g) {
  Multifunction f(g.domain(), g.codomain());
  for (std::size_t x = 0; x < g.values().size(); ++x) f.set(x, g(x).complement());
  return f;
}

Multifunction um_and(const Multifunction& g, const Multifunction& q) {
  require_same_domain(g, q);
  Multifunction f(g.domain(), g.codomain());
  for (std::size_t x = 0; x < g.values().size(); ++x) f.set(x, g(x) & q(x));
  return f;
}

Multifunction um_or(const Multifunction& g, const Multifunction& q) {
  require_same_domain(g, q);
  Multifunction f(g.domain(), g.codomain());
  for (std::size_t x = 0; x < g.values().size(); ++x) f.set(x, g(x) | q(x));
  return f;
}

Multifunction um_restrict(const Multifunction& phi, const Subset& y) {
  if (!phi.is_endo() || !same_universe(phi.domain(), y.universe())) {
    throw InputError(ErrorCode::kUniverseMismatch, "restriction set must live on the multifunction's universe");
  }
  if (y.empty()) {
    throw InputError(ErrorCode::kEmptySet, "restriction set must be nonempty");
  }
  auto members = y.indices();
  auto sub = Universe::make(y.names());
  Multifunction out(sub);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& value = phi(members[i]);
    Subset restricted(sub);
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (value.contains(members[j])) restricted.insert(j);
    }
    out.set(i, std::move(restricted));
  }
  return out;
}

UnlockingEnumerator::UnlockingEnumerator(Predicate p, std::size_t cap)
    : bottom_(um_bottom(p)), n_(p.universe()->size()) {
  if (n_ > cap) {
    throw InputError(ErrorCode::kCapExceeded, "universe of size " + std::to_string(n_) +
                                                  " exceeds the enumeration cap " + std::to_string(cap));
  }
  auto free_bits = n_ * (n_ - 1);
  if (free_bits >= 64) {
    throw InputError(ErrorCode::kCapExceeded, "UM(P) is too large to enumerate");
  }
  total_ = std::uint64_t{1} << free_bits;
}

std::optional<Multifunction> UnlockingEnumerator::next() {
  if (counter_ == total_) return std::nullopt;
  auto f = bottom_;
  std::size_t bit = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    auto value = f(x);
    for (std::size_t y = 0; y < n_; ++y) {
      if (y == x) continue;
      if ((counter_ >> bit) & 1U) value.insert(y);
      ++bit;
    }
    f.set(x, std::move(value));
  }
  ++counter_;
  return f;
}

Multifunction um_sample(const Predicate& p, std::mt19937_64& rng) {
  auto f = um_bottom(p);
  const auto n = p.universe()->size();
  for (std::size_t x = 0; x < n; ++x) {
    auto value = f(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && (rng() & 1U)) value.insert(y);
    }
    f.set(x, std::move(value));
  }
  return f;
}

}  // namespace unlock
