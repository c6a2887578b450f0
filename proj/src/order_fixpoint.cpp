#include "unlock/order_fixpoint.hpp"

#include "unlock/error.hpp"

namespace unlock {

FinitePoset::FinitePoset(UniversePtr universe, std::vector<std::vector<bool>> leq)
    : universe_(std::move(universe)), leq_(std::move(leq)) {
  const auto n = universe_->size();
  if (leq_.size() != n) {
    throw InputError(ErrorCode::kUniverseMismatch, "order relation has the wrong number of rows");
  }
  for (const auto& row : leq_) {
    if (row.size() != n) throw InputError(ErrorCode::kUniverseMismatch, "order relation has a short row");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) {
      throw InputError(ErrorCode::kNotPartialOrder, "order is not reflexive at '" + universe_->name(a) + "'");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) {
        throw InputError(ErrorCode::kNotPartialOrder,
                         "order is not antisymmetric on '" + universe_->name(a) + "', '" + universe_->name(b) + "'");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) {
          throw InputError(ErrorCode::kNotPartialOrder, "order is not transitive");
        }
      }
    }
  }
}

FinitePoset FinitePoset::from_pairs(UniversePtr universe, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const auto n = universe->size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw InputError(ErrorCode::kDanglingRef, "order pair outside the universe");
    leq[lo][hi] = true;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return FinitePoset(std::move(universe), std::move(leq));
}

FinitePoset FinitePoset::chain(UniversePtr universe, std::span<const std::size_t> ascending) {
  const auto n = universe->size();
  if (ascending.size() != n) {
    throw InputError(ErrorCode::kNotTotal, "chain must list every element exactly once");
  }
  std::vector<std::size_t> rank(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (ascending[r] >= n || rank[ascending[r]] != n) {
      throw InputError(ErrorCode::kNotTotal, "chain must list every element exactly once");
    }
    rank[ascending[r]] = r;
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = rank[a] <= rank[b];
  }
  return FinitePoset(std::move(universe), std::move(leq));
}

FinitePoset FinitePoset::chain(UniversePtr universe) {
  std::vector<std::size_t> ascending(universe->size());
  for (std::size_t i = 0; i < ascending.size(); ++i) ascending[i] = i;
  return chain(std::move(universe), ascending);
}

FinitePoset FinitePoset::antichain(UniversePtr universe) {
  return from_pairs(std::move(universe), {});
}

std::optional<std::size_t> FinitePoset::greatest() const { return greatest_of(Subset::full(universe_)); }

std::optional<std::size_t> FinitePoset::least() const {
  for (std::size_t a = 0; a < size(); ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < size() && below_all; ++b) below_all = leq_[a][b];
    if (below_all) return a;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::greatest_of(const Subset& s) const {
  for (auto a : s.indices()) {
    bool above_all = true;
    for (auto b : s.indices()) {
      if (!leq_[b][a]) {
        above_all = false;
        break;
      }
    }
    if (above_all) return a;
  }
  return std::nullopt;
}

bool is_chain_complete(const FinitePoset& order) { return order.greatest().has_value(); }

bool is_restrictive(std::span<const std::size_t> f, const FinitePoset& order) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!order.leq(f[x], x)) return false;
  }
  return true;
}

bool is_isotone(std::span<const std::size_t> f, const FinitePoset& order) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (order.leq(x, y) && !order.leq(f[x], f[y])) return false;
    }
  }
  return true;
}

Multifunction le_map(const FinitePoset& order) {
  const auto& u = order.universe();
  Multifunction f(u);
  for (std::size_t x = 0; x < u->size(); ++x) {
    Subset down(u);
    for (std::size_t y = 0; y < u->size(); ++y) {
      if (order.leq(y, x)) down.insert(y);
    }
    f.set(x, std::move(down));
  }
  return f;
}

Subset NarrowedFunction::fixed_points() const {
  Subset out(domain.universe());
  for (auto x : domain.indices()) {
    if (map[x] == x) out.insert(x);
  }
  return out;
}

bool NarrowedFunction::is_restrictive(const FinitePoset& order) const {
  for (auto x : domain.indices()) {
    if (!map[x] || !order.leq(*map[x], x)) return false;
  }
  return true;
}

NarrowedFunction narrow_to_function(const Multifunction& f, const Predicate& p, const FinitePoset& order) {
  if (!same_universe(order.universe(), p.universe())) {
    throw InputError(ErrorCode::kUniverseMismatch, "order and predicate on different universes");
  }
  if (!is_unlocking(f, p)) {
    throw InputError(ErrorCode::kNotUnlocking, "multifunction does not unlock the predicate");
  }
  const auto& u = p.universe();
  const auto down = le_map(order);
  Multifunction candidates(u);
  Subset domain(u);
  std::vector<std::optional<std::size_t>> map(u->size());
  for (std::size_t x = 0; x < u->size(); ++x) {
    auto g = down(x) & f(x);
    if (!g.empty()) {
      domain.insert(x);
      map[x] = order.greatest_of(g).value_or(g.indices().front());
    }
    candidates.set(x, std::move(g));
  }
  std::optional<std::size_t> escape;
  for (auto x : domain.indices()) {
    if (!domain.contains(*map[x])) {
      escape = x;
      break;
    }
  }
  return NarrowedFunction{std::move(candidates), std::move(domain), std::move(map), escape};
}

IterationTrace<std::size_t> iterate_from(std::span<const std::size_t> f, std::size_t start, std::size_t max_steps) {
  return iterate_until_stable(start, [f](std::size_t x) { return f[x]; }, max_steps);
}

namespace {

void require_total(std::span<const std::size_t> f, const FinitePoset& order) {
  if (f.size() != order.size()) throw InputError(ErrorCode::kNotTotal, "function must be total on the poset");
  for (auto v : f) {
    if (v >= order.size()) throw InputError(ErrorCode::kDanglingRef, "function value outside the poset");
  }
}

}  // namespace

Subset iterate_to_fixpoints(std::span<const std::size_t> f, const FinitePoset& order) {
  require_total(f, order);
  if (!is_chain_complete(order)) {
    throw InputError(ErrorCode::kNoGreatest, "poset is not chain-complete");
  }
  if (!is_restrictive(f, order)) {
    throw InputError(ErrorCode::kNotRestrictive, "function is not restrictive");
  }
  const auto& u = order.universe();
  Subset limits(u);
  for (std::size_t x = 0; x < u->size(); ++x) {
    auto trace = iterate_from(f, x, u->size());
    if (!trace.converged) {
      throw InvariantError("iteration from '" + u->name(x) + "' did not stabilize within |X| steps");
    }
    limits.insert(trace.last());
  }
  if (limits != fixed_points(u, f)) {
    throw InvariantError("iteration limits differ from the fixed-point set");
  }
  return limits;
}

std::size_t greatest_fixpoint_descent(std::span<const std::size_t> f, const FinitePoset& order) {
  require_total(f, order);
  auto top = order.greatest();
  if (!top) throw InputError(ErrorCode::kNoGreatest, "poset has no greatest element");
  if (!is_restrictive(f, order)) throw InputError(ErrorCode::kNotRestrictive, "function is not restrictive");
  if (!is_isotone(f, order)) throw InputError(ErrorCode::kNotIsotone, "function is not isotone");

  auto trace = iterate_from(f, *top, order.size());
  if (!trace.converged) throw InvariantError("descent from the top did not stabilize within |X| steps");
  const auto result = trace.last();
  for (auto y : iterate_to_fixpoints(f, order).indices()) {
    if (!order.leq(y, result)) throw InvariantError("descent limit is not the greatest fixed point");
  }
  return result;
}

}  // namespace unlock
