#pragma once

// Fixtures shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unlock/finite_core.hpp"
#include "unlock/nonanticipation.hpp"
#include "unlock/order_fixpoint.hpp"

namespace unlock::testing {

// Functions on the time points {"1", ..., "n"} written as digit strings, so
// "01" is 1 -> 0, 2 -> 1.
inline FunctionSet functions(const std::vector<std::string>& ids, const std::vector<std::string>& codes,
                             const UniversePtr& alphabet) {
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& code : codes) {
    std::vector<std::size_t> row;
    for (char ch : code) row.push_back(alphabet->index_of(std::string(1, ch)));
    rows.push_back(std::move(row));
  }
  return FunctionSet(Universe::make(ids), alphabet, std::move(rows), codes.front().size());
}

inline UniversePtr binary() { return Universe::make({"0", "1"}); }

// Two time points, binary values, C = {c00, c01, c10, c11}, Omega = {w00, w01},
// one window {1}.
inline ControlInstance d2_instance(std::vector<std::string> beta_w00 = {"c00", "c10"},
                                   std::vector<std::string> beta_w01 = {"c00", "c01"}) {
  const auto times = Universe::make({"1", "2"});
  auto controls = functions({"c00", "c01", "c10", "c11"}, {"00", "01", "10", "11"}, binary());
  auto uncertainties = functions({"w00", "w01"}, {"00", "01"}, binary());
  const auto ids = controls.ids();
  std::vector<Subset> beta{Subset::of(ids, std::span<const std::string>(beta_w00)),
                           Subset::of(ids, std::span<const std::string>(beta_w01))};
  return ControlInstance(times, std::move(controls), std::move(uncertainties), {{0}}, std::move(beta));
}

inline SelectionMap selection(const ControlInstance& instance, const std::vector<std::vector<std::string>>& values) {
  std::vector<Subset> out;
  for (const auto& names : values) out.push_back(Subset::of(instance.controls().ids(), std::span<const std::string>(names)));
  return SelectionMap(std::move(out));
}

// Every predicate on the universe, by truth mask.
inline std::vector<Predicate> all_predicates(const UniversePtr& u) {
  std::vector<Predicate> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u->size()); ++mask) {
    std::vector<bool> truth(u->size());
    for (std::size_t i = 0; i < u->size(); ++i) truth[i] = (mask >> i) & 1;
    out.emplace_back(u, truth);
  }
  return out;
}

// Every nonempty subset, by mask.
inline std::vector<Subset> nonempty_subsets(const UniversePtr& u) {
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << u->size()); ++mask) {
    Subset s(u);
    for (std::size_t i = 0; i < u->size(); ++i) {
      if ((mask >> i) & 1) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Every total order, as ascending permutations.
inline std::vector<FinitePoset> all_total_orders(const UniversePtr& u) {
  std::vector<std::size_t> perm(u->size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<FinitePoset> out;
  do {
    out.push_back(FinitePoset::chain(u, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Every partial order: each off-diagonal relation matrix that passes the axioms.
inline std::vector<FinitePoset> all_partial_orders(const UniversePtr& u) {
  const std::size_t n = u->size();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) cells.emplace_back(i, j);
    }
  }
  std::vector<FinitePoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    bool ok = true;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if ((mask >> k) & 1) leq[cells[k].first][cells[k].second] = true;
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;
        }
      }
    }
    if (ok) out.emplace_back(u, std::move(leq));
  }
  return out;
}

}  // namespace unlock::testing

namespace unlock::testing {

// Canonical text of a selection, usable as a set key.
inline std::string selection_key(const ControlInstance& instance, const SelectionMap& phi) {
  std::string out;
  for (std::size_t w = 0; w < phi.size(); ++w) out += instance.uncertainties().ids()->name(w) + phi[w].to_string() + ";";
  return out;
}

}  // namespace unlock::testing
