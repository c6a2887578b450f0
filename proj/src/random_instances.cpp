#include "unlock/random_instances.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace unlock {

std::size_t uniform_below(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// Fisher-Yates over [0, n) using uniform_below; the first k entries.
std::vector<std::size_t> distinct_codes(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> codes(n);
  for (std::size_t i = 0; i < n; ++i) codes[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(codes[i], codes[i + uniform_below(rng, n - i)]);
  codes.resize(k);
  return codes;
}

FunctionSet random_functions(Rng& rng, const std::string& prefix, std::size_t times, std::size_t max_alphabet,
                             std::size_t max_members) {
  const auto alphabet_size = 1 + uniform_below(rng, max_alphabet);
  const auto possible = power(alphabet_size, times);
  const auto members = 1 + uniform_below(rng, std::min(max_members, possible));
  std::vector<std::string> ids;
  std::vector<std::vector<std::size_t>> rows;
  for (auto code : distinct_codes(rng, possible, members)) {
    std::vector<std::size_t> row(times);
    for (std::size_t t = 0; t < times; ++t) {
      row[t] = code % alphabet_size;
      code /= alphabet_size;
    }
    ids.push_back(prefix + std::to_string(ids.size()));
    rows.push_back(std::move(row));
  }
  return FunctionSet(Universe::make(std::move(ids)), Universe::numbered(alphabet_size), std::move(rows), times);
}

}  // namespace

ControlInstance random_instance(Rng& rng, const RandomInstanceConfig& config) {
  const auto times = 1 + uniform_below(rng, config.max_times);
  std::vector<std::string> time_names;
  for (std::size_t t = 1; t <= times; ++t) time_names.push_back(std::to_string(t));
  auto controls = random_functions(rng, "c", times, config.max_control_alphabet, config.max_controls);
  auto uncertainties = random_functions(rng, "w", times, config.max_uncertainty_alphabet, config.max_uncertainties);

  const auto masks = (std::size_t{1} << times) - 1;  // nonempty subsets of I
  const auto windows = 1 + uniform_below(rng, std::min(config.max_windows, masks));
  std::vector<Window> family;
  for (auto code : distinct_codes(rng, masks, windows)) {
    const auto mask = code + 1;
    Window w;
    for (std::size_t t = 0; t < times; ++t) {
      if ((mask >> t) & 1U) w.push_back(t);
    }
    family.push_back(std::move(w));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t w = 0; w < uncertainties.size(); ++w) {
    for (std::size_t c = 0; c < controls.size(); ++c) {
      if (uniform_below(rng, 100) < config.beta_percent) pairs.emplace_back(w, c);
    }
  }
  while (pairs.size() > config.max_beta_total) pairs.erase(pairs.begin() + uniform_below(rng, pairs.size()));
  std::vector<Subset> beta(uncertainties.size(), Subset(controls.ids()));
  for (auto [w, c] : pairs) beta[w].insert(c);

  return ControlInstance(Universe::make(std::move(time_names)), std::move(controls), std::move(uncertainties),
                         std::move(family), std::move(beta));
}

SelectionMap random_selection_below(Rng& rng, const SelectionMap& bound, unsigned percent) {
  auto out = bound;
  for (std::size_t w = 0; w < bound.size(); ++w) {
    auto value = bound[w];
    for (auto c : bound[w].indices()) {
      if (uniform_below(rng, 100) >= percent) value.erase(c);
    }
    out.set(w, std::move(value));
  }
  return out;
}

SelectionMap random_selection(Rng& rng, const ControlInstance& instance, unsigned percent) {
  return random_selection_below(rng, SelectionMap::full(instance), percent);
}

Predicate random_predicate(Rng& rng, const UniversePtr& universe) {
  std::vector<bool> truth(universe->size());
  for (std::size_t i = 0; i < truth.size(); ++i) truth[i] = rng() & 1U;
  return Predicate(universe, std::move(truth));
}

PredicateFamily random_family(Rng& rng, std::size_t max_indices, std::size_t max_factor) {
  const auto arity = 1 + uniform_below(rng, max_indices);
  std::vector<std::string> names;
  std::vector<UniversePtr> factors;
  for (std::size_t i = 0; i < arity; ++i) {
    names.push_back("i" + std::to_string(i));
    factors.push_back(Universe::numbered(1 + uniform_below(rng, max_factor)));
  }
  auto space = std::make_shared<const ProductSpace>(std::move(names), std::move(factors));
  const auto members = 1 + uniform_below(rng, arity);
  std::vector<ProductPredicate> predicates;
  for (std::size_t j = 0; j < members; ++j) {
    std::vector<bool> truth(space->cardinality());
    for (std::size_t r = 0; r < truth.size(); ++r) truth[r] = rng() & 1U;
    predicates.emplace_back(space, std::move(truth));
  }
  return PredicateFamily(space, std::move(predicates), distinct_codes(rng, arity, members));
}

}  // namespace unlock
