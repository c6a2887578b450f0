#pragma once

// Seeded generators for randomized checks and the CLI's --random batches.
// Only raw mt19937_64 output is used (no std distributions) so a seed yields
// the same instances on every platform.

#include <cstddef>
#include <random>

#include "unlock/finite_core.hpp"
#include "unlock/nonanticipation.hpp"
#include "unlock/product_unlock.hpp"

namespace unlock {

using Rng = std::mt19937_64;

// Uniform in [0, n).
std::size_t uniform_below(Rng& rng, std::size_t n);

struct RandomInstanceConfig {
  std::size_t max_times = 3;
  std::size_t max_control_alphabet = 2;
  std::size_t max_uncertainty_alphabet = 2;
  std::size_t max_controls = 4;
  std::size_t max_uncertainties = 4;
  std::size_t max_windows = 3;
  unsigned beta_percent = 60;         // chance of each (w, c) pair in beta
  std::size_t max_beta_total = 64;    // pairs are dropped until sum |beta(w)| fits
};

ControlInstance random_instance(Rng& rng, const RandomInstanceConfig& config = {});

/// Each (w, c) pair kept independently with the given chance.
SelectionMap random_selection_below(Rng& rng, const SelectionMap& bound, unsigned percent = 50);
SelectionMap random_selection(Rng& rng, const ControlInstance& instance, unsigned percent = 50);

Predicate random_predicate(Rng& rng, const UniversePtr& universe);

/// |I| in [1, max_indices], |X_i| in [1, max_factor], |J| in [1, |I|], random
/// truth tables and a random injection.
PredicateFamily random_family(Rng& rng, std::size_t max_indices = 3, std::size_t max_factor = 3);

}  // namespace unlock
