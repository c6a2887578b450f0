#pragma once

// JSON documents and the command-line front end.
//
// Instance document (format_version "1"):
//   {
//     "format_version": "1",
//     "time_points": ["1", "2"],
//     "control_alphabet": ["0", "1"],
//     "uncertainty_alphabet": ["0", "1"],
//     "controls": {"c00": {"1": "0", "2": "0"}, ...},
//     "uncertainties": {"w00": {"1": "0", "2": "0"}, ...},
//     "family": [["1"], ["1", "2"]],
//     "beta": {"w00": ["c00", "c10"], ...}
//   }
// Solution document:
//   {
//     "format_version": "1",
//     "selection": {"w00": ["c00"], ...},
//     "iterations": 2,                       // optional on input
//     "sizes": [4, 3, 3],                    // only with --trace
//     "vacuity": {"family_vacuous": false, "empty_values": []}
//   }
// Unknown keys are rejected everywhere. Ids and values may be written as
// strings or integers; they are printed back as strings.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unlock/finite_core.hpp"
#include "unlock/nonanticipation.hpp"
#include "unlock/order_fixpoint.hpp"

namespace unlock::io {

inline constexpr std::string_view kFormatVersion = "1";

ControlInstance parse_instance(std::string_view text);
std::string print_instance(const ControlInstance& instance);

struct Vacuity {
  bool family_vacuous = false;
  std::vector<std::size_t> empty_values;
  bool operator==(const Vacuity&) const = default;
};

struct SolutionDocument {
  SelectionMap selection;
  std::optional<std::size_t> iterations;
  std::optional<std::vector<std::size_t>> sizes;
  std::optional<Vacuity> vacuity;

  bool operator==(const SolutionDocument&) const = default;
};

SolutionDocument make_solution(const GreatestSelection& result, bool with_sizes);
SolutionDocument parse_solution(std::string_view text, const ControlInstance& instance);
std::string print_solution(const SolutionDocument& doc, const ControlInstance& instance);

/// "w00: [c00]; w01: [c00, c01]"
std::string selection_line(const ControlInstance& instance, const SelectionMap& phi);

/// Universe document for the um subcommands:
///   {"format_version": "1", "universe": [...], "predicate": [truth set],
///    "other_predicate": [...], "subset": [...], "order": [[lower, upper], ...],
///    "mapping": {"a": ["a", "b"], ...}}
/// Only universe and predicate are required.
struct UniverseDocument {
  UniversePtr universe;
  Predicate predicate;
  std::optional<Predicate> other_predicate;
  std::optional<Subset> subset;
  FinitePoset order;  // canonical chain when absent
  std::optional<Multifunction> mapping;
};

UniverseDocument parse_universe_document(std::string_view text);

/// Runs one command. Exit status: 0 success, 1 internal invariant breach or
/// oracle mismatch, 2 rejected input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unlock::io
