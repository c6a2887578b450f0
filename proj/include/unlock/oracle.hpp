#pragma once

// Brute-force references. Everything here is written against the raw
// definitions using names and std::set, and shares no helpers with the
// bitset-based code it is used to check. Exponential by design.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unlock/finite_core.hpp"
#include "unlock/nonanticipation.hpp"

namespace unlock::oracle {

inline constexpr std::size_t kDefaultSelectionCap = 20;
inline constexpr std::size_t kDefaultMultifunctionCap = 4;

/// Streams every phi with phi(w) a subset of beta(w), each exactly once. The
/// (w, c) pairs of beta, taken w-major in canonical order, are the bits of a
/// counter; the first pair is the least significant bit.
class SelectionEnumerator {
 public:
  explicit SelectionEnumerator(const ControlInstance& instance, std::size_t cap = kDefaultSelectionCap);

  std::optional<SelectionMap> next();
  std::uint64_t total() const { return total_; }

 private:
  const ControlInstance* instance_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::uint64_t counter_ = 0;
  std::uint64_t total_;
};

/// Streams all (2^n)^n endo-multifunctions of a universe with n <= cap.
class MultifunctionEnumerator {
 public:
  explicit MultifunctionEnumerator(UniversePtr universe, std::size_t cap = kDefaultMultifunctionCap);

  std::optional<Multifunction> next();
  std::uint64_t total() const { return total_; }

 private:
  UniversePtr universe_;
  std::uint64_t counter_ = 0;
  std::uint64_t total_;
};

/// The instance re-expressed with names only.
class Referee {
 public:
  explicit Referee(const ControlInstance& instance);

  using Function = std::map<std::string, std::string>;  // time -> value
  using Selection = std::map<std::string, std::set<std::string>>;  // uncertainty -> controls

  Selection raw(const SelectionMap& phi) const;
  SelectionMap cook(const Selection& raw) const;

  /// Literal evaluation of: for every window A and uncertainties w, w' with
  /// w|A = w'|A, every A-trace of phi(w) is an A-trace of phi(w').
  bool nonanticipating(const Selection& phi) const;

 private:
  std::set<Function> traces(const std::set<std::string>& controls, const std::vector<std::string>& window) const;

  const ControlInstance* instance_;
  std::map<std::string, Function> controls_;
  std::map<std::string, Function> uncertainties_;
  std::vector<std::string> omega_order_;
  std::vector<std::vector<std::string>> family_;
};

bool oracle_nonanticipating(const ControlInstance& instance, const SelectionMap& phi);

/// Pointwise union of every non-anticipating phi below beta.
SelectionMap oracle_greatest(const ControlInstance& instance, std::size_t cap = kDefaultSelectionCap);

}  // namespace unlock::oracle
