#pragma once

// Non-anticipating selections of a multifunction beta: Omega -> P(C).
//
// C (controls) and Omega (uncertainties) are finite sets of total functions on
// a finite time set I. A selection phi <= beta is non-anticipating for a family
// of windows when, for every window A, uncertainties that agree on A receive
// control sets with identical A-traces. The operator gamma removes from each
// phi(w) the controls whose A-trace is missing from some phi(w') with
// w'|A = w|A; its fixed points are exactly the non-anticipating selections, and
// iterating it from beta reaches the greatest one.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unlock/finite_core.hpp"
#include "unlock/order_fixpoint.hpp"

namespace unlock {

/// Sorted, duplicate-free time-point indices. Never empty inside an instance.
using Window = std::vector<std::size_t>;

/// Values of a function on the points of a window, in window order.
using Trace = std::vector<std::size_t>;
using TraceSet = std::set<Trace>;

/// A restriction f|_A in canonical form.
struct TraceKey {
  Window window;
  Trace values;
  auto operator<=>(const TraceKey&) const = default;
};

/// A named set of total functions from the time points to an alphabet.
class FunctionSet {
 public:
  FunctionSet(UniversePtr ids, UniversePtr alphabet, std::vector<std::vector<std::size_t>> rows,
              std::size_t time_count);

  const UniversePtr& ids() const { return ids_; }
  const UniversePtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<std::size_t>& row(std::size_t member) const { return rows_.at(member); }

  Trace restrict(std::size_t member, const Window& window) const;
  bool agree_on(std::size_t a, std::size_t b, const Window& window) const;

  bool operator==(const FunctionSet& other) const;

 private:
  UniversePtr ids_;
  UniversePtr alphabet_;
  std::vector<std::vector<std::size_t>> rows_;
};

/// Trace bookkeeping for one window: the distinct control traces and which one
/// each control has, and the agreement classes of the uncertainties.
struct WindowIndex {
  Window window;
  std::vector<Trace> control_traces;                // distinct, sorted
  std::vector<std::size_t> control_trace_id;        // per control
  std::vector<std::size_t> uncertainty_class;       // per uncertainty; equal iff they agree on the window
};

class SelectionMap;

/// The data of the selection problem. Immutable after construction.
class ControlInstance {
 public:
  // Validates: windows nonempty, sorted-unique and inside I, no duplicate
  // windows, beta one subset of C per uncertainty, C and Omega free of
  // extensionally equal members.
  ControlInstance(UniversePtr time_points, FunctionSet controls, FunctionSet uncertainties,
                  std::vector<Window> family, std::vector<Subset> beta);

  const UniversePtr& time_points() const { return time_points_; }
  const FunctionSet& controls() const { return controls_; }
  const FunctionSet& uncertainties() const { return uncertainties_; }
  const std::vector<Window>& family() const { return family_; }
  const std::vector<Subset>& beta_values() const { return beta_; }
  SelectionMap beta() const;

  const WindowIndex& window_index(std::size_t k) const { return indices_.at(k); }
  WindowIndex make_window_index(const Window& window) const;

  std::string window_to_string(const Window& window) const;  // "[1, 2]"
  std::string trace_to_string(const Window& window, const Trace& trace) const;  // "{1: 0, 2: 1}"

  // Same time points, functions, family and beta, compared by name.
  bool operator==(const ControlInstance& other) const;

 private:
  UniversePtr time_points_;
  FunctionSet controls_;
  FunctionSet uncertainties_;
  std::vector<Window> family_;
  std::vector<Subset> beta_;
  std::vector<WindowIndex> indices_;
};

/// An element of M = P(C)^Omega: one subset of C per uncertainty.
class SelectionMap {
 public:
  explicit SelectionMap(std::vector<Subset> values) : values_(std::move(values)) {}

  static SelectionMap empty(const ControlInstance& instance);
  static SelectionMap full(const ControlInstance& instance);

  std::size_t size() const { return values_.size(); }
  const Subset& operator[](std::size_t w) const { return values_.at(w); }
  const std::vector<Subset>& values() const { return values_; }
  void set(std::size_t w, Subset value) { values_.at(w) = std::move(value); }

  // Sum of |phi(w)|.
  std::size_t total() const;
  // Pointwise inclusion.
  bool leq(const SelectionMap& other) const;

  bool operator==(const SelectionMap& other) const { return values_ == other.values_; }

 private:
  std::vector<Subset> values_;
};

/// {v in psi | v|A = w|A}. The anchor w need not belong to psi.
Subset spring(const FunctionSet& functions, const Subset& psi, std::size_t anchor, const Window& window);

/// spring minus the anchor itself.
Subset spring_minus(const FunctionSet& functions, const Subset& psi, std::size_t anchor, const Window& window);

/// Intersection over v in the (minus-)spring of w in Omega of the A-traces of
/// phi(v). When the minus-spring is empty the intersection over the empty
/// family is taken to be every A-trace of C.
TraceSet hat_spring(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega,
                    const Window& window, bool minus);

// P_w in implication form: phi(w)|A is a subset of phi(w')|A whenever w'|A = w|A.
bool p_omega_implication_form(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega);
// P_w in hat form: hat(phi, w|A) = phi(w)|A for every window.
bool p_omega_hat_form(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega);

/// Evaluates both forms of P_w and throws InvariantError if they differ.
bool check_P_omega(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega);

/// The symmetric form: w|A = w'|A implies phi(w)|A = phi(w')|A.
bool nonanticipating_symmetric_form(const ControlInstance& instance, const SelectionMap& phi);

/// Conjunction of check_P_omega over Omega, cross-checked against the
/// symmetric form.
bool check_P_na(const ControlInstance& instance, const SelectionMap& phi);

/// D_w(phi) = {f in C | f|A in hat(phi, -w|A) for every window}. The value of
/// the unlocking box at coordinate w is the power set of this set.
Subset feasible_set_D(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega);

/// phi lies in its own box: phi(w) is a subset of D_w(phi) for every w. Checked
/// against check_P_na.
bool check_F_Pna_fixed(const ControlInstance& instance, const SelectionMap& phi);

// Three computations of gamma that must agree.
// Element filter: keep f in phi(w) if for every window A, every w' with
// w'|A = w|A has some f' in phi(w') with f'|A = f|A.
SelectionMap gamma_element_filter(const ControlInstance& instance, const SelectionMap& phi);
// Coordinate form: keep f in phi(w) whose trace lies in hat(phi, w|A) for every A.
SelectionMap gamma_hat_form(const ControlInstance& instance, const SelectionMap& phi);
// Same with hat(phi, -w|A), the minus-spring variant.
SelectionMap gamma_minus_hat_form(const ControlInstance& instance, const SelectionMap& phi);

/// gamma(phi); all three forms are computed and compared.
SelectionMap gamma(const ControlInstance& instance, const SelectionMap& phi);

/// Every window separates all uncertainties, so every selection is
/// non-anticipating.
bool family_is_vacuous(const ControlInstance& instance);

struct GreatestSelection {
  SelectionMap selection;
  IterationTrace<SelectionMap> trace;  // trace.values[0] is beta
  bool family_vacuous = false;
  std::vector<std::size_t> empty_values;  // uncertainties mapped to the empty set

  std::size_t iterations() const { return trace.steps(); }
  std::vector<std::size_t> sizes() const;  // total() of each trace value
};

/// Iterates phi_0 = beta, phi_{k+1} = gamma(phi_k) until it repeats. The number
/// of applications is bounded by sum |beta(w)| + 1.
GreatestSelection greatest_selection(const ControlInstance& instance);

/// Iteration of gamma from an arbitrary start below beta.
IterationTrace<SelectionMap> iterate_gamma(const ControlInstance& instance, const SelectionMap& start);

/// A breach of non-anticipation: the trace of `control` on family window
/// `window` belongs to phi(omega)|A but not to phi(omega_prime)|A although the
/// two uncertainties agree on A.
struct Violation {
  std::size_t window;  // index into the family
  std::size_t omega;
  std::size_t omega_prime;
  Trace trace;
  std::size_t control;  // least control of phi(omega) carrying the trace
};

/// Least violation in (window, omega, omega', trace) order.
std::optional<Violation> find_violation(const ControlInstance& instance, const SelectionMap& phi);

}  // namespace unlock
