#include "unlock/nonanticipation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "unlock/error.hpp"

namespace unlock {

// --- FunctionSet ------------------------------------------------------------

FunctionSet::FunctionSet(UniversePtr ids, UniversePtr alphabet, std::vector<std::vector<std::size_t>> rows,
                         std::size_t time_count)
    : ids_(std::move(ids)), alphabet_(std::move(alphabet)), rows_(std::move(rows)) {
  if (rows_.size() != ids_->size()) {
    throw InputError(ErrorCode::kNotTotal, "one row per function id is required");
  }
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != time_count) {
      throw InputError(ErrorCode::kNotTotal, "function '" + ids_->name(i) + "' is not defined on every time point");
    }
    for (auto v : rows_[i]) {
      if (v >= alphabet_->size()) {
        throw InputError(ErrorCode::kDanglingRef, "function '" + ids_->name(i) + "' takes a value outside its alphabet");
      }
    }
    auto [it, inserted] = seen.emplace(rows_[i], i);
    if (!inserted) {
      throw InputError(ErrorCode::kDuplicateFunction,
                       "'" + ids_->name(it->second) + "' and '" + ids_->name(i) + "' are the same function");
    }
  }
}

Trace FunctionSet::restrict(std::size_t member, const Window& window) const {
  const auto& r = rows_.at(member);
  Trace out;
  out.reserve(window.size());
  for (auto t : window) out.push_back(r.at(t));
  return out;
}

bool FunctionSet::agree_on(std::size_t a, std::size_t b, const Window& window) const {
  const auto& ra = rows_.at(a);
  const auto& rb = rows_.at(b);
  return std::all_of(window.begin(), window.end(), [&](std::size_t t) { return ra.at(t) == rb.at(t); });
}

bool FunctionSet::operator==(const FunctionSet& other) const {
  return same_universe(ids_, other.ids_) && same_universe(alphabet_, other.alphabet_) && rows_ == other.rows_;
}

// --- ControlInstance --------------------------------------------------------

namespace {

void validate_window(const Window& window, std::size_t time_count) {
  if (window.empty()) throw InputError(ErrorCode::kEmptyWindow, "windows must be nonempty");
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i] >= time_count) throw InputError(ErrorCode::kDanglingRef, "window point outside the time set");
    if (i > 0 && window[i - 1] >= window[i]) {
      throw InputError(ErrorCode::kSchema, "window points must be sorted and distinct");
    }
  }
}

}  // namespace

ControlInstance::ControlInstance(UniversePtr time_points, FunctionSet controls, FunctionSet uncertainties,
                                 std::vector<Window> family, std::vector<Subset> beta)
    : time_points_(std::move(time_points)),
      controls_(std::move(controls)),
      uncertainties_(std::move(uncertainties)),
      family_(std::move(family)),
      beta_(std::move(beta)) {
  if (family_.empty()) throw InputError(ErrorCode::kEmptySet, "the window family must be nonempty");
  std::set<Window> distinct;
  for (const auto& w : family_) {
    validate_window(w, time_points_->size());
    if (!distinct.insert(w).second) throw InputError(ErrorCode::kDuplicateWindow, "window listed twice");
  }
  for (const auto& f : {std::cref(controls_), std::cref(uncertainties_)}) {
    if (!f.get().size() || f.get().row(0).size() != time_points_->size()) {
      throw InputError(ErrorCode::kNotTotal, "functions must be defined on the time set");
    }
  }
  if (beta_.size() != uncertainties_.size()) {
    throw InputError(ErrorCode::kNotTotal, "beta needs one value per uncertainty");
  }
  for (const auto& b : beta_) {
    if (!same_universe(b.universe(), controls_.ids())) {
      throw InputError(ErrorCode::kUniverseMismatch, "beta values must be sets of controls");
    }
  }
  indices_.reserve(family_.size());
  for (const auto& w : family_) indices_.push_back(make_window_index(w));
}

WindowIndex ControlInstance::make_window_index(const Window& window) const {
  validate_window(window, time_points_->size());
  WindowIndex wi;
  wi.window = window;
  std::vector<Trace> traces;
  for (std::size_t c = 0; c < controls_.size(); ++c) traces.push_back(controls_.restrict(c, window));
  wi.control_traces = traces;
  std::sort(wi.control_traces.begin(), wi.control_traces.end());
  wi.control_traces.erase(std::unique(wi.control_traces.begin(), wi.control_traces.end()), wi.control_traces.end());
  for (const auto& t : traces) {
    auto it = std::lower_bound(wi.control_traces.begin(), wi.control_traces.end(), t);
    wi.control_trace_id.push_back(static_cast<std::size_t>(it - wi.control_traces.begin()));
  }
  std::map<Trace, std::size_t> classes;
  for (std::size_t w = 0; w < uncertainties_.size(); ++w) {
    auto [it, _] = classes.emplace(uncertainties_.restrict(w, window), classes.size());
    wi.uncertainty_class.push_back(it->second);
  }
  return wi;
}

bool ControlInstance::operator==(const ControlInstance& other) const {
  return same_universe(time_points_, other.time_points_) && controls_ == other.controls_ &&
         uncertainties_ == other.uncertainties_ && family_ == other.family_ && beta_ == other.beta_;
}

SelectionMap ControlInstance::beta() const { return SelectionMap(beta_); }

std::string ControlInstance::window_to_string(const Window& window) const {
  std::string out = "[";
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) out += ", ";
    out += time_points_->name(window[i]);
  }
  return out + "]";
}

std::string ControlInstance::trace_to_string(const Window& window, const Trace& trace) const {
  std::string out = "{";
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) out += ", ";
    out += time_points_->name(window[i]) + ": " + controls_.alphabet()->name(trace.at(i));
  }
  return out + "}";
}

// --- SelectionMap -----------------------------------------------------------

SelectionMap SelectionMap::empty(const ControlInstance& instance) {
  return SelectionMap(std::vector<Subset>(instance.uncertainties().size(), Subset(instance.controls().ids())));
}

SelectionMap SelectionMap::full(const ControlInstance& instance) {
  return SelectionMap(
      std::vector<Subset>(instance.uncertainties().size(), Subset::full(instance.controls().ids())));
}

std::size_t SelectionMap::total() const {
  std::size_t n = 0;
  for (const auto& v : values_) n += v.count();
  return n;
}

bool SelectionMap::leq(const SelectionMap& other) const {
  if (values_.size() != other.values_.size()) {
    throw InputError(ErrorCode::kUniverseMismatch, "selections over different uncertainty sets");
  }
  for (std::size_t w = 0; w < values_.size(); ++w) {
    if (!values_[w].is_subset_of(other.values_[w])) return false;
  }
  return true;
}

// --- springs and hats ------------------------------------------------------

Subset spring(const FunctionSet& functions, const Subset& psi, std::size_t anchor, const Window& window) {
  if (!same_universe(psi.universe(), functions.ids())) {
    throw InputError(ErrorCode::kUniverseMismatch, "spring base is not a subset of the function set");
  }
  if (anchor >= functions.size()) throw InputError(ErrorCode::kDanglingRef, "unknown anchor");
  if (window.empty()) throw InputError(ErrorCode::kEmptyWindow, "windows must be nonempty");
  for (auto t : window) {
    if (t >= functions.row(anchor).size()) throw InputError(ErrorCode::kDanglingRef, "window point outside the time set");
  }
  Subset out(functions.ids());
  for (auto v : psi.indices()) {
    if (functions.agree_on(v, anchor, window)) out.insert(v);
  }
  return out;
}

Subset spring_minus(const FunctionSet& functions, const Subset& psi, std::size_t anchor, const Window& window) {
  auto out = spring(functions, psi, anchor, window);
  out.erase(anchor);
  return out;
}

namespace {

void require_shape(const ControlInstance& instance, const SelectionMap& phi) {
  if (phi.size() != instance.uncertainties().size()) {
    throw InputError(ErrorCode::kNotTotal, "selection needs one value per uncertainty");
  }
  for (const auto& v : phi.values()) {
    if (!same_universe(v.universe(), instance.controls().ids())) {
      throw InputError(ErrorCode::kUniverseMismatch, "selection values must be sets of controls");
    }
  }
}

void require_omega(const ControlInstance& instance, std::size_t omega) {
  if (omega >= instance.uncertainties().size()) throw InputError(ErrorCode::kDanglingRef, "unknown uncertainty");
}

// phi(v)|A as a bitset over the window's distinct control traces.
Bits trace_bits(const WindowIndex& wi, const Subset& controls) {
  Bits out(wi.control_traces.size());
  for (auto c : controls.indices()) out.set(wi.control_trace_id[c]);
  return out;
}

// Intersection of phi(v)|A over the (minus-)spring of omega. Starts from every
// trace of C, which is the value taken for an empty spring.
Bits hat_bits(const WindowIndex& wi, const SelectionMap& phi, std::size_t omega, bool minus) {
  Bits acc(wi.control_traces.size());
  acc.set();
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (wi.uncertainty_class[v] != wi.uncertainty_class[omega]) continue;
    if (minus && v == omega) continue;
    acc &= trace_bits(wi, phi[v]);
  }
  return acc;
}

}  // namespace

TraceSet hat_spring(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega,
                    const Window& window, bool minus) {
  require_shape(instance, phi);
  require_omega(instance, omega);
  const auto wi = instance.make_window_index(window);
  const auto bits = hat_bits(wi, phi, omega, minus);
  TraceSet out;
  for (auto t = bits.find_first(); t != Bits::npos; t = bits.find_next(t)) out.insert(wi.control_traces[t]);
  return out;
}

// --- P_omega, P_na ----------------------------------------------------------

bool p_omega_implication_form(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega) {
  require_shape(instance, phi);
  require_omega(instance, omega);
  const auto& omegas = instance.uncertainties();
  for (std::size_t k = 0; k < instance.family().size(); ++k) {
    const auto& wi = instance.window_index(k);
    const auto own = trace_bits(wi, phi[omega]);
    for (std::size_t other = 0; other < omegas.size(); ++other) {
      if (!omegas.agree_on(other, omega, wi.window)) continue;
      if (!own.is_subset_of(trace_bits(wi, phi[other]))) return false;
    }
  }
  return true;
}

bool p_omega_hat_form(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega) {
  require_shape(instance, phi);
  require_omega(instance, omega);
  for (std::size_t k = 0; k < instance.family().size(); ++k) {
    const auto& wi = instance.window_index(k);
    if (hat_bits(wi, phi, omega, false) != trace_bits(wi, phi[omega])) return false;
  }
  return true;
}

bool check_P_omega(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega) {
  const bool implication = p_omega_implication_form(instance, phi, omega);
  const bool hat = p_omega_hat_form(instance, phi, omega);
  if (implication != hat) {
    throw InvariantError("implication and hat forms of P_w disagree at '" +
                         instance.uncertainties().ids()->name(omega) + "'");
  }
  return implication;
}

bool nonanticipating_symmetric_form(const ControlInstance& instance, const SelectionMap& phi) {
  require_shape(instance, phi);
  const auto n = instance.uncertainties().size();
  for (std::size_t k = 0; k < instance.family().size(); ++k) {
    const auto& wi = instance.window_index(k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (wi.uncertainty_class[a] == wi.uncertainty_class[b] &&
            trace_bits(wi, phi[a]) != trace_bits(wi, phi[b])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_P_na(const ControlInstance& instance, const SelectionMap& phi) {
  bool all = true;
  for (std::size_t w = 0; w < instance.uncertainties().size(); ++w) {
    all = check_P_omega(instance, phi, w) && all;
  }
  if (all != nonanticipating_symmetric_form(instance, phi)) {
    throw InvariantError("subset and equality forms of non-anticipation disagree");
  }
  return all;
}

// --- unlocking box ----------------------------------------------------------

Subset feasible_set_D(const ControlInstance& instance, const SelectionMap& phi, std::size_t omega) {
  require_shape(instance, phi);
  require_omega(instance, omega);
  auto out = Subset::full(instance.controls().ids());
  for (std::size_t k = 0; k < instance.family().size(); ++k) {
    const auto& wi = instance.window_index(k);
    const auto hat = hat_bits(wi, phi, omega, true);
    // Union over admissible traces h|A of the controls C_0(h|A) carrying them.
    Subset admissible(instance.controls().ids());
    for (std::size_t c = 0; c < instance.controls().size(); ++c) {
      if (hat.test(wi.control_trace_id[c])) admissible.insert(c);
    }
    out &= admissible;
  }
  return out;
}

bool check_F_Pna_fixed(const ControlInstance& instance, const SelectionMap& phi) {
  bool inside = true;
  for (std::size_t w = 0; w < instance.uncertainties().size() && inside; ++w) {
    inside = phi[w].is_subset_of(feasible_set_D(instance, phi, w));
  }
  if (inside != check_P_na(instance, phi)) {
    throw InvariantError("fixed points of the unlocking box differ from the non-anticipating selections");
  }
  return inside;
}

// --- gamma ------------------------------------------------------------------

SelectionMap gamma_element_filter(const ControlInstance& instance, const SelectionMap& phi) {
  require_shape(instance, phi);
  const auto& omegas = instance.uncertainties();
  auto out = SelectionMap::empty(instance);
  for (std::size_t w = 0; w < omegas.size(); ++w) {
    Subset kept(instance.controls().ids());
    for (auto f : phi[w].indices()) {
      bool ok = true;
      for (std::size_t k = 0; k < instance.family().size() && ok; ++k) {
        const auto& wi = instance.window_index(k);
        for (std::size_t other = 0; other < omegas.size() && ok; ++other) {
          if (!omegas.agree_on(other, w, wi.window)) continue;
          const auto candidates = phi[other].indices();
          ok = std::any_of(candidates.begin(), candidates.end(), [&](std::size_t g) {
            return wi.control_trace_id[g] == wi.control_trace_id[f];
          });
        }
      }
      if (ok) kept.insert(f);
    }
    out.set(w, std::move(kept));
  }
  return out;
}

namespace {

// Intersection over the windows of the union over admissible traces t of
// {f in phi(w) | f|A = t}.
SelectionMap gamma_from_hats(const ControlInstance& instance, const SelectionMap& phi, bool minus) {
  require_shape(instance, phi);
  auto out = SelectionMap::empty(instance);
  for (std::size_t w = 0; w < phi.size(); ++w) {
    auto value = Subset::full(instance.controls().ids());
    for (std::size_t k = 0; k < instance.family().size(); ++k) {
      const auto& wi = instance.window_index(k);
      const auto hat = hat_bits(wi, phi, w, minus);
      Subset window_union(instance.controls().ids());
      for (auto t = hat.find_first(); t != Bits::npos; t = hat.find_next(t)) {
        for (auto f : phi[w].indices()) {
          if (wi.control_trace_id[f] == t) window_union.insert(f);
        }
      }
      value &= window_union;
    }
    out.set(w, std::move(value));
  }
  return out;
}

}  // namespace

SelectionMap gamma_hat_form(const ControlInstance& instance, const SelectionMap& phi) {
  return gamma_from_hats(instance, phi, false);
}

SelectionMap gamma_minus_hat_form(const ControlInstance& instance, const SelectionMap& phi) {
  return gamma_from_hats(instance, phi, true);
}

SelectionMap gamma(const ControlInstance& instance, const SelectionMap& phi) {
  auto filtered = gamma_element_filter(instance, phi);
  if (filtered != gamma_hat_form(instance, phi)) {
    throw InvariantError("element-filter and hat forms of gamma disagree");
  }
  if (filtered != gamma_minus_hat_form(instance, phi)) {
    throw InvariantError("hat and minus-hat forms of gamma disagree");
  }
  return filtered;
}

// --- greatest selection -----------------------------------------------------

bool family_is_vacuous(const ControlInstance& instance) {
  for (std::size_t k = 0; k < instance.family().size(); ++k) {
    const auto& classes = instance.window_index(k).uncertainty_class;
    std::set<std::size_t> distinct(classes.begin(), classes.end());
    if (distinct.size() != classes.size()) return false;
  }
  return true;
}

std::vector<std::size_t> GreatestSelection::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& v : trace.values) out.push_back(v.total());
  return out;
}

IterationTrace<SelectionMap> iterate_gamma(const ControlInstance& instance, const SelectionMap& start) {
  require_shape(instance, start);
  const auto beta = instance.beta();
  const auto bound = start.total() + 1;
  auto trace = iterate_until_stable(
      start,
      [&](const SelectionMap& phi) {
        auto next = gamma(instance, phi);
        if (!next.leq(phi)) throw InvariantError("gamma is not restrictive");
        if (phi.leq(beta)) {
          auto clipped = next;
          for (std::size_t w = 0; w < clipped.size(); ++w) clipped.set(w, clipped[w] & beta[w]);
          if (clipped != next) throw InvariantError("gamma left the selections of beta");
        }
        return next;
      },
      bound);
  if (!trace.converged) {
    throw InvariantError("gamma iteration did not stabilize within " + std::to_string(bound) + " steps");
  }
  return trace;
}

GreatestSelection greatest_selection(const ControlInstance& instance) {
  auto trace = iterate_gamma(instance, instance.beta());
  GreatestSelection result{trace.last(), std::move(trace), family_is_vacuous(instance), {}};
  if (!check_P_na(instance, result.selection)) {
    throw InvariantError("gamma limit is not non-anticipating");
  }
  for (std::size_t w = 0; w < result.selection.size(); ++w) {
    if (result.selection[w].empty()) result.empty_values.push_back(w);
  }
  return result;
}

// --- witnesses --------------------------------------------------------------

std::optional<Violation> find_violation(const ControlInstance& instance, const SelectionMap& phi) {
  require_shape(instance, phi);
  const auto n = instance.uncertainties().size();
  for (std::size_t k = 0; k < instance.family().size(); ++k) {
    const auto& wi = instance.window_index(k);
    for (std::size_t w = 0; w < n; ++w) {
      const auto own = trace_bits(wi, phi[w]);
      for (std::size_t other = 0; other < n; ++other) {
        if (other == w || wi.uncertainty_class[other] != wi.uncertainty_class[w]) continue;
        const auto missing = own - trace_bits(wi, phi[other]);
        // Trace ids follow the sorted trace order, so the first id is the least trace.
        const auto t = missing.find_first();
        if (t == Bits::npos) continue;
        for (auto c : phi[w].indices()) {
          if (wi.control_trace_id[c] == t) return Violation{k, w, other, wi.control_traces[t], c};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace unlock
