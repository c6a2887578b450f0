#include "unlock/oracle.hpp"

#include "unlock/error.hpp"

namespace unlock::oracle {

SelectionEnumerator::SelectionEnumerator(const ControlInstance& instance, std::size_t cap) : instance_(&instance) {
  const auto& beta = instance.beta_values();
  for (std::size_t w = 0; w < beta.size(); ++w) {
    for (auto c : beta[w].indices()) pairs_.emplace_back(w, c);
  }
  if (pairs_.size() > cap || pairs_.size() >= 64) {
    throw InputError(ErrorCode::kCapExceeded, "beta has " + std::to_string(pairs_.size()) +
                                                  " pairs, above the enumeration cap " + std::to_string(cap));
  }
  total_ = std::uint64_t{1} << pairs_.size();
}

std::optional<SelectionMap> SelectionEnumerator::next() {
  if (counter_ == total_) return std::nullopt;
  auto phi = SelectionMap::empty(*instance_);
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((counter_ >> k) & 1U) {
      auto value = phi[pairs_[k].first];
      value.insert(pairs_[k].second);
      phi.set(pairs_[k].first, std::move(value));
    }
  }
  ++counter_;
  return phi;
}

MultifunctionEnumerator::MultifunctionEnumerator(UniversePtr universe, std::size_t cap)
    : universe_(std::move(universe)) {
  const auto n = universe_->size();
  if (n > cap || n * n >= 64) {
    throw InputError(ErrorCode::kCapExceeded, "universe of size " + std::to_string(n) +
                                                  " exceeds the enumeration cap " + std::to_string(cap));
  }
  total_ = std::uint64_t{1} << (n * n);
}

std::optional<Multifunction> MultifunctionEnumerator::next() {
  if (counter_ == total_) return std::nullopt;
  const auto n = universe_->size();
  Multifunction f(universe_);
  for (std::size_t x = 0; x < n; ++x) {
    Subset value(universe_);
    for (std::size_t y = 0; y < n; ++y) {
      if ((counter_ >> (x * n + y)) & 1U) value.insert(y);
    }
    f.set(x, std::move(value));
  }
  ++counter_;
  return f;
}

Referee::Referee(const ControlInstance& instance) : instance_(&instance) {
  const auto& times = *instance.time_points();
  auto table = [&](const FunctionSet& set) {
    std::map<std::string, Function> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
      Function f;
      for (std::size_t t = 0; t < times.size(); ++t) f[times.name(t)] = set.alphabet()->name(set.row(i)[t]);
      out[set.ids()->name(i)] = std::move(f);
    }
    return out;
  };
  controls_ = table(instance.controls());
  uncertainties_ = table(instance.uncertainties());
  omega_order_ = instance.uncertainties().ids()->elements();
  for (const auto& window : instance.family()) {
    std::vector<std::string> names;
    for (auto t : window) names.push_back(times.name(t));
    family_.push_back(std::move(names));
  }
}

Referee::Selection Referee::raw(const SelectionMap& phi) const {
  Selection out;
  for (std::size_t w = 0; w < omega_order_.size(); ++w) {
    auto names = phi[w].names();
    out[omega_order_[w]] = std::set<std::string>(names.begin(), names.end());
  }
  return out;
}

SelectionMap Referee::cook(const Selection& raw) const {
  const auto& ids = instance_->controls().ids();
  std::vector<Subset> values;
  for (const auto& w : omega_order_) {
    Subset s(ids);
    if (auto it = raw.find(w); it != raw.end()) {
      for (const auto& c : it->second) s.insert(ids->index_of(c));
    }
    values.push_back(std::move(s));
  }
  return SelectionMap(std::move(values));
}

std::set<Referee::Function> Referee::traces(const std::set<std::string>& controls,
                                             const std::vector<std::string>& window) const {
  std::set<Function> out;
  for (const auto& c : controls) {
    Function restricted;
    for (const auto& t : window) restricted[t] = controls_.at(c).at(t);
    out.insert(std::move(restricted));
  }
  return out;
}

bool Referee::nonanticipating(const Selection& phi) const {
  for (const auto& window : family_) {
    for (const auto& [w, fw] : uncertainties_) {
      for (const auto& [v, fv] : uncertainties_) {
        bool agree = true;
        for (const auto& t : window) agree = agree && fw.at(t) == fv.at(t);
        if (!agree) continue;
        const auto mine = traces(phi.at(w), window);
        const auto theirs = traces(phi.at(v), window);
        for (const auto& trace : mine) {
          if (!theirs.count(trace)) return false;
        }
      }
    }
  }
  return true;
}

bool oracle_nonanticipating(const ControlInstance& instance, const SelectionMap& phi) {
  Referee referee(instance);
  return referee.nonanticipating(referee.raw(phi));
}

SelectionMap oracle_greatest(const ControlInstance& instance, std::size_t cap) {
  Referee referee(instance);
  SelectionEnumerator all(instance, cap);
  Referee::Selection acc;
  for (const auto& w : instance.uncertainties().ids()->elements()) acc[w];
  while (auto phi = all.next()) {
    auto raw = referee.raw(*phi);
    if (!referee.nonanticipating(raw)) continue;
    for (const auto& [w, controls] : raw) acc[w].insert(controls.begin(), controls.end());
  }
  return referee.cook(acc);
}

}  // namespace unlock::oracle
