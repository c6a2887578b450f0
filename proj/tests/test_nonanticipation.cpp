#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "unlock/error.hpp"
#include "unlock/nonanticipation.hpp"
#include "unlock/oracle.hpp"
#include "unlock/random_instances.hpp"

namespace unlock {
namespace {

using testing::binary;
using testing::d2_instance;
using testing::functions;
using testing::selection;

// One uncertainty, so every spring is a singleton.
ControlInstance lone_uncertainty() {
  auto controls = functions({"c0", "c1", "c2"}, {"00", "01", "11"}, binary());
  auto uncertainties = functions({"w"}, {"10"}, binary());
  const auto ids = controls.ids();
  return ControlInstance(Universe::make({"1", "2"}), std::move(controls), std::move(uncertainties), {{0}, {0, 1}},
                         {Subset::of(ids, {"c0", "c2"})});
}

std::set<Trace> traces(std::initializer_list<Trace> list) { return std::set<Trace>(list); }

TEST(Spring, Examples) {
  const auto omega = functions({"w00", "w01", "w10"}, {"00", "01", "10"}, binary());
  const auto all = Subset::full(omega.ids());
  EXPECT_EQ(spring(omega, all, 0, {0}).to_string(), "{w00, w01}");
  EXPECT_EQ(spring(omega, all, 0, {0, 1}).to_string(), "{w00}");
  EXPECT_EQ(spring_minus(omega, all, 0, {0}).to_string(), "{w01}");
  EXPECT_TRUE(spring_minus(omega, all, 0, {0, 1}).empty());

  const auto same_first = functions({"a", "b"}, {"10", "11"}, binary());
  EXPECT_EQ(spring(same_first, Subset::full(same_first.ids()), 1, {0}).count(), 2u);

  const auto single = functions({"w"}, {"01"}, binary());
  EXPECT_TRUE(spring_minus(single, Subset::full(single.ids()), 0, {0}).empty());
  EXPECT_THROW(spring(omega, all, 7, {0}), InputError);
  EXPECT_THROW(spring(omega, all, 0, {}), InputError);
}

TEST(HatSpring, Examples) {
  const auto d2 = d2_instance();
  EXPECT_EQ(hat_spring(d2, d2.beta(), 0, {0}, false), traces({{0}}));
  EXPECT_EQ(hat_spring(d2, d2.beta(), 0, {0}, true), traces({{0}}));

  const auto lone = lone_uncertainty();
  EXPECT_EQ(hat_spring(lone, lone.beta(), 0, {0, 1}, true), traces({{0, 0}, {0, 1}, {1, 1}}));

  const auto phi = selection(d2, {{"c00", "c10"}, {}});
  EXPECT_TRUE(hat_spring(d2, phi, 0, {0}, false).empty());
}

TEST(PredicateOmega, Examples) {
  const auto d2 = d2_instance();
  const auto constant = selection(d2, {{"c01", "c10"}, {"c01", "c10"}});
  for (std::size_t w = 0; w < 2; ++w) EXPECT_TRUE(check_P_omega(d2, constant, w));
  EXPECT_FALSE(p_omega_implication_form(d2, d2.beta(), 0));
  EXPECT_FALSE(check_P_omega(d2, d2.beta(), 0));

  const auto lone = lone_uncertainty();
  oracle::SelectionEnumerator all(lone);
  while (auto phi = all.next()) EXPECT_TRUE(check_P_omega(lone, *phi, 0));
}

TEST(NonAnticipating, Examples) {
  const auto d2 = d2_instance();
  EXPECT_TRUE(check_P_na(d2, SelectionMap::full(d2)));
  EXPECT_FALSE(check_P_na(d2, d2.beta()));
  EXPECT_TRUE(check_P_na(d2, selection(d2, {{"c00"}, {"c00", "c01"}})));
  EXPECT_TRUE(check_P_na(d2, SelectionMap::empty(d2)));
}

TEST(FeasibleSet, Examples) {
  const auto d2 = d2_instance();
  EXPECT_EQ(feasible_set_D(d2, d2.beta(), 0).to_string(), "{c00, c01}");
  const auto lone = lone_uncertainty();
  EXPECT_EQ(feasible_set_D(lone, SelectionMap::empty(lone), 0), Subset::full(lone.controls().ids()));
  // w00's minus-hat on {1} is the traces of phi(w01), here none.
  EXPECT_TRUE(feasible_set_D(d2, selection(d2, {{"c00"}, {}}), 0).empty());
}

TEST(BoxFixed, Examples) {
  const auto d2 = d2_instance();
  EXPECT_FALSE(check_F_Pna_fixed(d2, d2.beta()));
  EXPECT_TRUE(check_F_Pna_fixed(d2, greatest_selection(d2).selection));
  EXPECT_TRUE(check_F_Pna_fixed(d2, SelectionMap::empty(d2)));
}

TEST(Gamma, Examples) {
  const auto d2 = d2_instance();
  EXPECT_EQ(gamma(d2, d2.beta()), selection(d2, {{"c00"}, {"c00", "c01"}}));
  const auto lone = lone_uncertainty();
  EXPECT_EQ(gamma(lone, lone.beta()), lone.beta());
  const auto solved = selection(d2, {{"c00"}, {"c00", "c01"}});
  EXPECT_EQ(gamma(d2, solved), solved);
}

TEST(GreatestSelection, D2) {
  const auto result = greatest_selection(d2_instance());
  EXPECT_EQ(result.selection, selection(d2_instance(), {{"c00"}, {"c00", "c01"}}));
  EXPECT_EQ(result.iterations(), 2u);
  EXPECT_EQ(result.sizes(), (std::vector<std::size_t>{4, 3, 3}));
  EXPECT_FALSE(result.family_vacuous);
  EXPECT_TRUE(result.empty_values.empty());
}

TEST(GreatestSelection, AllControls) {
  const auto all = std::vector<std::string>{"c00", "c01", "c10", "c11"};
  const auto instance = d2_instance(all, all);
  const auto result = greatest_selection(instance);
  EXPECT_EQ(result.selection, instance.beta());
  EXPECT_EQ(result.iterations(), 1u);
}

TEST(GreatestSelection, EmptyValuePropagates) {
  const auto instance = d2_instance({}, {"c00", "c01"});
  const auto result = greatest_selection(instance);
  EXPECT_EQ(result.selection, SelectionMap::empty(instance));
  EXPECT_EQ(result.empty_values, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(result.sizes(), (std::vector<std::size_t>{2, 0, 0}));
}

TEST(GreatestSelection, VacuousFamilyFlagged) {
  auto controls = functions({"c00", "c01", "c10", "c11"}, {"00", "01", "10", "11"}, binary());
  auto uncertainties = functions({"w00", "w01"}, {"00", "01"}, binary());
  const auto ids = controls.ids();
  const ControlInstance instance(Universe::make({"1", "2"}), std::move(controls), std::move(uncertainties), {{0, 1}},
                                 {Subset::of(ids, {"c00"}), Subset::of(ids, {"c11"})});
  EXPECT_TRUE(family_is_vacuous(instance));
  const auto result = greatest_selection(instance);
  EXPECT_TRUE(result.family_vacuous);
  EXPECT_EQ(result.selection, instance.beta());
  EXPECT_FALSE(family_is_vacuous(d2_instance()));
}

TEST(Violation, LeastWitness) {
  const auto d2 = d2_instance();
  const auto v = find_violation(d2, d2.beta());
  ASSERT_TRUE(v);
  EXPECT_EQ(v->window, 0u);
  EXPECT_EQ(v->omega, 0u);
  EXPECT_EQ(v->omega_prime, 1u);
  EXPECT_EQ(v->trace, (Trace{1}));
  EXPECT_EQ(d2.controls().ids()->name(v->control), "c10");
  EXPECT_FALSE(find_violation(d2, greatest_selection(d2).selection));
}

TEST(Instance, Validation) {
  const auto times = Universe::make({"1", "2"});
  auto make = [&](std::vector<Window> family) {
    auto controls = functions({"c0"}, {"00"}, binary());
    auto uncertainties = functions({"w0", "w1"}, {"00", "01"}, binary());
    const auto ids = controls.ids();
    return ControlInstance(times, std::move(controls), std::move(uncertainties), std::move(family),
                           {Subset(ids), Subset(ids)});
  };
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const InputError& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code_of([&] { make({}); }), ErrorCode::kEmptySet);
  EXPECT_EQ(code_of([&] { make({{}}); }), ErrorCode::kEmptyWindow);
  EXPECT_EQ(code_of([&] { make({{0}, {0}}); }), ErrorCode::kDuplicateWindow);
  EXPECT_EQ(code_of([&] { make({{5}}); }), ErrorCode::kDanglingRef);
  EXPECT_EQ(code_of([&] { functions({"a", "b"}, {"01", "01"}, binary()); }), ErrorCode::kDuplicateFunction);
}

// Every selection of small random instances: the four characterizations of
// non-anticipation coincide, and gamma's three forms agree.
TEST(Characterizations, AgreeOnEverySelectionOfRandomInstances) {
  Rng rng(7);
  RandomInstanceConfig config;
  config.max_beta_total = 10;
  for (int round = 0; round < 60; ++round) {
    const auto instance = random_instance(rng, config);
    oracle::SelectionEnumerator all(instance);
    while (auto phi = all.next()) {
      const bool na = check_P_na(instance, *phi);
      ASSERT_EQ(check_F_Pna_fixed(instance, *phi), na);
      ASSERT_EQ(gamma(instance, *phi) == *phi, na);
      ASSERT_EQ(nonanticipating_symmetric_form(instance, *phi), na);
      ASSERT_EQ(oracle::oracle_nonanticipating(instance, *phi), na);
      for (std::size_t w = 0; w < phi->size(); ++w) {
        ASSERT_EQ(p_omega_implication_form(instance, *phi, w), p_omega_hat_form(instance, *phi, w));
      }
      const auto filtered = gamma_element_filter(instance, *phi);
      ASSERT_EQ(filtered, gamma_hat_form(instance, *phi));
      ASSERT_EQ(filtered, gamma_minus_hat_form(instance, *phi));
    }
  }
}

TEST(Gamma, RestrictiveAndIsotone) {
  Rng rng(13);
  for (int round = 0; round < 1000; ++round) {
    const auto instance = random_instance(rng);
    const auto psi = random_selection(rng, instance, 70);
    const auto phi = random_selection_below(rng, psi, 70);
    const auto g_psi = gamma(instance, psi);
    ASSERT_TRUE(g_psi.leq(psi));
    ASSERT_TRUE(gamma(instance, phi).leq(g_psi));
  }
}

TEST(IterateGamma, LimitsAreExactlyTheNonAnticipatingSelections) {
  Rng rng(19);
  RandomInstanceConfig config;
  config.max_beta_total = 9;
  for (int round = 0; round < 40; ++round) {
    const auto instance = random_instance(rng, config);
    const auto bound = instance.beta().total() + 1;
    std::set<std::string> limits, accepted;
    oracle::SelectionEnumerator all(instance);
    while (auto psi = all.next()) {
      const auto trace = iterate_gamma(instance, *psi);
      ASSERT_TRUE(trace.converged);
      ASSERT_LE(trace.steps(), bound);
      limits.insert(testing::selection_key(instance, trace.last()));
      if (check_P_na(instance, *psi)) accepted.insert(testing::selection_key(instance, *psi));
    }
    ASSERT_EQ(limits, accepted);
  }
}

}  // namespace
}  // namespace unlock
