#include <gtest/gtest.h>

#include "support.hpp"
#include "unlock/error.hpp"
#include "unlock/order_fixpoint.hpp"
#include "unlock/random_instances.hpp"
#include "unlock/unlock_calculus.hpp"

namespace unlock {
namespace {

using testing::all_partial_orders;
using testing::all_predicates;
using testing::all_total_orders;

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

FinitePoset diamond() {
  // bot < a, b < top
  const auto u = Universe::make({"bot", "a", "b", "top"});
  const Pairs pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FinitePoset::from_pairs(u, pairs);
}

// Chain-completeness straight from the definition: every chain, the empty one
// included, has a greatest lower bound.
bool chain_complete_by_definition(const FinitePoset& order) {
  const std::size_t n = order.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) chain.push_back(i);
    }
    bool is_chain = true;
    for (auto a : chain) {
      for (auto b : chain) is_chain = is_chain && (order.leq(a, b) || order.leq(b, a));
    }
    if (!is_chain) continue;
    std::vector<std::size_t> lower;
    for (std::size_t x = 0; x < n; ++x) {
      bool below_all = true;
      for (auto c : chain) below_all = below_all && order.leq(x, c);
      if (below_all) lower.push_back(x);
    }
    bool has_glb = false;
    for (auto g : lower) {
      bool above_all = true;
      for (auto x : lower) above_all = above_all && order.leq(x, g);
      has_glb = has_glb || above_all;
    }
    if (!has_glb) return false;
  }
  return true;
}

std::vector<std::size_t> random_restrictive(Rng& rng, const FinitePoset& order) {
  std::vector<std::size_t> f(order.size());
  for (std::size_t x = 0; x < order.size(); ++x) {
    std::vector<std::size_t> below;
    for (std::size_t y = 0; y < order.size(); ++y) {
      if (order.leq(y, x)) below.push_back(y);
    }
    f[x] = below[uniform_below(rng, below.size())];
  }
  return f;
}

TEST(Poset, RejectsNonOrders) {
  const auto u = Universe::make({"a", "b"});
  try {
    FinitePoset(u, {{true, true}, {true, true}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPartialOrder);
  }
  EXPECT_THROW(FinitePoset(u, {{false, false}, {false, true}}), InputError);
  const auto v = Universe::make({"a", "b", "c"});
  EXPECT_THROW(FinitePoset(v, {{true, true, false}, {false, true, true}, {false, false, true}}), InputError);
}

TEST(ChainComplete, Examples) {
  EXPECT_FALSE(is_chain_complete(FinitePoset::antichain(Universe::numbered(2))));
  EXPECT_TRUE(is_chain_complete(FinitePoset::chain(Universe::numbered(3))));
  EXPECT_TRUE(is_chain_complete(diamond()));
}

TEST(ChainComplete, ReductionMatchesDefinitionOnAllSmallPosets) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& order : all_partial_orders(Universe::numbered(n))) {
      ASSERT_EQ(is_chain_complete(order), chain_complete_by_definition(order));
      ++checked;
    }
  }
  // 1 + 3 + 19 + 219 labelled posets.
  EXPECT_EQ(checked, 242u);
}

TEST(RestrictiveIsotone, Examples) {
  const auto chain2 = FinitePoset::chain(Universe::numbered(2));
  const std::vector<std::size_t> id{0, 1}, swap{1, 0};
  EXPECT_TRUE(is_restrictive(id, chain2));
  EXPECT_TRUE(is_isotone(id, chain2));
  EXPECT_FALSE(is_restrictive(swap, chain2));
  EXPECT_FALSE(is_isotone(swap, chain2));
  const std::vector<std::size_t> to_bottom{0, 0, 0, 0};
  EXPECT_TRUE(is_restrictive(to_bottom, diamond()));
  EXPECT_TRUE(is_isotone(to_bottom, diamond()));
}

TEST(LeMap, Examples) {
  const auto u = Universe::make({"a", "b"});
  const auto le = le_map(FinitePoset::chain(u));
  EXPECT_EQ(le.to_table(), "a: [a]\nb: [a, b]\n");
  EXPECT_EQ(le_map(FinitePoset::antichain(u)).to_table(), "a: [a]\nb: [b]\n");
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto v = Universe::numbered(n);
    for (const auto& order : all_partial_orders(v)) {
      ASSERT_TRUE(is_unlocking(le_map(order), Predicate::always_true(v)));
    }
  }
}

TEST(Narrow, BottomOnThreeChain) {
  const auto u = Universe::make({"1", "2", "3"});
  const auto p = Predicate::from_truth_set(Subset::of(u, {"1", "3"}));
  const auto n = narrow_to_function(um_bottom(p), p, FinitePoset::chain(u));
  EXPECT_EQ(n.candidates.to_table(), "1: [1]\n2: []\n3: [3]\n");
  EXPECT_EQ(n.domain.to_string(), "{1, 3}");
  EXPECT_EQ(n.map[0], 0u);
  EXPECT_FALSE(n.map[1]);
  EXPECT_EQ(n.map[2], 2u);
  EXPECT_EQ(n.fixed_points().to_string(), "{1, 3}");
  EXPECT_TRUE(n.maps_into_domain());
}

TEST(Narrow, TopOnTwoChain) {
  const auto u = Universe::make({"1", "2"});
  const auto p = Predicate::from_truth_set(Subset::of(u, {"2"}));
  const auto n = narrow_to_function(um_top(p), p, FinitePoset::chain(u));
  EXPECT_TRUE(n.candidates.at("1").empty());
  EXPECT_EQ(n.candidates.at("2").to_string(), "{1, 2}");
  EXPECT_EQ(n.domain.to_string(), "{2}");
  EXPECT_EQ(n.map[1], 1u);
  EXPECT_EQ(n.fixed_points().to_string(), "{2}");
}

TEST(Narrow, AlwaysFalseBottomIsEmpty) {
  const auto u = Universe::numbered(3);
  const auto p = Predicate::always_false(u);
  const auto n = narrow_to_function(um_bottom(p), p, FinitePoset::chain(u));
  EXPECT_TRUE(n.domain.empty());
  EXPECT_TRUE(n.fixed_points().empty());
  EXPECT_TRUE(n.maps_into_domain());
}

// g can leave Y: 1 < 2, P false, f(1) = {2}, f(2) = {1}. G(1) is empty, so
// Y = {2}, yet g(2) = 1.
TEST(Narrow, ImageCanLeaveDomain) {
  const auto u = Universe::make({"1", "2"});
  const auto p = Predicate::always_false(u);
  Multifunction f(u, {Subset::of(u, {"2"}), Subset::of(u, {"1"})});
  ASSERT_TRUE(is_unlocking(f, p));
  const auto n = narrow_to_function(f, p, FinitePoset::chain(u));
  EXPECT_EQ(n.domain.to_string(), "{2}");
  EXPECT_EQ(n.map[1], 0u);
  ASSERT_TRUE(n.escape);
  EXPECT_EQ(*n.escape, 1u);
  EXPECT_TRUE(n.is_restrictive(FinitePoset::chain(u)));
  EXPECT_TRUE(n.fixed_points().empty());
}

TEST(Narrow, TieBreakPicksSmallestIndex) {
  // a, b incomparable, both below t. G(t) = {a, b} has no greatest element.
  const auto u = Universe::make({"a", "b", "t"});
  const Pairs pairs{{0, 2}, {1, 2}};
  const auto order = FinitePoset::from_pairs(u, pairs);
  const auto p = Predicate::always_false(u);
  Multifunction f(u, {Subset(u), Subset(u), Subset::of(u, {"a", "b"})});
  const auto n = narrow_to_function(f, p, order);
  EXPECT_EQ(n.map[2], 0u);
}

TEST(Narrow, RejectsNonUnlocking) {
  const auto u = Universe::numbered(2);
  try {
    narrow_to_function(um_top(Predicate::always_true(u)), Predicate::always_false(u), FinitePoset::chain(u));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotUnlocking);
  }
}

TEST(Narrow, RestrictiveAndFixEqualsTruthSetExhaustive) {
  Rng rng(41);
  for (std::size_t size = 1; size <= 3; ++size) {
    const auto u = Universe::numbered(size);
    for (const auto& order : all_total_orders(u)) {
      for (const auto& p : all_predicates(u)) {
        std::vector<Multifunction> fs{um_bottom(p), um_top(p)};
        for (int i = 0; i < 100; ++i) fs.push_back(um_sample(p, rng));
        for (const auto& f : fs) {
          const auto n = narrow_to_function(f, p, order);
          ASSERT_TRUE(n.is_restrictive(order));
          ASSERT_EQ(n.fixed_points(), p.truth_set());
        }
      }
    }
  }
}

TEST(IterateToFixpoints, Examples) {
  const auto chain3 = FinitePoset::chain(Universe::make({"1", "2", "3"}));
  const std::vector<std::size_t> id{0, 1, 2}, down{0, 0, 1};
  EXPECT_EQ(iterate_to_fixpoints(id, chain3), Subset::full(chain3.universe()));
  EXPECT_EQ(iterate_to_fixpoints(down, chain3).to_string(), "{1}");
  const auto trace = iterate_from(down, 2, 3);
  EXPECT_TRUE(trace.converged);
  EXPECT_EQ(trace.values, (std::vector<std::size_t>{2, 1, 0, 0}));
  const std::vector<std::size_t> to_bottom{0, 0, 0, 0};
  EXPECT_EQ(iterate_to_fixpoints(to_bottom, diamond()).to_string(), "{bot}");
}

TEST(IterateToFixpoints, RejectsBadInput) {
  const auto chain2 = FinitePoset::chain(Universe::numbered(2));
  const std::vector<std::size_t> swap{1, 0}, id{0, 1};
  try {
    iterate_to_fixpoints(swap, chain2);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotRestrictive);
  }
  try {
    iterate_to_fixpoints(id, FinitePoset::antichain(Universe::numbered(2)));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoGreatest);
  }
}

TEST(IterateToFixpoints, LimitsAreFixedPointsOnAllSmallPosets) {
  Rng rng(23);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto u = Universe::numbered(n);
    for (const auto& order : all_partial_orders(u)) {
      if (!is_chain_complete(order)) continue;
      for (int round = 0; round < 20; ++round) {
        const auto f = random_restrictive(rng, order);
        ASSERT_EQ(iterate_to_fixpoints(f, order), fixed_points(u, f));
        for (std::size_t x = 0; x < n; ++x) {
          const auto trace = iterate_from(f, x, n);
          ASSERT_TRUE(trace.converged);
          ASSERT_LE(trace.steps(), n);
        }
      }
    }
  }
}

TEST(GreatestFixpointDescent, Examples) {
  const auto d = diamond();
  const std::vector<std::size_t> id{0, 1, 2, 3}, to_bottom{0, 0, 0, 0}, f{0, 1, 0, 1};
  EXPECT_EQ(greatest_fixpoint_descent(id, d), 3u);
  EXPECT_EQ(greatest_fixpoint_descent(to_bottom, d), 0u);
  ASSERT_TRUE(is_restrictive(f, d));
  ASSERT_TRUE(is_isotone(f, d));
  EXPECT_EQ(greatest_fixpoint_descent(f, d), 1u);
}

TEST(GreatestFixpointDescent, RejectsNonIsotone) {
  // Restrictive, but f(1) = 1 sits above f(2) = 0.
  const auto chain3 = FinitePoset::chain(Universe::numbered(3));
  const std::vector<std::size_t> f{0, 1, 0};
  try {
    greatest_fixpoint_descent(f, chain3);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIsotone);
  }
}

TEST(GreatestFixpointDescent, DominatesEveryFixedPoint) {
  Rng rng(29);
  std::size_t tried = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto u = Universe::numbered(n);
    for (const auto& order : all_partial_orders(u)) {
      if (!is_chain_complete(order)) continue;
      for (int round = 0; round < 20; ++round) {
        const auto f = random_restrictive(rng, order);
        if (!is_isotone(f, order)) continue;
        ++tried;
        const auto top = greatest_fixpoint_descent(f, order);
        ASSERT_EQ(f[top], top);
        for (auto y : fixed_points(u, f).indices()) ASSERT_TRUE(order.leq(y, top));
      }
    }
  }
  EXPECT_GT(tried, 100u);
}

}  // namespace
}  // namespace unlock
