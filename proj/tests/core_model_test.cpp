// Copyright 2026 The ShareFair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "sharefair/error.hpp"
#include "sharefair/instances.hpp"
#include "sharefair/model.hpp"

using namespace sharefair;
using fx::q;

namespace {

KSharingAllocation feige_equal_share_allocation() {
  return KSharingAllocation::from_bundles(9, {{0, 1, 2}, {3, 4, 7}, {5, 6, 7, 8}});
}

// Random valid k-sharing allocation.
KSharingAllocation random_allocation(std::mt19937_64& rng, int n, int m, int k) {
  KSharingAllocation a(n, m);
  for (int g = 0; g < m; ++g) {
    const int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
    std::vector<int> agents(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) agents[i] = i;
    std::shuffle(agents.begin(), agents.end(), rng);
    agents.resize(static_cast<std::size_t>(size));
    a.set_sharers(g, agents);
  }
  return a;
}

}  // namespace

TEST(Validate, OneSharingPartitionIsValid) {
  const Instance inst = fx::make({{1, 2, 3}, {3, 2, 1}}, 1, CostModel::cost_free());
  EXPECT_TRUE(validate(inst, KSharingAllocation::from_bundles(3, {{0, 2}, {1}})).empty());
}

TEST(Validate, ReportsOverSharedGood) {
  const Instance inst = fx::make({{1, 1}, {1, 1}, {1, 1}}, 2, CostModel::equal_share());
  KSharingAllocation a(3, 2);
  a.set_sharers(0, {0, 1, 2});
  a.set_sharers(1, {0});
  const auto v = validate(inst, a);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].kind, Violation::Kind::kOverShared);
  EXPECT_EQ(v[0].good, 0);
  EXPECT_EQ(v[0].count, 3);
  EXPECT_EQ(v[0].limit, 2);
}

TEST(Validate, ReportsUnassignedGood) {
  const Instance inst = fx::make({{1, 1}, {1, 1}}, 2, CostModel::cost_free());
  KSharingAllocation a(2, 2);
  a.set_sharers(0, {1});
  const auto v = validate(inst, a);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].kind, Violation::Kind::kUnassigned);
  EXPECT_EQ(v[0].good, 1);
  EXPECT_EQ(v[0].count, 0);
}

TEST(Validate, DimensionMismatchIsStructuralError) {
  const Instance inst = fx::make({{1, 1}, {1, 1}}, 2, CostModel::cost_free());
  EXPECT_THROW(validate(inst, KSharingAllocation(3, 2)), DimensionError);
  EXPECT_THROW(validate(inst, KSharingAllocation(2, 5)), DimensionError);
}

TEST(Utility, FeigeEqualShareBundles) {
  const Instance inst = catalog("feige9").instance;
  const auto a = feige_equal_share_allocation();
  EXPECT_EQ(utility(inst, a, 0), 40);
  EXPECT_EQ(utility(inst, a, 1), 40);
  EXPECT_EQ(utility(inst, a, 2), 42);
}

TEST(Utility, InvalidAllocationCarriesReport) {
  const Instance inst = fx::make({{1, 1}, {1, 1}, {1, 1}}, 1, CostModel::cost_free());
  KSharingAllocation a(3, 2);
  a.set_sharers(0, {0, 1});
  try {
    utility(inst, a, 0);
    FAIL() << "expected InvalidAllocation";
  } catch (const InvalidAllocation& e) {
    ASSERT_EQ(e.violations().size(), 2U);
    EXPECT_EQ(e.violations()[0].kind, Violation::Kind::kOverShared);
    EXPECT_EQ(e.violations()[1].kind, Violation::Kind::kUnassigned);
  }
}

TEST(Utility, OneSharingEqualsBundleValue) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = fx::random_instance(trial, 3, 5, 3, GeneratorConfig::Cost::kEqualShare);
    const auto a = random_allocation(rng, 3, 5, 1);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(utility(inst, a, i), inst.bundle_value(i, a.bundle(i)));
  }
}

TEST(SwapUtility, FeigeAgentOneTakesAgentThreeBundle) {
  // 10 + 12 + 19/2 + 9; the good worth 19 is shared by two.
  const Instance inst = catalog("feige9").instance;
  EXPECT_EQ(swap_utility(inst, feige_equal_share_allocation(), 0, 2), q(81, 2));
}

TEST(SwapUtility, IdentitySwapIsUtility) {
  const Instance inst = catalog("feige9").instance;
  const auto a = feige_equal_share_allocation();
  for (int i = 0; i < 3; ++i) EXPECT_EQ(swap_utility(inst, a, i, i), utility(inst, a, i));
}

TEST(SwapUtility, CostFreeIsBundleValue) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = fx::random_instance(100 + trial, 3, 4, 2);
    const auto a = random_allocation(rng, 3, 4, 2);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) EXPECT_EQ(swap_utility(inst, a, i, j), inst.bundle_value(i, a.bundle(j)));
    }
  }
}

TEST(SwapUtility, AgentTablesUseOwnCosts) {
  // Agent 0 pays 1/2 for sharing, agent 1 pays nothing.
  std::vector<std::vector<std::vector<Rational>>> t = {{{q(0), q(1, 2)}}, {{q(0), q(0)}}};
  const Instance inst({{q(4)}, {q(6)}}, 2, CostModel::agent_count_table(t));
  KSharingAllocation a(2, 1);
  a.set_sharers(0, {0, 1});
  EXPECT_EQ(utility(inst, a, 0), 2);
  EXPECT_EQ(utility(inst, a, 1), 6);
  EXPECT_EQ(swap_utility(inst, a, 0, 1), 2);
}

TEST(MaxCost, Models) {
  const Instance base = fx::make({{1, 1}, {1, 1}, {1, 1}}, 2, CostModel::cost_free());
  EXPECT_EQ(max_cost(base), 0);
  EXPECT_EQ(max_cost(base.with_cost_model(CostModel::equal_share())), q(1, 2));
  EXPECT_EQ(max_cost(base.with_cost_model(fx::flat(2, 2, q(3, 10)))), q(3, 10));
  EXPECT_EQ(max_cost(base.with_k(3).with_cost_model(CostModel::equal_share())), q(2, 3));
}

TEST(CostModel, RejectsNonzeroSingletonCost) {
  auto t = CostModel::count_table({{q(1, 10), q(1, 2)}});
  EXPECT_THROW(Instance({{q(1)}, {q(1)}}, 2, t), PreconditionError);
}

TEST(CostModel, RejectsOutOfRangeEntries) {
  EXPECT_THROW(Instance({{q(1)}, {q(1)}}, 2, CostModel::count_table({{q(0), q(3, 2)}})), PreconditionError);
  EXPECT_THROW(Instance({{q(1)}, {q(1)}}, 2, CostModel::count_table({{q(0), q(-1, 2)}})), PreconditionError);
}

TEST(CostModel, RejectsShortTable) {
  EXPECT_THROW(Instance({{q(1)}, {q(1)}}, 2, CostModel::count_table({{q(0)}})), PreconditionError);
}

TEST(CostModel, Generosity) {
  EXPECT_TRUE(CostModel::equal_share().generous(3, 2, 3));
  EXPECT_TRUE(CostModel::cost_free().generous(3, 2, 3));
  EXPECT_TRUE(fx::flat(2, 3, q(3, 10)).generous(3, 2, 3));
  // c(2) = 3/5 > 1/2.
  EXPECT_FALSE(fx::flat(2, 2, q(3, 5)).generous(3, 2, 2));
  // Decreasing in l.
  EXPECT_FALSE(CostModel::count_table({{q(0), q(2, 5), q(1, 5)}}).generous(3, 1, 3));
}

TEST(CostModel, EqualShareExpansion) {
  const CostModel c = CostModel::equal_share();
  for (int l = 1; l <= 6; ++l) EXPECT_EQ(c.cost(0, 0, l), Rational(1) - Rational(1, l));
}

TEST(CostModel, SetDependentCallback) {
  // Sharing with agent 0 is free, otherwise half.
  auto fn = [](int, int, std::span<const int> s) {
    if (s.size() <= 1 || s.front() == 0) return Rational(0);
    return Rational(1, 2);
  };
  const Instance inst({{q(2)}, {q(2)}, {q(2)}}, 2, CostModel::set_dependent(fn, q(1, 2)));
  KSharingAllocation a(3, 1);
  a.set_sharers(0, {1, 2});
  EXPECT_EQ(utility(inst, a, 1), 1);
  a.set_sharers(0, {0, 1});
  EXPECT_EQ(utility(inst, a, 1), 2);
  EXPECT_EQ(max_cost(inst), q(1, 2));
  EXPECT_THROW(inst.cost_model().cost(0, 0, 2), Unsupported);
}

TEST(Instance, ValidatesShape) {
  EXPECT_THROW(Instance({{q(1), q(2)}, {q(1)}}, 1, CostModel::cost_free()), DimensionError);
  EXPECT_THROW(Instance({{q(-1)}}, 1, CostModel::cost_free()), PreconditionError);
  EXPECT_THROW(Instance({{q(1)}, {q(1)}}, 3, CostModel::cost_free()), PreconditionError);
  EXPECT_THROW(Instance({{q(1)}, {q(1)}}, 0, CostModel::cost_free()), PreconditionError);
}

TEST(Instance, DerivedInstances) {
  const Instance inst = fx::make({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3, CostModel::equal_share());
  const Instance w = inst.without(1, 0);
  EXPECT_EQ(w.agent_count(), 2);
  EXPECT_EQ(w.good_count(), 2);
  EXPECT_EQ(w.k(), 2);
  EXPECT_EQ(w.value(1, 0), 8);
  EXPECT_EQ(w.agent_names()[1], "a3");
  EXPECT_EQ(w.good_names()[0], "g2");
  const Instance s = inst.with_scaled_agent(2, q(1, 3));
  EXPECT_EQ(s.value(2, 2), 3);
  EXPECT_EQ(s.value(1, 2), 6);
  EXPECT_TRUE(fx::example1().identical_valuations());
  EXPECT_FALSE(inst.identical_valuations());
}

TEST(Allocation, BundlesAndSharers) {
  const auto a = feige_equal_share_allocation();
  EXPECT_EQ(a.sharers(7), (std::vector<int>{1, 2}));
  EXPECT_EQ(a.bundle(2), (std::vector<int>{5, 6, 7, 8}));
  EXPECT_FALSE(a.fully_shared(2));
  EXPECT_EQ(a.max_sharer_count(), 2);
  const auto s = a.swapped(0, 2);
  EXPECT_EQ(s.bundle(0), a.bundle(2));
  EXPECT_EQ(s.bundle(2), a.bundle(0));
  EXPECT_THROW(KSharingAllocation::from_sharers(2, {{0, 0}}), DimensionError);
  EXPECT_THROW(KSharingAllocation::from_sharers(2, {{2}}), DimensionError);
}

TEST(Allocation, FullyShared) {
  KSharingAllocation a(3, 2);
  a.set_sharers(0, {0, 1});
  a.set_sharers(1, {1, 2});
  EXPECT_TRUE(a.fully_shared(2));
  EXPECT_FALSE(a.fully_shared(1));
}

TEST(Report, ThresholdsAndInfiniteRatio) {
  const std::vector<Rational> u = {q(3), q(1), q(0)};
  const std::vector<std::optional<Rational>> t = {q(2), q(2), q(0)};
  const FairnessReport r = make_report(u, t, "x");
  EXPECT_FALSE(r.satisfied);
  EXPECT_TRUE(r.agents[2].ratio->infinite);
  EXPECT_TRUE(r.agents[2].satisfied);
  EXPECT_EQ(r.min_ratio->value, q(1, 2));
  const std::vector<std::optional<Rational>> none(3);
  EXPECT_TRUE(make_report(u, none, "").satisfied);
  EXPECT_FALSE(make_report(u, none, "").min_ratio.has_value());
}

// ---------------------------------------------------------------------------
// Properties over random instances and allocations

TEST(CoreProperties, UtilityBetweenZeroAndTotal) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto cost = static_cast<GeneratorConfig::Cost>(trial % 3);
    const Instance inst = fx::random_instance(500 + trial, 4, 5, 3, cost);
    const auto a = random_allocation(rng, 4, 5, 3);
    for (int i = 0; i < 4; ++i) {
      const Rational u = utility(inst, a, i);
      EXPECT_GE(u, 0);
      EXPECT_LE(u, inst.total_value(i));
    }
  }
}

TEST(CoreProperties, EqualShareSwapUtilitiesSumToTotal) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = fx::random_instance(600 + trial, 3, 5, 3, GeneratorConfig::Cost::kEqualShare);
    const auto a = random_allocation(rng, 3, 5, 3);
    for (int i = 0; i < 3; ++i) {
      Rational s = 0;
      for (int j = 0; j < 3; ++j) s += swap_utility(inst, a, i, j);
      EXPECT_EQ(s, inst.total_value(i));
    }
  }
}

TEST(CoreProperties, AddingSharerNeverHelpsExistingHolders) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cost = static_cast<GeneratorConfig::Cost>(trial % 3);
    const Instance inst = fx::random_instance(700 + trial, 4, 4, 4, cost);
    auto a = random_allocation(rng, 4, 4, 3);
    const int g = static_cast<int>(rng() % 4);
    int outsider = -1;
    for (int i = 0; i < 4; ++i) {
      if (!a.holds(i, g)) outsider = i;
    }
    if (outsider < 0) continue;
    const auto before = utilities(inst, a);
    a.add_sharer(g, outsider);
    const auto after = utilities(inst, a);
    for (int i = 0; i < 4; ++i) {
      if (i != outsider) EXPECT_LE(after[i], before[i]);
    }
  }
}
