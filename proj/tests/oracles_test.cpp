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

#include "fixtures.hpp"
#include "reference.hpp"
#include "sharefair/error.hpp"
#include "sharefair/instances.hpp"
#include "sharefair/oracles.hpp"
#include "sharefair/reductions.hpp"

using namespace sharefair;
using fx::q;
using Cost = GeneratorConfig::Cost;

TEST(Mms, FeigeIsFortyForEveryAgent) {
  const Instance inst = catalog("feige9").instance;
  for (const auto& r : mms_values(inst, 3)) {
    EXPECT_EQ(r.value, 40);
  }
}

TEST(Mms, WitnessReevaluates) {
  const Instance inst = catalog("feige9").instance;
  for (int i = 0; i < 3; ++i) {
    const auto r = mms_value(inst, i, 3);
    EXPECT_EQ(evaluate_partition(inst, i, r.witness), r.value);
    EXPECT_TRUE(validate(inst.with_k(1), r.witness).empty());
  }
}

TEST(Mms, FeigeHasNoMmsAllocation) {
  EXPECT_FALSE(mms_allocation_exists(catalog("feige9").instance).has_value());
}

TEST(Mms, SmallCases) {
  const Instance inst = fx::make({{5, 3, 2}, {1, 1, 1}}, 1, CostModel::cost_free());
  EXPECT_EQ(mms_value(inst, 0, 1).value, 10);
  EXPECT_EQ(mms_value(inst, 0, 2).value, 5);
  EXPECT_EQ(mms_value(inst, 0, 3).value, 2);
  EXPECT_EQ(mms_value(inst, 0, 4).value, 0);
  EXPECT_EQ(mms_value(inst, 1, 2).value, 1);
}

TEST(Mms, MatchesReference) {
  for (int seed = 0; seed < 40; ++seed) {
    const int n = 2 + seed % 3;
    const int m = 3 + seed % 5;
    const Instance inst = fx::random_instance(1000 + seed, n, m, 1);
    for (int d = 1; d <= 4; ++d) {
      for (int i = 0; i < n; ++i) EXPECT_EQ(mms_value(inst, i, d).value, ref::mms(inst, i, d)) << seed;
    }
  }
}

TEST(Mms, ScaleInvariance) {
  const Instance inst = fx::random_instance(77, 3, 6, 2);
  const Instance scaled = inst.with_scaled_agent(1, q(7, 3));
  EXPECT_EQ(mms_value(scaled, 1, 3).value, q(7, 3) * mms_value(inst, 1, 3).value);
}

TEST(Mms, RationalValuesUseExactPath) {
  std::vector<std::vector<Rational>> v = {{q(1, 3), q(1, 7), q(1, 11), q(2, 5)}, {q(1), q(1), q(1), q(1)}};
  const Instance inst(v, 1, CostModel::cost_free());
  EXPECT_EQ(mms_value(inst, 0, 2).value, ref::mms(inst, 0, 2));
  std::vector<std::vector<Rational>> big = {{Rational("100000000000000000000"), q(1), q(1)}, {q(1), q(1), q(1)}};
  EXPECT_EQ(mms_value(Instance(big, 1, CostModel::cost_free()), 0, 2).value, 2);
}

TEST(Smms, Example1) {
  const Instance inst = fx::example1();
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(smms_value(inst, i).value, 1);
    EXPECT_EQ(full_smms_value(inst, i).value, q(1, 2));
  }
}

TEST(Smms, WitnessAchievesValue) {
  const Instance inst = fx::random_instance(5, 3, 4, 2, Cost::kEqualShare);
  for (int i = 0; i < 3; ++i) {
    const auto r = smms_value(inst, i);
    EXPECT_TRUE(validate(inst, r.witness).empty());
    EXPECT_EQ(min_swap_utility(inst, r.witness, i), r.value);
  }
}

TEST(Smms, MatchesReference) {
  for (int seed = 0; seed < 24; ++seed) {
    const int n = 2 + seed % 2;
    const int m = 2 + seed % 3;
    const int k = 1 + seed % n;
    const auto cost = static_cast<Cost>(seed % 3);
    const Instance inst = fx::random_instance(2000 + seed, n, m, k, cost);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(smms_value(inst, i).value, ref::smms(inst, i, false)) << seed;
      EXPECT_EQ(full_smms_value(inst, i).value, ref::smms(inst, i, true)) << seed;
    }
  }
}

TEST(Smms, KOneEqualsMms) {
  for (int seed = 0; seed < 10; ++seed) {
    const Instance inst = fx::random_instance(3000 + seed, 3, 5, 1, Cost::kEqualShare);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(smms_value(inst, i).value, mms_value(inst, i, 3).value);
  }
}

TEST(Smms, CostFreeFullShareRestrictionIsExact) {
  for (int seed = 0; seed < 10; ++seed) {
    const Instance inst = fx::random_instance(3100 + seed, 3, 4, 2);
    OracleBudget restricted;
    restricted.restrict_full_share = true;
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(smms_value(inst, i, restricted).value, ref::smms(inst, i, false));
    }
  }
}

TEST(Smms, RejectsSetDependentCosts) {
  auto fn = [](int, int, std::span<const int>) { return Rational(0); };
  const Instance inst({{q(1)}, {q(1)}}, 2, CostModel::set_dependent(fn, q(0)));
  EXPECT_THROW(smms_value(inst, 0), Unsupported);
}

TEST(Smms, ExistenceAgreesWithReference) {
  for (int seed = 0; seed < 16; ++seed) {
    const auto cost = static_cast<Cost>(seed % 3);
    const Instance inst = fx::random_instance(3200 + seed, 3, 3, 2, cost);
    std::vector<Rational> t;
    for (int i = 0; i < 3; ++i) t.push_back(smms_value(inst, i).value);
    const auto found = smms_allocation_exists(inst);
    EXPECT_EQ(found.has_value(), ref::exists_meeting(inst, t, 1, 2)) << seed;
    if (found) {
      for (int i = 0; i < 3; ++i) EXPECT_GE(utility(inst, *found, i), t[i]);
    }
  }
}

TEST(Search, SpacesAgreeWithReference) {
  for (int seed = 0; seed < 16; ++seed) {
    const Instance inst = fx::random_instance(4000 + seed, 3, 4, 2, Cost::kEqualShare);
    std::vector<Rational> t;
    for (int i = 0; i < 3; ++i) t.push_back(inst.total_value(i) * q(1, 3));
    const auto one = find_allocation_meeting(inst, t, AllocationSpace::kOneSharing);
    const auto ks = find_allocation_meeting(inst, t, AllocationSpace::kKSharing);
    const auto full = find_allocation_meeting(inst, t, AllocationSpace::kFullySharing);
    EXPECT_EQ(one.has_value(), ref::exists_meeting(inst, t, 1, 1));
    EXPECT_EQ(ks.has_value(), ref::exists_meeting(inst, t, 1, 2));
    EXPECT_EQ(full.has_value(), ref::exists_meeting(inst, t, 2, 2));
    if (full) {
      EXPECT_TRUE(full->fully_shared(2));
    }
    if (one) {
      EXPECT_EQ(one->max_sharer_count(), 1);
    }
  }
}

TEST(Search, ReportsNodes) {
  std::uint64_t nodes = 0;
  const Instance inst = fx::random_instance(9, 3, 4, 2);
  find_allocation_meeting(inst, {q(1000), q(0), q(0)}, AllocationSpace::kKSharing, {}, &nodes);
  EXPECT_GT(nodes, 0U);
}

TEST(Budget, ExceededThrowsWithoutAnswer) {
  OracleBudget tiny;
  tiny.max_states = 10;
  const Instance inst = catalog("feige9").instance;
  EXPECT_THROW(mms_value(inst, 0, 3, tiny), BudgetExceeded);
  EXPECT_THROW(smms_value(inst, 0, tiny), BudgetExceeded);
  try {
    mms_value(inst, 0, 3, tiny);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.limit(), 10U);
  }
}

TEST(Budget, FromEnvironment) {
  ::setenv("SHAREFAIR_BUDGET", "1234", 1);
  EXPECT_EQ(OracleBudget::from_env().max_states, 1234U);
  ::unsetenv("SHAREFAIR_BUDGET");
  EXPECT_EQ(OracleBudget::from_env().max_states, OracleBudget::kDefaultMaxStates);
}

TEST(Parallel, ChunkedEnumerationIsDeterministic) {
  const Instance inst = fx::random_instance(31, 4, 6, 2, Cost::kEqualShare);
  OracleBudget par;
  par.parallel_chunks = 4;
  for (int i = 0; i < 4; ++i) {
    const auto a = smms_value(inst, i);
    const auto b = smms_value(inst, i, par);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(mms_value(inst, i, 4).value, mms_value(inst, i, 4, par).value);
  }
}

TEST(Cmms, EqualsFullSmmsThroughReduction) {
  for (int seed = 0; seed < 12; ++seed) {
    const auto cost = seed % 2 ? Cost::kEqualShare : Cost::kFlatTable;
    const Instance inst = fx::random_instance(5000 + seed, 3, 1 + seed % 4, 2, cost);
    const CCInstance cc = to_cardinality_constrained(inst);
    for (int i = 0; i < 3; ++i) {
      const Rational c = cmms_value(cc, i).value;
      EXPECT_EQ(c, ref::cmms(cc, i));
      EXPECT_EQ(c, full_smms_value(inst, i).value) << seed;
    }
  }
}

TEST(Cmms, Example1) {
  const CCInstance cc = to_cardinality_constrained(fx::example1());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(cmms_value(cc, i).value, q(1, 2));
}

TEST(Cmms, FeasibleEnumerationCount) {
  const CCInstance cc = to_cardinality_constrained(fx::random_instance(6, 3, 3, 2, Cost::kEqualShare));
  EXPECT_EQ(static_cast<long long>(feasible_cc_allocations(cc).size()), ref::cc_feasible_count(cc));
}

TEST(Cmms, InfeasibleBudgets) {
  CCInstance cc;
  cc.agents = 2;
  cc.agent_names = {"a1", "a2"};
  cc.item_names = {"x", "y", "z"};
  cc.valuations = {{q(1), q(1), q(1)}, {q(1), q(1), q(1)}};
  cc.item_type = {0, 0, 0};
  cc.type_names = {"t"};
  cc.budgets = {1};
  EXPECT_THROW(cmms_value(cc, 0), InfeasibleError);
}

TEST(CutAndChoose, ChooserGetsPreferredSide) {
  const Instance inst = fx::make({{4, 4, 2, 2}, {1, 0, 0, 9}}, 1, CostModel::cost_free());
  const Bipartition p = two_agent_mms_partition(inst, 0, 1);
  Rational first0 = inst.bundle_value(0, p.first);
  Rational second0 = inst.bundle_value(0, p.second);
  EXPECT_EQ(std::min(first0, second0), 6);
  EXPECT_GE(inst.bundle_value(1, p.second), inst.bundle_value(1, p.first));
  EXPECT_EQ(p.first.size() + p.second.size(), 4U);
}

TEST(CutAndChoose, BothReachTwoBundleMms) {
  for (int seed = 0; seed < 30; ++seed) {
    const Instance inst = fx::random_instance(6000 + seed, 2, 2 + seed % 6, 1);
    const Bipartition p = two_agent_mms_partition(inst, 0, 1);
    EXPECT_GE(inst.bundle_value(0, p.first), ref::mms(inst, 0, 2));
    EXPECT_GE(inst.bundle_value(1, p.second), ref::mms(inst, 1, 2));
  }
}

TEST(Certificate, Theorem5HasNoSmmsAllocation) {
  const auto cert = certify_smms_by_full_share(catalog("theorem5").instance);
  EXPECT_TRUE(cert.premise_holds);
  EXPECT_FALSE(cert.witness.has_value());
  for (const auto& v : cert.full_smms) EXPECT_EQ(v, 80110000);
  for (const auto& b : cert.best_short_bundle) EXPECT_LT(b, 80110000);
}

TEST(Certificate, RejectsNonCostFree) {
  EXPECT_THROW(certify_smms_by_full_share(catalog("feige9").instance), PreconditionError);
}
