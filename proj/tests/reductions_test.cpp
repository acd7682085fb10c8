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

#include <set>

#include "fixtures.hpp"
#include "reference.hpp"
#include "sharefair/error.hpp"
#include "sharefair/oracles.hpp"
#include "sharefair/reductions.hpp"

using namespace sharefair;
using fx::q;
using Cost = GeneratorConfig::Cost;

TEST(Reduction, CopyValuesAndBudgets) {
  const Instance inst = fx::make({{4, 6}, {2, 2}, {0, 8}}, 2, fx::flat(2, 2, q(1, 4)));
  const CCInstance cc = to_cardinality_constrained(inst);
  EXPECT_EQ(cc.agents, 3);
  EXPECT_EQ(cc.item_count(), 4);
  EXPECT_EQ(cc.type_count(), 2);
  EXPECT_EQ(cc.budgets, (std::vector<int>{1, 1}));
  EXPECT_EQ(cc.item_type, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(cc.copy_index, (std::vector<int>{1, 2, 1, 2}));
  EXPECT_EQ(cc.item_names[3], "g2^2");
  EXPECT_EQ(cc.valuations[0], (std::vector<Rational>{q(3), q(3), q(9, 2), q(9, 2)}));
  EXPECT_EQ(cc.valuations[2][2], 6);
  EXPECT_EQ(cc.type_members()[1], (std::vector<int>{2, 3}));
  EXPECT_NO_THROW(cc.check());
}

TEST(Reduction, Example1CopyValues) {
  const CCInstance cc = to_cardinality_constrained(fx::example1());
  EXPECT_EQ(cc.valuations[0], (std::vector<Rational>{q(1, 2), q(1, 2), q(1), q(1)}));
}

TEST(Reduction, RejectsAgentSpecificCosts) {
  std::vector<std::vector<std::vector<Rational>>> t(2, {{q(0), q(1, 2)}});
  const Instance inst({{q(1)}, {q(1)}}, 2, CostModel::agent_count_table(t));
  EXPECT_THROW(to_cardinality_constrained(inst), Unsupported);
}

TEST(Reduction, BudgetViolationNamesAgentAndType) {
  const CCInstance cc = to_cardinality_constrained(fx::example1());
  try {
    check_cc_allocation(cc, {0, 0, 1, 2});
    FAIL();
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("a1"), std::string::npos) << msg;
    EXPECT_NE(msg.find("g1"), std::string::npos) << msg;
  }
  EXPECT_THROW(check_cc_allocation(cc, {0, 1, 2}), DimensionError);
  EXPECT_NO_THROW(check_cc_allocation(cc, {0, 1, 1, 2}));
}

TEST(Reduction, RoundTripInstance) {
  for (int seed = 0; seed < 10; ++seed) {
    const CostModel cost = seed % 2 ? CostModel::equal_share() : fx::flat(4, 2, q(1, 4));
    const Instance inst = fx::random_instance(100 + seed, 3, 4, 2).with_cost_model(cost);
    const Instance back = from_cardinality_constrained(to_cardinality_constrained(inst), cost);
    EXPECT_EQ(back.valuations(), inst.valuations());
    EXPECT_EQ(back.k(), 2);
  }
}

TEST(Reduction, InverseRejectsNonUniformCopies) {
  CCInstance cc = to_cardinality_constrained(fx::example1());
  cc.valuations[0][1] = 7;
  EXPECT_THROW(from_cardinality_constrained(cc, CostModel::equal_share()), Unsupported);
}

TEST(Reduction, AllocationMapsPreserveUtilities) {
  for (int seed = 0; seed < 8; ++seed) {
    const Instance inst = fx::random_instance(200 + seed, 3, 3, 2, Cost::kEqualShare);
    const CCInstance cc = to_cardinality_constrained(inst);
    std::set<KSharingAllocation> image;
    for (const auto& a : feasible_cc_allocations(cc)) {
      const KSharingAllocation k = from_cc_allocation(cc, a);
      EXPECT_TRUE(k.fully_shared(2));
      EXPECT_EQ(cc_utilities(cc, a), utilities(inst, k));
      EXPECT_EQ(from_cc_allocation(cc, to_cc_allocation(cc, k)), k);
      image.insert(k);
    }
    // Three sharer pairs per good.
    EXPECT_EQ(image.size(), 27U);
  }
}

TEST(Reduction, ToCcRejectsPartialSharing) {
  const CCInstance cc = to_cardinality_constrained(fx::example1());
  KSharingAllocation a(3, 2);
  a.set_sharers(0, {0});
  a.set_sharers(1, {1, 2});
  EXPECT_THROW(to_cc_allocation(cc, a), PreconditionError);
}

TEST(ExactSolver, AchievesReportedAlpha) {
  for (int seed = 0; seed < 6; ++seed) {
    const CCInstance cc = to_cardinality_constrained(fx::random_instance(300 + seed, 3, 3, 2, Cost::kEqualShare));
    const auto sol = exact_cmms_solver()(cc);
    EXPECT_LE(sol.alpha, 1);
    const auto u = cc_utilities(cc, sol.allocation);
    for (int i = 0; i < 3; ++i) EXPECT_GE(u[i], sol.alpha * ref::cmms(cc, i));
  }
}

TEST(Pipeline, Example1) {
  const auto r = smms_via_cmms(fx::example1(), exact_cmms_solver(), true);
  EXPECT_EQ(r.max_cost, q(1, 2));
  EXPECT_EQ(r.alpha, 1);
  EXPECT_TRUE(r.smms.satisfied);
  EXPECT_TRUE(r.mms.satisfied);
  for (int i = 0; i < 3; ++i) EXPECT_GE(utility(fx::example1(), r.allocation, i), q(1, 2));
}

TEST(Pipeline, GuaranteeAgainstReference) {
  for (int seed = 0; seed < 12; ++seed) {
    const auto cost = seed % 2 ? Cost::kEqualShare : Cost::kFlatTable;
    const Instance inst = fx::random_instance(400 + seed, 3, 1 + seed % 4, 2, cost);
    const auto r = smms_via_cmms(inst, exact_cmms_solver());
    const Rational f = r.alpha * (Rational(1) - r.max_cost);
    for (int i = 0; i < 3; ++i) {
      EXPECT_GE(utility(inst, r.allocation, i), f * ref::smms(inst, i, false)) << seed;
      EXPECT_GE(utility(inst, r.allocation, i), f * 2 * ref::mms(inst, i, 3)) << seed;
    }
  }
}

TEST(Pipeline, CustomSolverIsUsed) {
  const Instance inst = fx::example1();
  CmmsSolver fixed = [](const CCInstance&) { return CmmsSolution{{0, 1, 1, 2}, q(1, 3)}; };
  const auto r = smms_via_cmms(inst, fixed);
  EXPECT_EQ(r.alpha, q(1, 3));
  EXPECT_EQ(r.allocation.sharers(0), (std::vector<int>{0, 1}));
}

TEST(TwoAgents, FullSharingIsSmms) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto cost = static_cast<Cost>(seed % 3);
    const Instance inst = fx::random_instance(500 + seed, 2, 1 + seed % 5, 2, cost);
    const auto a = two_agent_smms(inst);
    for (int i = 0; i < 2; ++i) EXPECT_GE(utility(inst, a, i), ref::smms(inst, i, false)) << seed;
  }
  EXPECT_THROW(two_agent_smms(fx::example1()), PreconditionError);
}

TEST(IdenticalValuations, SharedMaximiserIsSmms) {
  for (int seed = 0; seed < 12; ++seed) {
    const auto cost = static_cast<Cost>(seed % 3);
    const Instance one = fx::random_instance(600 + seed, 1, 1 + seed % 4, 1);
    const Instance inst(std::vector<std::vector<Rational>>(3, one.valuations()[0]), 2,
                        generator_cost_model({0, 3, one.good_count(), 2, cost, q(3, 10)}));
    const auto a = identical_valuation_smms(inst);
    for (int i = 0; i < 3; ++i) EXPECT_GE(utility(inst, a, i), ref::smms(inst, i, false)) << seed;
  }
}
