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

// Seeded property checks. Each case draws instances from a fixed seed range
// so failures reproduce; the seed is printed with every assertion.
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reference.hpp"
#include "sharefair/bagfill.hpp"
#include "sharefair/oracles.hpp"
#include "sharefair/pairing.hpp"
#include "sharefair/reductions.hpp"

using namespace sharefair;
using fx::q;
using Cost = GeneratorConfig::Cost;

namespace {

struct Drawn {
  std::uint64_t seed;
  Instance inst;
};

// n in {2,3}, m in {2..4}, k in {2..n}, cycling through the three cost kinds.
std::vector<Drawn> small_suite(std::uint64_t base, int count) {
  std::vector<Drawn> out;
  for (int s = 0; s < count; ++s) {
    const int n = 2 + s % 2;
    const int m = 2 + s % 3;
    const int k = 2 + (s / 2) % (n - 1);
    const auto cost = static_cast<Cost>(s % 3);
    out.push_back({base + s, fx::random_instance(base + s, n, m, k, cost, 9)});
  }
  return out;
}

}  // namespace

TEST(OracleProperties, FullSmmsAtMostSmms) {
  for (const auto& [seed, inst] : small_suite(10'000, 30)) {
    for (int i = 0; i < inst.agent_count(); ++i) {
      EXPECT_LE(full_smms_value(inst, i).value, smms_value(inst, i).value) << seed;
    }
  }
}

TEST(OracleProperties, Lemma2Bounds) {
  for (const auto& [seed, inst] : small_suite(11'000, 30)) {
    const Rational c = inst.max_cost();
    for (int i = 0; i < inst.agent_count(); ++i) {
      const Rational full = full_smms_value(inst, i).value;
      EXPECT_GE(full, (1 - c) * smms_value(inst, i).value) << seed;
      EXPECT_GE(full, inst.k() * (1 - c) * mms_value(inst, i, inst.agent_count()).value) << seed;
    }
  }
}

TEST(OracleProperties, CostFreeVersusGenerous) {
  for (const auto& [seed, inst] : small_suite(12'000, 30)) {
    if (!inst.generous()) continue;
    const Instance cf = inst.with_cost_model(CostModel::cost_free());
    const Rational c = inst.max_cost();
    for (int i = 0; i < inst.agent_count(); ++i) {
      const Rational s_cf = smms_value(cf, i).value;
      const Rational s_c = smms_value(inst, i).value;
      EXPECT_GE(s_cf, s_c) << seed;
      EXPECT_GE(s_c, (1 - c) * s_cf) << seed;
    }
  }
}

TEST(OracleProperties, MonotonicityUnderRemoval) {
  for (int s = 0; s < 30; ++s) {
    const int n = 2 + s % 3;
    const Instance inst = fx::random_instance(13'000 + s, n, 3 + s % 4, 1);
    for (int i = 0; i < n; ++i) {
      const Rational before = mms_value(inst, i, n).value;
      for (int g = 0; g < inst.good_count(); ++g) {
        const int other = i == 0 ? 1 : 0;
        const Instance smaller = inst.without(other, g);
        const int i2 = i > other ? i - 1 : i;
        EXPECT_GE(mms_value(smaller, i2, n - 1).value, before) << s << " good " << g;
      }
    }
  }
}

TEST(OracleProperties, ScaleInvarianceOfValuesAndStatus) {
  for (const auto& [seed, inst] : small_suite(14'000, 12)) {
    const int n = inst.agent_count();
    std::vector<Rational> smms;
    for (int i = 0; i < n; ++i) smms.push_back(smms_value(inst, i).value);
    const auto witness = smms_value(inst, 0).witness;
    for (const Rational& r : {q(1, 3), q(2), q(7)}) {
      for (int a = 0; a < n; ++a) {
        const Instance scaled = inst.with_scaled_agent(a, r);
        EXPECT_EQ(mms_value(scaled, a, n).value, r * mms_value(inst, a, n).value) << seed;
        EXPECT_EQ(smms_value(scaled, a).value, r * smms[a]) << seed;
        EXPECT_EQ(full_smms_value(scaled, a).value, r * full_smms_value(inst, a).value) << seed;
        for (int i = 0; i < n; ++i) {
          const Rational t = i == a ? r * smms[i] : smms[i];
          EXPECT_EQ(utility(scaled, witness, i) >= t, utility(inst, witness, i) >= smms[i]) << seed;
        }
      }
    }
  }
}

TEST(OracleProperties, WitnessesReproduceValues) {
  for (const auto& [seed, inst] : small_suite(15'000, 20)) {
    for (int i = 0; i < inst.agent_count(); ++i) {
      const auto m = mms_value(inst, i, inst.agent_count());
      EXPECT_EQ(evaluate_partition(inst, i, m.witness), m.value) << seed;
      const auto s = smms_value(inst, i);
      EXPECT_EQ(min_swap_utility(inst, s.witness, i), s.value) << seed;
      const auto f = full_smms_value(inst, i);
      EXPECT_TRUE(f.witness.fully_shared(inst.k())) << seed;
      EXPECT_EQ(min_swap_utility(inst, f.witness, i), f.value) << seed;
    }
  }
}

TEST(OracleProperties, ParallelChunksAgree) {
  OracleBudget par;
  par.parallel_chunks = 3;
  for (const auto& [seed, inst] : small_suite(16'000, 12)) {
    for (int i = 0; i < inst.agent_count(); ++i) {
      EXPECT_EQ(smms_value(inst, i, par).value, smms_value(inst, i).value) << seed;
      EXPECT_EQ(full_smms_value(inst, i, par).value, full_smms_value(inst, i).value) << seed;
    }
  }
}

TEST(BagFillProperties, RoundInvariants) {
  for (int s = 0; s < 120; ++s) {
    const int n = 2 + s % 3;
    const int k = std::min(n, 2 + s % 2);
    const Instance inst = fx::random_instance(17'000 + s, n, 3 + s % 5, k, static_cast<Cost>(s % 3), 20);
    const auto r = shared_bag_filling(inst);
    const BagTrace& t = r.trace;
    EXPECT_TRUE(never_stuck_check(t)) << s;
    EXPECT_EQ(replay(t), r.allocation);
    EXPECT_EQ(utilities(inst, replay(t)), utilities(inst, r.allocation));
    if (t.copies == 0) continue;
    const Rational threshold(t.copies - 1, t.copies);
    for (const auto& round : t.rounds) {
      const int na = static_cast<int>(round.agents_before.size());
      for (int g = 0; g < t.goods; ++g) EXPECT_LE(round.multiplicity_before[g], na) << s;
      std::vector<int> bag = round.mandatory;
      bag.insert(bag.end(), round.filler.begin(), round.filler.end());
      std::sort(bag.begin(), bag.end());
      EXPECT_EQ(std::adjacent_find(bag.begin(), bag.end()), bag.end()) << s;
      for (int i : round.agents_before) {
        Rational left = 0;
        for (int g = 0; g < t.goods; ++g) left += round.multiplicity_before[g] * t.share_value[i][g];
        if (left > 0) EXPECT_GE(left, na) << s;
      }
      if (!round.final_round) {
        EXPECT_GE(round.bag_value[round.recipient], threshold) << s;
        if (!round.filler.empty()) EXPECT_LE(round.bag_value[round.recipient], 1) << s;
      }
    }
  }
}

TEST(BagFillProperties, GuaranteeHolds) {
  for (int s = 0; s < 80; ++s) {
    const int n = 2 + s % 3;
    const int k = std::min(n, 2 + s % 2);
    const Instance inst = fx::random_instance(18'000 + s, n, 3 + s % 5, k, static_cast<Cost>(s % 3), 20);
    const auto r = shared_bag_filling(inst);
    for (int i = 0; i < n; ++i) {
      EXPECT_GE(utility(inst, r.allocation, i), r.alpha * ref::mms(inst, i, n)) << s;
    }
  }
}

TEST(PairingProperties, EvenNFullyShared) {
  for (int s = 0; s < 30; ++s) {
    const int n = 2 + 2 * (s % 2);
    const Instance inst = fx::random_instance(19'000 + s, n, 3 + s % 5, n / 2 + s % 2, Cost::kEqualShare);
    const auto r = pairwise_mms_allocation(inst);
    EXPECT_TRUE(r.allocation.fully_shared(n / 2)) << s;
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(utility(inst, r.allocation, i), inst.bundle_value(i, r.allocation.bundle(i)) / (n / 2));
      EXPECT_GE(utility(inst, r.allocation, i), ref::mms(inst, i, n)) << s;
    }
  }
}

TEST(PairingProperties, OddNMeetsNPlusOneBundles) {
  for (int s = 0; s < 30; ++s) {
    const Instance inst = fx::random_instance(20'000 + s, 3, 3 + s % 5, 2, Cost::kEqualShare);
    const auto r = pairwise_mms_allocation(inst);
    EXPECT_TRUE(r.used_dummy);
    EXPECT_TRUE(validate(inst, r.allocation).empty());
    for (int i = 0; i < 3; ++i) EXPECT_GE(utility(inst, r.allocation, i), ref::mms(inst, i, 4)) << s;
  }
}

TEST(PairingProperties, FeigeCutMakerGetsSixty) {
  const std::vector<int> keep = {0, 1};
  const Instance inst = catalog("feige9").instance.restricted_to_agents(keep);
  const Bipartition p = two_agent_mms_partition(inst, 0, 1);
  EXPECT_GE(std::min(inst.bundle_value(0, p.first), inst.bundle_value(0, p.second)), 60);
}

TEST(ReductionProperties, CmmsEqualsFullSmms) {
  for (int s = 0; s < 16; ++s) {
    const auto cost = s % 2 ? Cost::kEqualShare : Cost::kFlatTable;
    const Instance inst = fx::random_instance(21'000 + s, 3, 1 + s % 4, 2, cost);
    const CCInstance cc = to_cardinality_constrained(inst);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(cmms_value(cc, i).value, ref::smms(inst, i, true)) << s;
  }
}
