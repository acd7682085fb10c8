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

#ifndef SHAREFAIR_BAGFILL_HPP_
#define SHAREFAIR_BAGFILL_HPP_

#include <vector>

#include "sharefair/model.hpp"
#include "sharefair/oracles.hpp"

namespace sharefair {

// alpha = min(1, (1 - C)(k - 1)).
Rational guarantee_factor(int k, const Rational& max_cost);

// Remaining share multiplicities xi(g), indexed by original good.
struct ShareMultiset {
  std::vector<int> multiplicity;

  int total() const;
  bool empty() const { return total() == 0; }
  std::vector<int> support() const;
};

struct Phase1Entry {
  int agent = 0;
  int good = 0;
  Rational remaining_value;  // v_i(M~) at the time
  int remaining_agents = 0;  // |N~| at the time
};

struct BagRound {
  std::vector<int> agents_before;         // N~ at round start
  std::vector<int> multiplicity_before;   // xi at round start
  std::vector<int> mandatory;             // goods with xi = |N~|
  std::vector<int> filler;                // in insertion order
  int recipient = 0;
  bool final_round = false;               // last agent takes the remainder
  std::vector<Rational> bag_value;        // normalized, per original agent (0 if not remaining)
};

struct BagTrace {
  int agents = 0;
  int goods = 0;
  int k = 1;
  int copies = 0;                          // k' = min(k, |N~|) used in Phase 2
  std::vector<Phase1Entry> phase1;
  std::vector<int> zero_value_agents;      // dropped before normalization
  std::vector<int> phase2_agents;
  // share_value[i][g] = v_i(g) |N~| / (v_i(M~) k'); zero rows outside Phase 2.
  std::vector<std::vector<Rational>> share_value;
  std::vector<BagRound> rounds;
};

struct BagFillResult {
  KSharingAllocation allocation;
  BagTrace trace;
  Rational alpha;
  Rational max_cost;
  FairnessReport report;  // thresholds alpha * MMS_i^n with the oracle
};

struct BagFillOptions {
  bool with_oracle = false;
  OracleBudget budget;
};

// Shared bag filling. Lemma 1, the multiplicity invariant and bag
// well-formedness are checked every round; a failure throws
// InvariantViolation.
BagFillResult shared_bag_filling(const Instance& instance, const BagFillOptions& options = {});

// Post-hoc audit of a trace: recomputes bag values and multiplicities and
// checks that every filler share was available, every non-final bag reached
// (k'-1)/k' for its recipient only after its last share, and nothing was
// left over. Throws DimensionError on malformed traces.
bool never_stuck_check(const BagTrace& trace);

// Allocation described by a trace.
KSharingAllocation replay(const BagTrace& trace);

}  // namespace sharefair

#endif  // SHAREFAIR_BAGFILL_HPP_
