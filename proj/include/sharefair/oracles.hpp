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

#ifndef SHAREFAIR_ORACLES_HPP_
#define SHAREFAIR_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sharefair/cc_instance.hpp"
#include "sharefair/model.hpp"

namespace sharefair {

// Limits for the exhaustive oracles. Enumeration that would go past
// max_states throws BudgetExceeded; there are no partial answers.
struct OracleBudget {
  static constexpr std::uint64_t kDefaultMaxStates = 50'000'000;

  std::uint64_t max_states = kDefaultMaxStates;
  // SMMS only: enumerate fully-shared allocations. Exact for cost-free
  // models (adding sharers never lowers a bundle's value there).
  bool restrict_full_share = false;
  int parallel_chunks = 1;

  // Default budget with max_states taken from SHAREFAIR_BUDGET when set.
  static OracleBudget from_env();
};

// `witness` re-evaluates to `value` through the core model. For MMS the
// witness is a partition written as a 1-sharing allocation whose agent slots
// are the d bundles; for CMMS it is the item partition (items as goods).
struct OracleResult {
  Rational value;
  KSharingAllocation witness;
  std::uint64_t states_enumerated = 0;
};

// MMS_i^d(M): max over d-partitions of the minimum bundle value under v_i.
// Partitions are enumerated in restricted-growth form.
OracleResult mms_value(const Instance& instance, int agent, int bundles, const OracleBudget& budget = {});
// All agents in one pass.
std::vector<OracleResult> mms_values(const Instance& instance, int bundles, const OracleBudget& budget = {});

// Min over bundles of agent's value of a partition witness.
Rational evaluate_partition(const Instance& instance, int agent, const KSharingAllocation& partition);

// A 1-sharing allocation with v_i(A_i) >= MMS_i^n for all i, or nullopt.
std::optional<KSharingAllocation> mms_allocation_exists(const Instance& instance,
                                                        const OracleBudget& budget = {});

// SMMS_i = max over k-sharing B of min_j u_i(B_{i<->j}). Requires a
// count-based cost model.
OracleResult smms_value(const Instance& instance, int agent, const OracleBudget& budget = {});
std::vector<OracleResult> smms_values(const Instance& instance, const OracleBudget& budget = {});

// SMMS restricted to fully-shared allocations.
OracleResult full_smms_value(const Instance& instance, int agent, const OracleBudget& budget = {});
std::vector<OracleResult> full_smms_values(const Instance& instance, const OracleBudget& budget = {});

// A valid k-sharing allocation with utility(i) >= smms_value(i), or nullopt.
std::optional<KSharingAllocation> smms_allocation_exists(const Instance& instance,
                                                         const OracleBudget& budget = {});

// Which allocations a threshold search ranges over.
enum class AllocationSpace { kOneSharing, kKSharing, kFullySharing };

// First allocation (lexicographic sharer-set order) in `space` with
// utility(i) >= thresholds[i] for all i, or nullopt. Prunes on the best
// value each agent can still reach. `nodes`, when given, receives the
// number of search nodes visited.
std::optional<KSharingAllocation> find_allocation_meeting(const Instance& instance,
                                                          const std::vector<Rational>& thresholds,
                                                          AllocationSpace space, const OracleBudget& budget = {},
                                                          std::uint64_t* nodes = nullptr);

// CMMS_i = max over feasible allocations of min_j v~_i(A_j). Throws
// InfeasibleError when no feasible allocation covers the items.
OracleResult cmms_value(const CCInstance& cc, int agent, const OracleBudget& budget = {});
std::vector<OracleResult> cmms_values(const CCInstance& cc, const OracleBudget& budget = {});

// Every feasible allocation of a (small) CC instance, in enumeration order.
std::vector<CCAllocation> feasible_cc_allocations(const CCInstance& cc, const OracleBudget& budget = {});

struct Bipartition {
  std::vector<int> first;   // goods for the cut-maker
  std::vector<int> second;  // goods for the chooser
};

// Cut-and-choose over all 2^(m-1) bipartitions: the cut-maker's maximin
// split, the chooser taking the side it values more (ties: side two). Among
// the cut-maker's maximin splits, prefers the one maximising what the
// cut-maker and then the chooser end up with.
Bipartition two_agent_mms_partition(const Instance& instance, int cut_maker, int chooser,
                                    const OracleBudget& budget = {});

// Certificate for SMMS (non)existence in cost-free instances where each
// agent's SMMS is only reachable by fully-shared allocations.
//
// Premise: with q = k m / n goods per bundle in a fully-shared allocation,
// the q - 1 most valuable goods of every agent are worth less than that
// agent's fullSMMS. Then SMMS = fullSMMS, and every SMMS allocation is
// fully shared, so the search over fully-shared allocations is exhaustive.
struct FullShareCertificate {
  bool premise_holds = false;
  int goods_per_bundle = 0;
  std::vector<Rational> full_smms;
  std::vector<Rational> best_short_bundle;  // value of top q - 1 goods per agent
  std::optional<KSharingAllocation> witness;
  std::uint64_t states_enumerated = 0;  // fullSMMS enumeration
  std::uint64_t search_nodes = 0;       // witness search
};

// Throws PreconditionError for non-cost-free models or when k m / n is not
// an integer. The witness search only runs when the premise holds.
FullShareCertificate certify_smms_by_full_share(const Instance& instance, const OracleBudget& budget = {});

}  // namespace sharefair

#endif  // SHAREFAIR_ORACLES_HPP_
