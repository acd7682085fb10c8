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

#ifndef SHAREFAIR_REDUCTIONS_HPP_
#define SHAREFAIR_REDUCTIONS_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "sharefair/cc_instance.hpp"
#include "sharefair/model.hpp"
#include "sharefair/oracles.hpp"

namespace sharefair {

// Each good g becomes a type of k copies g^1..g^k with unit budget, every
// copy worth (1 - c_g(k)) v_i(g) to agent i. Fully-shared k-sharing
// allocations of `instance` and feasible allocations of the result are in
// bijection with equal utilities. Goods-based cost models only.
CCInstance to_cardinality_constrained(const Instance& instance);

// Inverse direction for copy-uniform, unit-budget instances with equal type
// sizes k: v_i(type) = v~_i(copy) / (1 - c(k)). `cost` must be goods-based
// with c(k) < 1 for every type. Throws Unsupported when `cc` has no k-sharing
// preimage.
Instance from_cardinality_constrained(const CCInstance& cc, const CostModel& cost);

// Budget-respecting check; throws PreconditionError naming the first agent
// and type over budget, DimensionError on shape mismatch.
void check_cc_allocation(const CCInstance& cc, const CCAllocation& alloc);

// Maps a feasible allocation back: good g is shared by the owners of its
// copies. Needs a unit-budget instance whose types each have k items.
KSharingAllocation from_cc_allocation(const CCInstance& cc, const CCAllocation& alloc);

// The inverse map for fully-shared allocations (copy j of g goes to the j-th
// smallest sharer of g).
CCAllocation to_cc_allocation(const CCInstance& cc, const KSharingAllocation& alloc);

// v~_i(A~_j) per agent i, own bundle (j = i).
std::vector<Rational> cc_utilities(const CCInstance& cc, const CCAllocation& alloc);

// A black-box CMMS solver: returns an allocation together with the factor
// alpha it guarantees (every agent gets >= alpha * CMMS_i).
struct CmmsSolution {
  CCAllocation allocation;
  Rational alpha;
};
using CmmsSolver = std::function<CmmsSolution(const CCInstance&)>;

// Exact solver: computes every CMMS_i by enumeration, then returns the
// feasible allocation maximising min_i v~_i(A~_i) / CMMS_i (agents with
// CMMS_i = 0 are ignored), lexicographically first on ties. alpha is the
// achieved ratio capped at 1.
CmmsSolver exact_cmms_solver(OracleBudget budget = {});

struct SmmsApproximation {
  KSharingAllocation allocation;
  Rational alpha;          // reported by the solver
  Rational max_cost;       // C
  FairnessReport smms;     // thresholds alpha (1 - C) SMMS_i, when computed
  FairnessReport mms;      // thresholds alpha k (1 - C) MMS_i, when computed
};

// Reduce, solve, map back. With `with_oracle` the reports carry the
// guarantee thresholds from the exact SMMS/MMS oracles.
SmmsApproximation smms_via_cmms(const Instance& instance, const CmmsSolver& solver, bool with_oracle = false,
                                const OracleBudget& budget = {});

// (M, M): both agents hold every good. SMMS for n = k = 2 under a generous
// goods-based model.
KSharingAllocation two_agent_smms(const Instance& instance);

// Identical valuations with goods-based costs: agent 0's SMMS maximiser is
// an SMMS allocation for everyone.
KSharingAllocation identical_valuation_smms(const Instance& instance, const OracleBudget& budget = {});

}  // namespace sharefair

#endif  // SHAREFAIR_REDUCTIONS_HPP_
