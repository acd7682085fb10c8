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

#ifndef SHAREFAIR_PAIRING_HPP_
#define SHAREFAIR_PAIRING_HPP_

#include <string>

#include "sharefair/model.hpp"
#include "sharefair/oracles.hpp"

namespace sharefair {

// What the report's thresholds mean for the instance's cost model.
enum class PairingGuarantee {
  kEqualShare,   // proven directly
  kGenerous,     // carried over by Observation 1
  kNone,         // allocation returned, nothing claimed
};

struct PairingResult {
  KSharingAllocation allocation;
  int sharing_degree = 0;     // l = ceil(n / 2)
  int mms_bundles = 0;        // n for even n, n + 1 for odd n
  bool used_dummy = false;
  PairingGuarantee guarantee = PairingGuarantee::kNone;
  FairnessReport report;      // thresholds MMS_i^{mms_bundles} with the oracle
};

struct PairingOptions {
  bool with_oracle = false;
  OracleBudget budget;
};

std::string to_string(PairingGuarantee g);

// Agents (0,1), (2,3), ... each split all goods by cut and choose; odd n
// pairs the last agent with a zero-valued dummy whose goods then go to the
// real agent valuing each most (ties: lowest index). Needs k >= ceil(n / 2).
PairingResult pairwise_mms_allocation(const Instance& instance, const PairingOptions& options = {});

// MMS_i^2 >= l * MMS_i^{2l}; l defaults to ceil(n / 2).
bool bipartition_floor_check(const Instance& instance, int agent, int ell = 0, const OracleBudget& budget = {});

}  // namespace sharefair

#endif  // SHAREFAIR_PAIRING_HPP_
