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

#ifndef SHAREFAIR_VERIFY_HPP_
#define SHAREFAIR_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sharefair/instances.hpp"
#include "sharefair/oracles.hpp"

namespace sharefair {

// ---------------------------------------------------------------------------
// Guarantee table

std::vector<int> table1_k_values();
std::vector<Rational> table1_cost_values();
// cells[r][c] = guarantee_factor(k_r, C_c) as a minimal exact decimal.
std::vector<std::vector<std::string>> table1_cells();
// Header "k,0.0,0.1,...", then one line per k.
std::string table1_csv();

// ---------------------------------------------------------------------------
// Seeded random suites

struct SuiteInstance {
  std::string label;
  GeneratorConfig config;
  Instance instance;
};

// n in {2,3,4}, m in {3..7}, k in {2,3} with k <= n, costs cost-free /
// equal-share / flat count table 3/10; `per_cell` seeds per combination
// (3 gives 225 instances).
std::vector<SuiteInstance> bagfill_suite(int per_cell = 3, std::uint64_t seed_base = 0x5eedULL);

// Equal-share instances with n in {2,3,4}, m in {3..7} and every legal
// k >= ceil(n/2).
std::vector<SuiteInstance> pairing_suite(int per_cell = 3, std::uint64_t seed_base = 0xba1aULL);

// n = 3, k = 2, m in {1..4}, goods-based cost models.
std::vector<SuiteInstance> reduction_fixtures();

// ---------------------------------------------------------------------------
// Checks

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  OracleBudget budget;
  int suite_per_cell = 3;
  // Called after each criterion finishes; may be empty.
  std::function<void(const CriterionResult&)> progress;
};

constexpr int kCriterionCount = 11;

std::string criterion_title(int id);
// Runs one check (1..kCriterionCount). Exceptions become failures with the
// message in `detail`.
CriterionResult verify_criterion(int id, const VerifyOptions& options = {});
std::vector<CriterionResult> verify_all(const VerifyOptions& options = {});

}  // namespace sharefair

#endif  // SHAREFAIR_VERIFY_HPP_
