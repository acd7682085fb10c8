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

#ifndef SHAREFAIR_INSTANCES_HPP_
#define SHAREFAIR_INSTANCES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sharefair/cc_instance.hpp"
#include "sharefair/model.hpp"

namespace sharefair {

// A known allocation with the utilities it is stated to give, evaluated
// under `cost` (which may differ from the entry's own cost model).
struct KnownAllocation {
  std::string label;
  KSharingAllocation allocation;
  CostModel cost;
  std::vector<Rational> utilities;
  std::string provenance;  // "published" or "derived"
};

struct CatalogEntry {
  std::string id;
  std::string description;
  Instance instance;
  std::vector<Rational> totals;  // v_i(M)
  std::vector<KnownAllocation> allocations;
};

// Ids: feige9, kurokawa12, theorem5.
std::vector<std::string> catalog_ids();
bool is_catalog_id(std::string_view id);
// Throws PreconditionError for unknown ids.
CatalogEntry catalog(std::string_view id);

// Good index of the (row, col) cell of a 3 x 4 grid instance, 0-based
// arguments and result: 4 row + col.
constexpr int grid_good(int row, int col) { return 4 * row + col; }

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string fingerprint(const Instance& instance);

// ---------------------------------------------------------------------------
// Random instances

struct GeneratorConfig {
  enum class Cost { kCostFree, kEqualShare, kFlatTable };

  std::uint64_t seed = 0;
  int agents = 3;
  int goods = 5;
  int k = 2;
  Cost cost = Cost::kCostFree;
  Rational flat_cost;  // kFlatTable: c(1) = 0, c(l) = flat_cost for l >= 2
  std::int64_t min_value = 0;
  std::int64_t max_value = 10;
};

// "cost_free", "equal_share" or "count_table:<C>".
GeneratorConfig::Cost parse_generator_cost(std::string_view text, Rational* flat_cost);

// Uniform integer in [lo, hi] by rejection sampling on raw mt19937_64
// output (std distributions are not portable across standard libraries).
std::int64_t bounded_draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

// Valuations drawn row by row, agent-major. Throws PreconditionError for
// bad sizes or bounds.
Instance generate(const GeneratorConfig& config);

// Cost model the config describes, for an instance with m goods and bound k.
CostModel generator_cost_model(const GeneratorConfig& config);

// ---------------------------------------------------------------------------
// JSON

// Throws ParseError with the field path (or byte offset for syntax errors).
Instance parse_instance(std::string_view text);
// Canonical form: counts instead of default names, integers as numbers,
// other rationals as "p/q" strings, two-space indentation.
std::string serialize(const Instance& instance);

CCInstance parse_cc_instance(std::string_view text);
std::string serialize(const CCInstance& cc);

// Reads a file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace sharefair

#endif  // SHAREFAIR_INSTANCES_HPP_
