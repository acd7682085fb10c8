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

#ifndef SHAREFAIR_CC_INSTANCE_HPP_
#define SHAREFAIR_CC_INSTANCE_HPP_

#include <string>
#include <vector>

#include "sharefair/rational.hpp"

namespace sharefair {

// Fair division instance under cardinality constraints: items are partitioned
// into types, and a feasible allocation is a 1-sharing partition of all
// items in which no agent holds more than budgets[t] items of type t.
struct CCInstance {
  int agents = 0;
  std::vector<std::string> agent_names;
  std::vector<std::string> item_names;
  // valuations[i][x] for agent i and item x.
  std::vector<std::vector<Rational>> valuations;
  std::vector<int> item_type;
  std::vector<std::string> type_names;
  std::vector<int> budgets;

  // Filled by the reduction from a k-sharing instance: type t stands for
  // source good source_good[t] and item x is copy copy_index[x] (1-based)
  // of it. Empty for instances that did not come from the reduction.
  int copies_per_type = 0;
  std::vector<int> source_good;
  std::vector<int> copy_index;

  int item_count() const { return static_cast<int>(item_type.size()); }
  int type_count() const { return static_cast<int>(budgets.size()); }
  std::vector<std::vector<int>> type_members() const;

  // Shape and range checks; throws DimensionError / PreconditionError.
  void check() const;

  friend bool operator==(const CCInstance&, const CCInstance&) = default;
};

// owner[x] = agent receiving item x.
using CCAllocation = std::vector<int>;

}  // namespace sharefair

#endif  // SHAREFAIR_CC_INSTANCE_HPP_
