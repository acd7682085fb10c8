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

#ifndef SHAREFAIR_MODEL_HPP_
#define SHAREFAIR_MODEL_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sharefair/error.hpp"
#include "sharefair/rational.hpp"

namespace sharefair {

// Sharing cost c_{i,g}(.) applied to an agent's value of a good it holds.
//
// The count-based variants are what the oracles, the reduction and the file
// format understand. `set_dependent` is an in-library hook for costs that
// depend on who the sharers are; only utility evaluation and bag filling
// accept it.
class CostModel {
 public:
  enum class Kind { kCostFree, kEqualShare, kCountTable, kAgentCountTable, kSetDependent };

  // (agent, good, sorted sharer set) -> cost in [0, 1].
  using SetCostFn = std::function<Rational(int, int, std::span<const int>)>;

  CostModel() = default;

  static CostModel cost_free();
  static CostModel equal_share();
  // table[g][l - 1] is c_g(l); every row must cover l = 1..k.
  static CostModel count_table(std::vector<std::vector<Rational>> table);
  // table[i][g][l - 1] is c_{i,g}(l).
  static CostModel agent_count_table(std::vector<std::vector<std::vector<Rational>>> table);
  // `max_cost` must bound every value the callback returns.
  static CostModel set_dependent(SetCostFn fn, Rational max_cost);

  Kind kind() const { return kind_; }
  bool goods_based() const;
  bool count_based() const { return kind_ != Kind::kSetDependent; }

  // c_{i,g}(count). Throws Unsupported for set-dependent models.
  Rational cost(int agent, int good, int count) const;
  // c_{i,g}(sharers). Works for every variant.
  Rational cost(int agent, int good, std::span<const int> sharers) const;

  // Checks table shapes against (n, m, k), entries in [0, 1] and c(1) = 0.
  // Throws PreconditionError naming the offending entry.
  void check(int agents, int goods, int k) const;

  // c(l) <= 1 - 1/l and non-decreasing in l, for l = 1..k, every agent/good.
  bool generous(int agents, int goods, int k) const;

  // max over agents, goods and l in 1..k of c_{i,g}(l).
  Rational max_cost(int agents, int goods, int k) const;

  const std::vector<std::vector<Rational>>& good_table() const { return good_table_; }
  const std::vector<std::vector<std::vector<Rational>>>& agent_table() const { return agent_table_; }

  std::string name() const;

  friend bool operator==(const CostModel& a, const CostModel& b);

 private:
  Kind kind_ = Kind::kCostFree;
  std::vector<std::vector<Rational>> good_table_;
  std::vector<std::vector<std::vector<Rational>>> agent_table_;
  SetCostFn set_fn_;
  Rational set_max_;
};

// (N, M, k, v, c): n agents, m goods, non-negative exact valuations, sharing
// bound 1 <= k <= n and a cost model. Immutable once built.
class Instance {
 public:
  // valuations[i][g]; throws DimensionError for ragged rows and
  // PreconditionError for negative values, bad k or a bad cost model.
  Instance(std::vector<std::vector<Rational>> valuations, int k, CostModel cost,
           std::vector<std::string> agent_names = {}, std::vector<std::string> good_names = {});

  int agent_count() const { return agents_; }
  int good_count() const { return goods_; }
  int k() const { return k_; }
  const CostModel& cost_model() const { return cost_; }

  const Rational& value(int agent, int good) const {
    return values_[static_cast<std::size_t>(agent) * goods_ + good];
  }
  std::span<const Rational> row(int agent) const {
    return {values_.data() + static_cast<std::size_t>(agent) * goods_, static_cast<std::size_t>(goods_)};
  }
  std::vector<std::vector<Rational>> valuations() const;

  Rational total_value(int agent) const;
  Rational bundle_value(int agent, std::span<const int> goods) const;

  // C = max_cost over l in 1..k.
  Rational max_cost() const { return cost_.max_cost(agents_, goods_, k_); }
  bool generous() const { return cost_.generous(agents_, goods_, k_); }
  bool identical_valuations() const;

  const std::vector<std::string>& agent_names() const { return agent_names_; }
  const std::vector<std::string>& good_names() const { return good_names_; }
  bool has_default_names() const;

  Instance with_cost_model(CostModel cost) const;
  Instance with_k(int k) const;
  // Multiplies one agent's valuations by r > 0.
  Instance with_scaled_agent(int agent, const Rational& factor) const;
  // Drops one agent and one good (the Phase-1 reduction).
  Instance without(int agent, int good) const;
  // Keeps only the listed agents, in order.
  Instance restricted_to_agents(std::span<const int> agents) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  int agents_ = 0;
  int goods_ = 0;
  int k_ = 1;
  std::vector<Rational> values_;
  CostModel cost_;
  std::vector<std::string> agent_names_;
  std::vector<std::string> good_names_;
};

std::string default_agent_name(int agent);
std::string default_good_name(int good);

// Good-major k-sharing allocation: one sorted sharer set per good. Bundles
// are derived. The sharing bound is not enforced here; see validate().
class KSharingAllocation {
 public:
  KSharingAllocation() = default;
  KSharingAllocation(int agents, int goods);

  // sharers[g] lists agents; duplicates or out-of-range agents throw
  // DimensionError.
  static KSharingAllocation from_sharers(int agents, std::vector<std::vector<int>> sharers);
  static KSharingAllocation from_bundles(int goods, const std::vector<std::vector<int>>& bundles);
  // 1-sharing allocation from owner[g].
  static KSharingAllocation from_owners(int agents, std::span<const int> owner);

  int agent_count() const { return agents_; }
  int good_count() const { return static_cast<int>(sharers_.size()); }

  const std::vector<int>& sharers(int good) const { return sharers_[static_cast<std::size_t>(good)]; }
  int sharer_count(int good) const { return static_cast<int>(sharers_[static_cast<std::size_t>(good)].size()); }
  bool holds(int agent, int good) const;

  void add_sharer(int good, int agent);
  void remove_sharer(int good, int agent);
  void set_sharers(int good, std::vector<int> agents);

  std::vector<int> bundle(int agent) const;
  std::vector<std::vector<int>> bundles() const;

  // Every good held by exactly k agents.
  bool fully_shared(int k) const;
  int max_sharer_count() const;

  // Same allocation with the bundles of agents a and b exchanged.
  KSharingAllocation swapped(int a, int b) const;

  friend bool operator==(const KSharingAllocation& a, const KSharingAllocation& b) = default;
  friend auto operator<=>(const KSharingAllocation& a, const KSharingAllocation& b) = default;

 private:
  int agents_ = 0;
  std::vector<std::vector<int>> sharers_;
};

struct Violation {
  enum class Kind { kUnassigned, kOverShared };
  Kind kind;
  int good;
  int count;
  int limit;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Thrown by utility evaluation on allocations that break Def. 3.
class InvalidAllocation : public Error {
 public:
  explicit InvalidAllocation(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Completeness and k-limited shareability, one entry per offending good.
// A dimension mismatch throws DimensionError instead.
std::vector<Violation> validate(const Instance& instance, const KSharingAllocation& alloc);

// u_i(A) = sum over g in A_i of (1 - c_{i,g}(N_g(A))) v_i(g).
Rational utility(const Instance& instance, const KSharingAllocation& alloc, int agent);
std::vector<Rational> utilities(const Instance& instance, const KSharingAllocation& alloc);

// u_i(B_{i<->j}), with B built by literally swapping the two bundles.
Rational swap_utility(const Instance& instance, const KSharingAllocation& alloc, int agent, int other);

// min_j u_i(B_{i<->j}).
Rational min_swap_utility(const Instance& instance, const KSharingAllocation& alloc, int agent);

// C for the instance's own k.
Rational max_cost(const Instance& instance);

// Ratio utility / threshold; `infinite` when the threshold is 0.
struct Ratio {
  bool infinite = false;
  Rational value;

  friend bool operator<(const Ratio& a, const Ratio& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
};

struct AgentFairness {
  Rational utility;
  std::optional<Rational> threshold;
  std::optional<Ratio> ratio;
  bool satisfied = true;
};

struct FairnessReport {
  std::vector<AgentFairness> agents;
  std::optional<Ratio> min_ratio;
  bool satisfied = true;
  // What the thresholds are, e.g. "1/2 * MMS^3".
  std::string threshold_label;
};

// Builds a report; agents whose threshold is nullopt carry no ratio and do
// not affect `satisfied`.
FairnessReport make_report(std::span<const Rational> utilities,
                           std::span<const std::optional<Rational>> thresholds, std::string label);

}  // namespace sharefair

#endif  // SHAREFAIR_MODEL_HPP_
