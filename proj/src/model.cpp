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

#include "sharefair/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sharefair {

// ---------------------------------------------------------------------------
// CostModel

CostModel CostModel::cost_free() { return CostModel(); }

CostModel CostModel::equal_share() {
  CostModel c;
  c.kind_ = Kind::kEqualShare;
  return c;
}

CostModel CostModel::count_table(std::vector<std::vector<Rational>> table) {
  CostModel c;
  c.kind_ = Kind::kCountTable;
  c.good_table_ = std::move(table);
  return c;
}

CostModel CostModel::agent_count_table(std::vector<std::vector<std::vector<Rational>>> table) {
  CostModel c;
  c.kind_ = Kind::kAgentCountTable;
  c.agent_table_ = std::move(table);
  return c;
}

CostModel CostModel::set_dependent(SetCostFn fn, Rational max_cost) {
  if (!fn) throw PreconditionError("set-dependent cost model needs a callback");
  if (max_cost < 0 || max_cost > 1) throw PreconditionError("declared max cost must lie in [0,1]");
  CostModel c;
  c.kind_ = Kind::kSetDependent;
  c.set_fn_ = std::move(fn);
  c.set_max_ = std::move(max_cost);
  return c;
}

bool CostModel::goods_based() const {
  return kind_ == Kind::kCostFree || kind_ == Kind::kEqualShare || kind_ == Kind::kCountTable;
}

Rational CostModel::cost(int agent, int good, int count) const {
  if (count <= 1) return 0;
  switch (kind_) {
    case Kind::kCostFree:
      return 0;
    case Kind::kEqualShare:
      return Rational(1) - Rational(1, count);
    case Kind::kCountTable: {
      const auto& row = good_table_.at(static_cast<std::size_t>(good));
      if (count > static_cast<int>(row.size())) {
        throw PreconditionError("cost table for good " + std::to_string(good) + " has no entry for " +
                                std::to_string(count) + " sharers");
      }
      return row[static_cast<std::size_t>(count - 1)];
    }
    case Kind::kAgentCountTable: {
      const auto& row = agent_table_.at(static_cast<std::size_t>(agent)).at(static_cast<std::size_t>(good));
      if (count > static_cast<int>(row.size())) {
        throw PreconditionError("cost table for agent " + std::to_string(agent) + ", good " +
                                std::to_string(good) + " has no entry for " + std::to_string(count) +
                                " sharers");
      }
      return row[static_cast<std::size_t>(count - 1)];
    }
    case Kind::kSetDependent:
      break;
  }
  throw Unsupported("set-dependent cost model cannot be evaluated from a sharer count");
}

Rational CostModel::cost(int agent, int good, std::span<const int> sharers) const {
  if (kind_ != Kind::kSetDependent) return cost(agent, good, static_cast<int>(sharers.size()));
  if (sharers.size() <= 1) return 0;
  Rational c = set_fn_(agent, good, sharers);
  if (c < 0 || c > 1) throw PreconditionError("set-dependent cost outside [0,1]");
  return c;
}

namespace {

void check_row(std::span<const Rational> row, int k, const std::string& where) {
  if (static_cast<int>(row.size()) < k) {
    throw PreconditionError(where + ": needs entries for 1.." + std::to_string(k) + " sharers, got " +
                            std::to_string(row.size()));
  }
  if (!row.empty() && row[0] != 0) {
    throw PreconditionError(where + ": c(1) must be 0 (singletons are never charged)");
  }
  for (std::size_t l = 0; l < row.size(); ++l) {
    if (row[l] < 0 || row[l] > 1) {
      throw PreconditionError(where + ": c(" + std::to_string(l + 1) + ") = " + to_fraction_string(row[l]) +
                              " outside [0,1]");
    }
  }
}

}  // namespace

void CostModel::check(int agents, int goods, int k) const {
  if (kind_ == Kind::kCountTable) {
    if (static_cast<int>(good_table_.size()) != goods) {
      throw DimensionError("cost table has " + std::to_string(good_table_.size()) + " goods, instance has " +
                           std::to_string(goods));
    }
    for (int g = 0; g < goods; ++g) check_row(good_table_[g], k, "cost table, good " + std::to_string(g));
  } else if (kind_ == Kind::kAgentCountTable) {
    if (static_cast<int>(agent_table_.size()) != agents) {
      throw DimensionError("agent cost table has " + std::to_string(agent_table_.size()) + " agents, instance has " +
                           std::to_string(agents));
    }
    for (int i = 0; i < agents; ++i) {
      if (static_cast<int>(agent_table_[i].size()) != goods) {
        throw DimensionError("agent cost table row " + std::to_string(i) + " has wrong good count");
      }
      for (int g = 0; g < goods; ++g) {
        check_row(agent_table_[i][g], k, "cost table, agent " + std::to_string(i) + ", good " + std::to_string(g));
      }
    }
  }
}

bool CostModel::generous(int agents, int goods, int k) const {
  switch (kind_) {
    case Kind::kCostFree:
    case Kind::kEqualShare:
      return true;
    case Kind::kSetDependent:
      return false;
    default:
      break;
  }
  const int agent_rows = kind_ == Kind::kAgentCountTable ? agents : 1;
  for (int i = 0; i < agent_rows; ++i) {
    for (int g = 0; g < goods; ++g) {
      Rational previous = 0;
      for (int l = 1; l <= k; ++l) {
        Rational c = cost(i, g, l);
        if (c > Rational(1) - Rational(1, l) || c < previous) return false;
        previous = c;
      }
    }
  }
  return true;
}

Rational CostModel::max_cost(int agents, int goods, int k) const {
  switch (kind_) {
    case Kind::kCostFree:
      return 0;
    case Kind::kEqualShare:
      return Rational(1) - Rational(1, k);
    case Kind::kSetDependent:
      return set_max_;
    default:
      break;
  }
  Rational best = 0;
  const int agent_rows = kind_ == Kind::kAgentCountTable ? agents : 1;
  for (int i = 0; i < agent_rows; ++i) {
    for (int g = 0; g < goods; ++g) {
      for (int l = 1; l <= k; ++l) best = std::max(best, cost(i, g, l));
    }
  }
  return best;
}

std::string CostModel::name() const {
  switch (kind_) {
    case Kind::kCostFree:
      return "cost_free";
    case Kind::kEqualShare:
      return "equal_share";
    case Kind::kCountTable:
      return "count_table";
    case Kind::kAgentCountTable:
      return "agent_count_table";
    case Kind::kSetDependent:
      return "set_dependent";
  }
  return "unknown";
}

bool operator==(const CostModel& a, const CostModel& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == CostModel::Kind::kSetDependent) return false;
  return a.good_table_ == b.good_table_ && a.agent_table_ == b.agent_table_;
}

// ---------------------------------------------------------------------------
// Instance

std::string default_agent_name(int agent) { return "a" + std::to_string(agent + 1); }
std::string default_good_name(int good) { return "g" + std::to_string(good + 1); }

Instance::Instance(std::vector<std::vector<Rational>> valuations, int k, CostModel cost,
                   std::vector<std::string> agent_names, std::vector<std::string> good_names)
    : k_(k), cost_(std::move(cost)) {
  agents_ = static_cast<int>(valuations.size());
  if (agents_ < 1) throw PreconditionError("an instance needs at least one agent");
  goods_ = static_cast<int>(valuations.front().size());
  if (goods_ < 1) throw PreconditionError("an instance needs at least one good");
  values_.reserve(static_cast<std::size_t>(agents_) * goods_);
  for (int i = 0; i < agents_; ++i) {
    if (static_cast<int>(valuations[i].size()) != goods_) {
      throw DimensionError("valuation row " + std::to_string(i) + " has " + std::to_string(valuations[i].size()) +
                           " entries, expected " + std::to_string(goods_));
    }
    for (int g = 0; g < goods_; ++g) {
      if (valuations[i][g] < 0) {
        throw PreconditionError("negative valuation v[" + std::to_string(i) + "][" + std::to_string(g) + "]");
      }
      values_.push_back(std::move(valuations[i][g]));
    }
  }
  if (k_ < 1 || k_ > agents_) {
    throw PreconditionError("sharing bound k = " + std::to_string(k_) + " must satisfy 1 <= k <= n = " +
                            std::to_string(agents_));
  }
  cost_.check(agents_, goods_, k_);

  if (agent_names.empty()) {
    for (int i = 0; i < agents_; ++i) agent_names.push_back(default_agent_name(i));
  }
  if (good_names.empty()) {
    for (int g = 0; g < goods_; ++g) good_names.push_back(default_good_name(g));
  }
  if (static_cast<int>(agent_names.size()) != agents_ || static_cast<int>(good_names.size()) != goods_) {
    throw DimensionError("name lists do not match the valuation matrix");
  }
  agent_names_ = std::move(agent_names);
  good_names_ = std::move(good_names);
}

std::vector<std::vector<Rational>> Instance::valuations() const {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(agents_));
  for (int i = 0; i < agents_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

Rational Instance::total_value(int agent) const {
  Rational sum = 0;
  for (const auto& v : row(agent)) sum += v;
  return sum;
}

Rational Instance::bundle_value(int agent, std::span<const int> goods) const {
  Rational sum = 0;
  for (int g : goods) sum += value(agent, g);
  return sum;
}

bool Instance::identical_valuations() const {
  for (int i = 1; i < agents_; ++i) {
    if (!std::equal(row(i).begin(), row(i).end(), row(0).begin())) return false;
  }
  return true;
}

bool Instance::has_default_names() const {
  for (int i = 0; i < agents_; ++i) {
    if (agent_names_[i] != default_agent_name(i)) return false;
  }
  for (int g = 0; g < goods_; ++g) {
    if (good_names_[g] != default_good_name(g)) return false;
  }
  return true;
}

Instance Instance::with_cost_model(CostModel cost) const {
  return Instance(valuations(), k_, std::move(cost), agent_names_, good_names_);
}

Instance Instance::with_k(int k) const { return Instance(valuations(), k, cost_, agent_names_, good_names_); }

Instance Instance::with_scaled_agent(int agent, const Rational& factor) const {
  if (factor <= 0) throw PreconditionError("scale factor must be positive");
  auto v = valuations();
  for (auto& x : v.at(static_cast<std::size_t>(agent))) x *= factor;
  return Instance(std::move(v), k_, cost_, agent_names_, good_names_);
}

Instance Instance::without(int agent, int good) const {
  if (agents_ < 2 || goods_ < 2) throw PreconditionError("cannot drop the last agent or good");
  std::vector<std::vector<Rational>> v;
  std::vector<std::string> an;
  std::vector<std::string> gn;
  for (int i = 0; i < agents_; ++i) {
    if (i == agent) continue;
    an.push_back(agent_names_[i]);
    auto& r = v.emplace_back();
    for (int g = 0; g < goods_; ++g) {
      if (g != good) r.push_back(value(i, g));
    }
  }
  for (int g = 0; g < goods_; ++g) {
    if (g != good) gn.push_back(good_names_[g]);
  }
  CostModel cost = cost_;
  if (cost_.kind() == CostModel::Kind::kCountTable) {
    auto t = cost_.good_table();
    t.erase(t.begin() + good);
    cost = CostModel::count_table(std::move(t));
  } else if (cost_.kind() == CostModel::Kind::kAgentCountTable) {
    auto t = cost_.agent_table();
    t.erase(t.begin() + agent);
    for (auto& r : t) r.erase(r.begin() + good);
    cost = CostModel::agent_count_table(std::move(t));
  }
  return Instance(std::move(v), std::min(k_, agents_ - 1), std::move(cost), std::move(an), std::move(gn));
}

Instance Instance::restricted_to_agents(std::span<const int> agents) const {
  std::vector<std::vector<Rational>> v;
  std::vector<std::string> an;
  for (int i : agents) {
    v.emplace_back(row(i).begin(), row(i).end());
    an.push_back(agent_names_.at(static_cast<std::size_t>(i)));
  }
  CostModel cost = cost_;
  if (cost_.kind() == CostModel::Kind::kAgentCountTable) {
    std::vector<std::vector<std::vector<Rational>>> t;
    for (int i : agents) t.push_back(cost_.agent_table()[i]);
    cost = CostModel::agent_count_table(std::move(t));
  }
  const int n = static_cast<int>(agents.size());
  return Instance(std::move(v), std::min(k_, n), std::move(cost), std::move(an), good_names_);
}

bool operator==(const Instance& a, const Instance& b) {
  return a.agents_ == b.agents_ && a.goods_ == b.goods_ && a.k_ == b.k_ && a.values_ == b.values_ &&
         a.cost_ == b.cost_ && a.agent_names_ == b.agent_names_ && a.good_names_ == b.good_names_;
}

// ---------------------------------------------------------------------------
// KSharingAllocation

KSharingAllocation::KSharingAllocation(int agents, int goods)
    : agents_(agents), sharers_(static_cast<std::size_t>(goods)) {
  if (agents < 0 || goods < 0) throw DimensionError("negative allocation dimensions");
}

KSharingAllocation KSharingAllocation::from_sharers(int agents, std::vector<std::vector<int>> sharers) {
  KSharingAllocation a(agents, static_cast<int>(sharers.size()));
  for (std::size_t g = 0; g < sharers.size(); ++g) a.set_sharers(static_cast<int>(g), std::move(sharers[g]));
  return a;
}

KSharingAllocation KSharingAllocation::from_bundles(int goods, const std::vector<std::vector<int>>& bundles) {
  KSharingAllocation a(static_cast<int>(bundles.size()), goods);
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    for (int g : bundles[i]) a.add_sharer(g, static_cast<int>(i));
  }
  return a;
}

KSharingAllocation KSharingAllocation::from_owners(int agents, std::span<const int> owner) {
  KSharingAllocation a(agents, static_cast<int>(owner.size()));
  for (std::size_t g = 0; g < owner.size(); ++g) a.add_sharer(static_cast<int>(g), owner[g]);
  return a;
}

bool KSharingAllocation::holds(int agent, int good) const {
  const auto& s = sharers(good);
  return std::binary_search(s.begin(), s.end(), agent);
}

void KSharingAllocation::add_sharer(int good, int agent) {
  if (good < 0 || good >= good_count()) throw DimensionError("good index " + std::to_string(good) + " out of range");
  if (agent < 0 || agent >= agents_) throw DimensionError("agent index " + std::to_string(agent) + " out of range");
  auto& s = sharers_[static_cast<std::size_t>(good)];
  auto it = std::lower_bound(s.begin(), s.end(), agent);
  if (it != s.end() && *it == agent) {
    throw DimensionError("agent " + std::to_string(agent) + " already holds good " + std::to_string(good));
  }
  s.insert(it, agent);
}

void KSharingAllocation::remove_sharer(int good, int agent) {
  auto& s = sharers_.at(static_cast<std::size_t>(good));
  auto it = std::lower_bound(s.begin(), s.end(), agent);
  if (it == s.end() || *it != agent) {
    throw DimensionError("agent " + std::to_string(agent) + " does not hold good " + std::to_string(good));
  }
  s.erase(it);
}

void KSharingAllocation::set_sharers(int good, std::vector<int> agents) {
  if (good < 0 || good >= good_count()) throw DimensionError("good index " + std::to_string(good) + " out of range");
  std::sort(agents.begin(), agents.end());
  if (std::adjacent_find(agents.begin(), agents.end()) != agents.end()) {
    throw DimensionError("duplicate sharer for good " + std::to_string(good));
  }
  for (int a : agents) {
    if (a < 0 || a >= agents_) throw DimensionError("agent index " + std::to_string(a) + " out of range");
  }
  sharers_[static_cast<std::size_t>(good)] = std::move(agents);
}

std::vector<int> KSharingAllocation::bundle(int agent) const {
  std::vector<int> out;
  for (int g = 0; g < good_count(); ++g) {
    if (holds(agent, g)) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<int>> KSharingAllocation::bundles() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(agents_));
  for (int g = 0; g < good_count(); ++g) {
    for (int a : sharers(g)) out[static_cast<std::size_t>(a)].push_back(g);
  }
  return out;
}

bool KSharingAllocation::fully_shared(int k) const {
  return std::all_of(sharers_.begin(), sharers_.end(),
                     [k](const auto& s) { return static_cast<int>(s.size()) == k; });
}

int KSharingAllocation::max_sharer_count() const {
  int best = 0;
  for (const auto& s : sharers_) best = std::max(best, static_cast<int>(s.size()));
  return best;
}

KSharingAllocation KSharingAllocation::swapped(int a, int b) const {
  KSharingAllocation out = *this;
  if (a == b) return out;
  for (auto& s : out.sharers_) {
    for (int& x : s) {
      if (x == a) {
        x = b;
      } else if (x == b) {
        x = a;
      }
    }
    std::sort(s.begin(), s.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation and utilities

std::string Violation::describe() const {
  std::ostringstream os;
  if (kind == Kind::kUnassigned) {
    os << "good " << good << " is not assigned to any agent";
  } else {
    os << "good " << good << " is shared by " << count << " > " << limit << " agents";
  }
  return os.str();
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid allocation:";
  for (const auto& v : violations) out += " " + v.describe() + ";";
  return out;
}

void require_valid(const Instance& instance, const KSharingAllocation& alloc) {
  auto violations = validate(instance, alloc);
  if (!violations.empty()) throw InvalidAllocation(std::move(violations));
}

Rational discounted(const Instance& instance, int evaluator, int good, std::span<const int> sharers) {
  return (Rational(1) - instance.cost_model().cost(evaluator, good, sharers)) * instance.value(evaluator, good);
}

}  // namespace

InvalidAllocation::InvalidAllocation(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const Instance& instance, const KSharingAllocation& alloc) {
  if (alloc.agent_count() != instance.agent_count() || alloc.good_count() != instance.good_count()) {
    throw DimensionError("allocation is " + std::to_string(alloc.agent_count()) + " agents x " +
                         std::to_string(alloc.good_count()) + " goods, instance is " +
                         std::to_string(instance.agent_count()) + " x " + std::to_string(instance.good_count()));
  }
  std::vector<Violation> out;
  for (int g = 0; g < alloc.good_count(); ++g) {
    const int count = alloc.sharer_count(g);
    if (count == 0) {
      out.push_back({Violation::Kind::kUnassigned, g, 0, instance.k()});
    } else if (count > instance.k()) {
      out.push_back({Violation::Kind::kOverShared, g, count, instance.k()});
    }
  }
  return out;
}

Rational utility(const Instance& instance, const KSharingAllocation& alloc, int agent) {
  require_valid(instance, alloc);
  Rational sum = 0;
  for (int g = 0; g < alloc.good_count(); ++g) {
    if (alloc.holds(agent, g)) sum += discounted(instance, agent, g, alloc.sharers(g));
  }
  return sum;
}

std::vector<Rational> utilities(const Instance& instance, const KSharingAllocation& alloc) {
  std::vector<Rational> out;
  for (int i = 0; i < instance.agent_count(); ++i) out.push_back(utility(instance, alloc, i));
  return out;
}

Rational swap_utility(const Instance& instance, const KSharingAllocation& alloc, int agent, int other) {
  require_valid(instance, alloc);
  const KSharingAllocation swapped = alloc.swapped(agent, other);
  Rational sum = 0;
  for (int g = 0; g < swapped.good_count(); ++g) {
    if (swapped.holds(agent, g)) sum += discounted(instance, agent, g, swapped.sharers(g));
  }
  return sum;
}

Rational min_swap_utility(const Instance& instance, const KSharingAllocation& alloc, int agent) {
  Rational best = swap_utility(instance, alloc, agent, 0);
  for (int j = 1; j < instance.agent_count(); ++j) best = std::min(best, swap_utility(instance, alloc, agent, j));
  return best;
}

Rational max_cost(const Instance& instance) { return instance.max_cost(); }

FairnessReport make_report(std::span<const Rational> utilities,
                           std::span<const std::optional<Rational>> thresholds, std::string label) {
  if (utilities.size() != thresholds.size()) throw DimensionError("report needs one threshold slot per agent");
  FairnessReport report;
  report.threshold_label = std::move(label);
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    AgentFairness a;
    a.utility = utilities[i];
    a.threshold = thresholds[i];
    if (a.threshold) {
      Ratio r;
      if (*a.threshold == 0) {
        r.infinite = true;
      } else {
        r.value = a.utility / *a.threshold;
      }
      a.ratio = r;
      a.satisfied = a.utility >= *a.threshold;
      if (!report.min_ratio || r < *report.min_ratio) report.min_ratio = r;
      report.satisfied = report.satisfied && a.satisfied;
    }
    report.agents.push_back(std::move(a));
  }
  return report;
}

}  // namespace sharefair
