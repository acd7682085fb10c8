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

#include "sharefair/reductions.hpp"

#include <algorithm>
#include <set>

#include "sharefair/error.hpp"

namespace sharefair {

// ---------------------------------------------------------------------------
// CCInstance

std::vector<std::vector<int>> CCInstance::type_members() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(type_count()));
  for (int x = 0; x < item_count(); ++x) out[static_cast<std::size_t>(item_type[x])].push_back(x);
  return out;
}

void CCInstance::check() const {
  if (agents < 1) throw PreconditionError("CC instance needs at least one agent");
  if (static_cast<int>(agent_names.size()) != agents) throw DimensionError("CC agent names do not match agent count");
  if (static_cast<int>(valuations.size()) != agents) throw DimensionError("CC valuation rows do not match agent count");
  if (item_names.size() != item_type.size()) throw DimensionError("CC item names do not match item types");
  if (type_names.size() != budgets.size()) throw DimensionError("CC type names do not match budgets");
  for (const auto& row : valuations) {
    if (row.size() != item_type.size()) throw DimensionError("CC valuation row has the wrong item count");
    for (const auto& v : row) {
      if (v < 0) throw PreconditionError("negative CC valuation");
    }
  }
  for (int t : item_type) {
    if (t < 0 || t >= type_count()) throw DimensionError("CC item type index out of range");
  }
  for (int b : budgets) {
    if (b < 0) throw PreconditionError("negative CC budget");
  }
  if (!source_good.empty() && static_cast<int>(source_good.size()) != type_count()) {
    throw DimensionError("CC source map does not match type count");
  }
  if (!copy_index.empty() && copy_index.size() != item_type.size()) {
    throw DimensionError("CC copy indices do not match item count");
  }
}

// ---------------------------------------------------------------------------
// Reduction

CCInstance to_cardinality_constrained(const Instance& instance) {
  if (!instance.cost_model().goods_based()) {
    throw Unsupported("the cardinality-constrained reduction needs a goods-based cost model, got " +
                      instance.cost_model().name());
  }
  const int n = instance.agent_count();
  const int m = instance.good_count();
  const int k = instance.k();
  CCInstance cc;
  cc.agents = n;
  cc.agent_names = instance.agent_names();
  cc.valuations.resize(static_cast<std::size_t>(n));
  cc.copies_per_type = k;
  for (int g = 0; g < m; ++g) {
    cc.type_names.push_back(instance.good_names()[g]);
    cc.budgets.push_back(1);
    cc.source_good.push_back(g);
    const Rational keep = Rational(1) - instance.cost_model().cost(0, g, k);
    for (int copy = 1; copy <= k; ++copy) {
      cc.item_names.push_back(instance.good_names()[g] + "^" + std::to_string(copy));
      cc.item_type.push_back(g);
      cc.copy_index.push_back(copy);
      for (int i = 0; i < n; ++i) cc.valuations[static_cast<std::size_t>(i)].push_back(keep * instance.value(i, g));
    }
  }
  return cc;
}

namespace {

// Type sizes equal, unit budgets, copy-uniform values. Returns k.
int require_sharing_preimage(const CCInstance& cc) {
  cc.check();
  auto members = cc.type_members();
  if (members.empty()) throw Unsupported("CC instance has no types");
  const int k = static_cast<int>(members.front().size());
  for (int t = 0; t < cc.type_count(); ++t) {
    if (cc.budgets[t] != 1) throw Unsupported("type " + cc.type_names[t] + " has a non-unit budget; no k-sharing preimage");
    if (static_cast<int>(members[t].size()) != k) {
      throw Unsupported("types have unequal sizes; no k-sharing preimage");
    }
    for (int i = 0; i < cc.agents; ++i) {
      for (int x : members[t]) {
        if (cc.valuations[i][x] != cc.valuations[i][members[t].front()]) {
          throw Unsupported("type " + cc.type_names[t] + " copies are valued differently; no k-sharing preimage");
        }
      }
    }
  }
  if (k < 1 || k > cc.agents) throw Unsupported("type size must lie in 1..n");
  return k;
}

}  // namespace

Instance from_cardinality_constrained(const CCInstance& cc, const CostModel& cost) {
  const int k = require_sharing_preimage(cc);
  if (!cost.goods_based()) throw Unsupported("reverse reduction needs a goods-based cost model");
  auto members = cc.type_members();
  const int m = cc.type_count();
  std::vector<std::vector<Rational>> v(static_cast<std::size_t>(cc.agents));
  for (int t = 0; t < m; ++t) {
    const Rational keep = Rational(1) - cost.cost(0, t, k);
    if (keep == 0) throw Unsupported("c(k) = 1 makes the source valuation undetermined");
    for (int i = 0; i < cc.agents; ++i) v[i].push_back(cc.valuations[i][members[t].front()] / keep);
  }
  return Instance(std::move(v), k, cost, cc.agent_names, cc.type_names);
}

void check_cc_allocation(const CCInstance& cc, const CCAllocation& alloc) {
  if (static_cast<int>(alloc.size()) != cc.item_count()) {
    throw DimensionError("CC allocation covers " + std::to_string(alloc.size()) + " items, instance has " +
                         std::to_string(cc.item_count()));
  }
  std::vector<int> count(static_cast<std::size_t>(cc.agents) * cc.type_count(), 0);
  for (int x = 0; x < cc.item_count(); ++x) {
    const int a = alloc[static_cast<std::size_t>(x)];
    if (a < 0 || a >= cc.agents) throw DimensionError("item " + cc.item_names[x] + " is not allocated to a valid agent");
    const int t = cc.item_type[x];
    if (++count[static_cast<std::size_t>(a) * cc.type_count() + t] > cc.budgets[t]) {
      throw PreconditionError("agent " + cc.agent_names[a] + " exceeds budget " + std::to_string(cc.budgets[t]) +
                              " of type " + cc.type_names[t]);
    }
  }
}

KSharingAllocation from_cc_allocation(const CCInstance& cc, const CCAllocation& alloc) {
  require_sharing_preimage(cc);
  check_cc_allocation(cc, alloc);
  KSharingAllocation out(cc.agents, cc.type_count());
  for (int x = 0; x < cc.item_count(); ++x) out.add_sharer(cc.item_type[x], alloc[static_cast<std::size_t>(x)]);
  return out;
}

CCAllocation to_cc_allocation(const CCInstance& cc, const KSharingAllocation& alloc) {
  const int k = require_sharing_preimage(cc);
  if (alloc.good_count() != cc.type_count() || alloc.agent_count() != cc.agents) {
    throw DimensionError("allocation does not match the CC instance");
  }
  if (!alloc.fully_shared(k)) throw PreconditionError("only fully-shared allocations have a CC image");
  auto members = cc.type_members();
  CCAllocation out(static_cast<std::size_t>(cc.item_count()), -1);
  for (int t = 0; t < cc.type_count(); ++t) {
    for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(members[t][j])] = alloc.sharers(t)[j];
  }
  return out;
}

std::vector<Rational> cc_utilities(const CCInstance& cc, const CCAllocation& alloc) {
  check_cc_allocation(cc, alloc);
  std::vector<Rational> out(static_cast<std::size_t>(cc.agents), Rational(0));
  for (int x = 0; x < cc.item_count(); ++x) {
    const int a = alloc[static_cast<std::size_t>(x)];
    out[static_cast<std::size_t>(a)] += cc.valuations[a][x];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact CMMS solver

CmmsSolver exact_cmms_solver(OracleBudget budget) {
  return [budget](const CCInstance& cc) {
    std::vector<Rational> cmms;
    for (auto& r : cmms_values(cc, budget)) cmms.push_back(r.value);

    std::optional<Rational> best;
    CCAllocation best_alloc;
    for (const auto& alloc : feasible_cc_allocations(cc, budget)) {
      auto u = cc_utilities(cc, alloc);
      std::optional<Rational> worst;
      for (int i = 0; i < cc.agents; ++i) {
        if (cmms[i] == 0) continue;
        Rational r = u[i] / cmms[i];
        if (!worst || r < *worst) worst = r;
      }
      const Rational score = worst.value_or(Rational(1));
      if (!best || score > *best) {
        best = score;
        best_alloc = alloc;
      }
    }
    CmmsSolution s;
    s.allocation = std::move(best_alloc);
    s.alpha = std::min(best.value_or(Rational(1)), Rational(1));
    return s;
  };
}

// ---------------------------------------------------------------------------
// Pipeline

SmmsApproximation smms_via_cmms(const Instance& instance, const CmmsSolver& solver, bool with_oracle,
                                const OracleBudget& budget) {
  CCInstance cc = to_cardinality_constrained(instance);
  CmmsSolution sol = solver(cc);
  SmmsApproximation out;
  out.allocation = from_cc_allocation(cc, sol.allocation);
  out.alpha = sol.alpha;
  out.max_cost = instance.max_cost();

  const auto u = utilities(instance, out.allocation);
  const int n = instance.agent_count();
  std::vector<std::optional<Rational>> smms_t(static_cast<std::size_t>(n));
  std::vector<std::optional<Rational>> mms_t(static_cast<std::size_t>(n));
  const Rational factor = out.alpha * (Rational(1) - out.max_cost);
  if (with_oracle) {
    auto smms = smms_values(instance, budget);
    auto mms = mms_values(instance, n, budget);
    for (int i = 0; i < n; ++i) {
      smms_t[i] = factor * smms[i].value;
      mms_t[i] = factor * instance.k() * mms[i].value;
    }
  }
  const std::string f = to_fraction_string(factor);
  out.smms = make_report(u, smms_t, f + " * SMMS");
  out.mms = make_report(u, mms_t, f + " * " + std::to_string(instance.k()) + " * MMS");
  return out;
}

// ---------------------------------------------------------------------------
// Constructive special cases

KSharingAllocation two_agent_smms(const Instance& instance) {
  if (instance.agent_count() != 2 || instance.k() != 2) {
    throw PreconditionError("two-agent SMMS construction needs n = 2 and k = 2");
  }
  if (!instance.cost_model().goods_based() || !instance.generous()) {
    throw PreconditionError("two-agent SMMS construction needs a generous goods-based cost model");
  }
  KSharingAllocation a(2, instance.good_count());
  for (int g = 0; g < instance.good_count(); ++g) a.set_sharers(g, {0, 1});
  return a;
}

KSharingAllocation identical_valuation_smms(const Instance& instance, const OracleBudget& budget) {
  if (!instance.identical_valuations()) throw PreconditionError("valuations are not identical across agents");
  if (!instance.cost_model().goods_based()) throw PreconditionError("identical-valuation SMMS needs goods-based costs");
  return smms_value(instance, 0, budget).witness;
}

}  // namespace sharefair
