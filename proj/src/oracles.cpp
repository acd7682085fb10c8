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

#include "sharefair/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>

#include "enumeration.hpp"

namespace sharefair {

using detail::ItemSpace;
using detail::Mask;
using detail::Weights;

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("SHAREFAIR_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) {
      throw ParseError(std::string("SHAREFAIR_BUDGET must be a positive integer, got \"") + env + "\"");
    }
    b.max_states = v;
  }
  return b;
}

namespace detail {

std::vector<Mask> subset_options(int agents, int min_size, int max_size) {
  std::vector<Mask> out;
  // Pre-order walk over increasing tuples yields sorted-tuple lex order.
  std::function<void(int, Mask, int)> walk = [&](int next, Mask m, int size) {
    for (int a = next; a < agents; ++a) {
      const Mask child = m | (Mask{1} << a);
      if (size + 1 >= min_size && size + 1 <= max_size) out.push_back(child);
      if (size + 1 < max_size) walk(a + 1, child, size + 1);
    }
  };
  walk(0, 0, 0);
  return out;
}

std::vector<int> mask_members(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace detail

namespace {

constexpr std::int64_t kIntCeiling = std::int64_t{1} << 61;

// Per-evaluator integer scale making every weight integral, when the scaled
// totals stay far from int64 overflow.
struct IntScaling {
  bool usable = false;
  std::vector<BigInt> scale;
};

IntScaling integer_scaling(const Weights<Rational>& w, const std::vector<Rational>* thresholds = nullptr) {
  IntScaling s;
  s.scale.assign(static_cast<std::size_t>(w.evaluators), BigInt(1));
  for (int e = 0; e < w.evaluators; ++e) {
    BigInt l = 1;
    Rational total = 0;
    for (int item = 0; item < w.items; ++item) {
      Rational row_max = 0;
      for (int size = 0; size <= w.max_size; ++size) {
        const Rational& x = w.at(e, item, size);
        l = lcm(l, x.get_den());
        row_max = std::max(row_max, Rational(abs(x)));
      }
      // Every bundle slot can hold each item once.
      total += row_max;
    }
    if (thresholds != nullptr) {
      l = lcm(l, (*thresholds)[static_cast<std::size_t>(e)].get_den());
      total = std::max(total, Rational(abs((*thresholds)[static_cast<std::size_t>(e)])));
    }
    Rational scaled = total * l;
    if (scaled > Rational(BigInt(std::to_string(kIntCeiling), 10))) return s;
    s.scale[static_cast<std::size_t>(e)] = l;
  }
  s.usable = true;
  return s;
}

Weights<std::int64_t> to_int_weights(const Weights<Rational>& w, const IntScaling& s) {
  Weights<std::int64_t> out(w.evaluators, w.items, w.max_size);
  for (int e = 0; e < w.evaluators; ++e) {
    for (int item = 0; item < w.items; ++item) {
      for (int size = 0; size <= w.max_size; ++size) {
        Rational x = w.at(e, item, size) * s.scale[static_cast<std::size_t>(e)];
        out.at(e, item, size) = to_int64(x.get_num());
      }
    }
  }
  return out;
}

struct MaximinValues {
  std::vector<Rational> best;
  std::vector<std::vector<int>> witness;
  std::uint64_t leaves = 0;
};

MaximinValues maximin(const ItemSpace& space, const Weights<Rational>& w, const OracleBudget& budget,
                      const std::string& what) {
  MaximinValues out;
  auto collect = [&](auto&& result, const std::vector<BigInt>& scale) {
    for (int e = 0; e < w.evaluators; ++e) {
      if (!result.found[e]) throw InfeasibleError(what + ": no allocation satisfies the constraints");
      out.best.push_back(Rational(result.best[e]) / Rational(scale[static_cast<std::size_t>(e)]));
      out.witness.push_back(std::move(result.witness[e]));
    }
    out.leaves = result.leaves;
  };
  const IntScaling s = integer_scaling(w);
  if (s.usable) {
    auto iw = to_int_weights(w, s);
    auto r = detail::run_maximin<std::int64_t>(space, iw, budget.max_states, budget.parallel_chunks, what);
    collect(r, s.scale);
  } else {
    auto r = detail::run_maximin<Rational>(space, w, budget.max_states, budget.parallel_chunks, what);
    collect(r, std::vector<BigInt>(static_cast<std::size_t>(w.evaluators), BigInt(1)));
  }
  return out;
}

struct SearchResult {
  std::optional<std::vector<int>> witness;
  std::uint64_t nodes = 0;
};

SearchResult search(const ItemSpace& space, const Weights<Rational>& w, const std::vector<Rational>& thresholds,
                    const OracleBudget& budget, const std::string& what) {
  SearchResult out;
  const IntScaling s = integer_scaling(w, &thresholds);
  if (s.usable) {
    auto iw = to_int_weights(w, s);
    std::vector<std::int64_t> t;
    for (int i = 0; i < w.evaluators; ++i) {
      // Utilities are integral after scaling, so the ceiling is exact.
      Rational x = thresholds[static_cast<std::size_t>(i)] * s.scale[static_cast<std::size_t>(i)];
      BigInt c;
      mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      t.push_back(to_int64(c));
    }
    auto r = detail::run_search<std::int64_t>(space, iw, t, budget.max_states, budget.parallel_chunks, what);
    out.witness = std::move(r.witness);
    out.nodes = r.nodes;
  } else {
    auto r = detail::run_search<Rational>(space, w, thresholds, budget.max_states, budget.parallel_chunks, what);
    out.witness = std::move(r.witness);
    out.nodes = r.nodes;
  }
  return out;
}

void require_count_based(const Instance& instance, const char* op) {
  if (!instance.cost_model().count_based()) {
    throw Unsupported(std::string(op) + " needs a count-based cost model");
  }
}

void require_agent(const Instance& instance, int agent) {
  if (agent < 0 || agent >= instance.agent_count()) {
    throw PreconditionError("agent index " + std::to_string(agent) + " out of range");
  }
}

// (1 - c_{e,g}(size)) v_e(g), evaluated with e's own cost entries.
Weights<Rational> sharing_weights(const Instance& instance) {
  const int n = instance.agent_count();
  const int m = instance.good_count();
  const int k = instance.k();
  Weights<Rational> w(n, m, k);
  for (int e = 0; e < n; ++e) {
    for (int g = 0; g < m; ++g) {
      for (int size = 1; size <= k; ++size) {
        w.at(e, g, size) = (Rational(1) - instance.cost_model().cost(e, g, size)) * instance.value(e, g);
      }
    }
  }
  return w;
}

KSharingAllocation allocation_from_choice(const ItemSpace& space, const std::vector<int>& choice) {
  KSharingAllocation a(space.agents, space.items);
  for (int item = 0; item < space.items; ++item) {
    a.set_sharers(item, detail::mask_members(space.options[static_cast<std::size_t>(choice[item])]));
  }
  return a;
}

ItemSpace sharing_space(const Instance& instance, int min_size, int max_size, bool symmetric) {
  ItemSpace space;
  space.agents = instance.agent_count();
  space.items = instance.good_count();
  space.options = detail::subset_options(space.agents, min_size, max_size);
  space.symmetric = symmetric;
  return space;
}

std::vector<OracleResult> package(const ItemSpace& space, MaximinValues&& values) {
  std::vector<OracleResult> out;
  for (std::size_t e = 0; e < values.best.size(); ++e) {
    OracleResult r;
    r.value = std::move(values.best[e]);
    r.witness = allocation_from_choice(space, values.witness[e]);
    r.states_enumerated = values.leaves;
    out.push_back(std::move(r));
  }
  return out;
}

Weights<Rational> single_evaluator(const Weights<Rational>& w, int e) {
  Weights<Rational> out(1, w.items, w.max_size);
  for (int item = 0; item < w.items; ++item) {
    for (int size = 0; size <= w.max_size; ++size) out.at(0, item, size) = w.at(e, item, size);
  }
  return out;
}

std::vector<OracleResult> smms_impl(const Instance& instance, std::optional<int> agent, bool full_share,
                                    const OracleBudget& budget, const char* what) {
  require_count_based(instance, what);
  if (agent) require_agent(instance, *agent);
  const bool cost_free = instance.cost_model().kind() == CostModel::Kind::kCostFree;
  if (budget.restrict_full_share && !cost_free && !full_share) {
    throw PreconditionError("restrict_full_share is only exact for cost-free models");
  }
  const int k = instance.k();
  const bool only_full = full_share || cost_free || budget.restrict_full_share;
  ItemSpace space = sharing_space(instance, only_full ? k : 1, k, /*symmetric=*/true);
  Weights<Rational> w = sharing_weights(instance);
  if (agent) w = single_evaluator(w, *agent);
  return package(space, maximin(space, w, budget, what));
}

}  // namespace

// ---------------------------------------------------------------------------
// MMS

namespace {

std::vector<OracleResult> mms_impl(const Instance& instance, std::optional<int> agent, int bundles,
                                   const OracleBudget& budget) {
  if (bundles < 1) throw PreconditionError("MMS needs at least one bundle");
  if (bundles > detail::kMaxAgents) throw Unsupported("MMS oracle handles at most 31 bundles");
  if (agent) require_agent(instance, *agent);
  ItemSpace space;
  space.agents = bundles;
  space.items = instance.good_count();
  space.options = detail::subset_options(bundles, 1, 1);
  space.symmetric = true;

  std::vector<int> evaluators;
  if (agent) {
    evaluators.push_back(*agent);
  } else {
    for (int i = 0; i < instance.agent_count(); ++i) evaluators.push_back(i);
  }
  Weights<Rational> w(static_cast<int>(evaluators.size()), instance.good_count(), 1);
  for (std::size_t e = 0; e < evaluators.size(); ++e) {
    for (int g = 0; g < instance.good_count(); ++g) w.at(static_cast<int>(e), g, 1) = instance.value(evaluators[e], g);
  }
  return package(space, maximin(space, w, budget, "MMS partition enumeration"));
}

}  // namespace

OracleResult mms_value(const Instance& instance, int agent, int bundles, const OracleBudget& budget) {
  return mms_impl(instance, agent, bundles, budget).front();
}

std::vector<OracleResult> mms_values(const Instance& instance, int bundles, const OracleBudget& budget) {
  return mms_impl(instance, std::nullopt, bundles, budget);
}

Rational evaluate_partition(const Instance& instance, int agent, const KSharingAllocation& partition) {
  if (partition.good_count() != instance.good_count()) throw DimensionError("partition covers a different good set");
  std::optional<Rational> worst;
  for (const auto& bundle : partition.bundles()) {
    Rational v = instance.bundle_value(agent, bundle);
    if (!worst || v < *worst) worst = v;
  }
  return worst.value_or(Rational(0));
}

std::optional<KSharingAllocation> find_allocation_meeting(const Instance& instance,
                                                          const std::vector<Rational>& thresholds,
                                                          AllocationSpace space_kind, const OracleBudget& budget,
                                                          std::uint64_t* nodes) {
  require_count_based(instance, "threshold search");
  if (static_cast<int>(thresholds.size()) != instance.agent_count()) {
    throw DimensionError("one threshold per agent required");
  }
  int lo = 1;
  int hi = instance.k();
  if (space_kind == AllocationSpace::kOneSharing) hi = 1;
  if (space_kind == AllocationSpace::kFullySharing) lo = hi;
  ItemSpace space = sharing_space(instance, lo, hi, /*symmetric=*/false);
  Weights<Rational> w = sharing_weights(instance);
  SearchResult r = search(space, w, thresholds, budget, "allocation search");
  if (nodes != nullptr) *nodes = r.nodes;
  if (!r.witness) return std::nullopt;
  return allocation_from_choice(space, *r.witness);
}

std::optional<KSharingAllocation> mms_allocation_exists(const Instance& instance, const OracleBudget& budget) {
  std::vector<Rational> thresholds;
  for (auto& r : mms_values(instance, instance.agent_count(), budget)) thresholds.push_back(r.value);
  // 1-sharing utilities are plain bundle values whatever the cost model.
  Instance plain = instance.with_k(1).with_cost_model(CostModel::cost_free());
  return find_allocation_meeting(plain, thresholds, AllocationSpace::kOneSharing, budget);
}

// ---------------------------------------------------------------------------
// SMMS

OracleResult smms_value(const Instance& instance, int agent, const OracleBudget& budget) {
  return smms_impl(instance, agent, false, budget, "SMMS enumeration").front();
}

std::vector<OracleResult> smms_values(const Instance& instance, const OracleBudget& budget) {
  return smms_impl(instance, std::nullopt, false, budget, "SMMS enumeration");
}

OracleResult full_smms_value(const Instance& instance, int agent, const OracleBudget& budget) {
  return smms_impl(instance, agent, true, budget, "full-share SMMS enumeration").front();
}

std::vector<OracleResult> full_smms_values(const Instance& instance, const OracleBudget& budget) {
  return smms_impl(instance, std::nullopt, true, budget, "full-share SMMS enumeration");
}

std::optional<KSharingAllocation> smms_allocation_exists(const Instance& instance, const OracleBudget& budget) {
  std::vector<Rational> thresholds;
  for (auto& r : smms_values(instance, budget)) thresholds.push_back(r.value);
  // Cost-free: extra sharers never hurt existing holders, so a satisfying
  // allocation exists iff a fully-shared one does.
  const bool cost_free = instance.cost_model().kind() == CostModel::Kind::kCostFree;
  return find_allocation_meeting(instance, thresholds,
                                 cost_free ? AllocationSpace::kFullySharing : AllocationSpace::kKSharing, budget);
}

FullShareCertificate certify_smms_by_full_share(const Instance& instance, const OracleBudget& budget) {
  if (instance.cost_model().kind() != CostModel::Kind::kCostFree) {
    throw PreconditionError("full-share certificate needs a cost-free model");
  }
  const int n = instance.agent_count();
  const int m = instance.good_count();
  const int k = instance.k();
  if ((k * m) % n != 0) throw PreconditionError("k*m must be divisible by n for equal full-share bundles");

  FullShareCertificate cert;
  cert.goods_per_bundle = k * m / n;
  auto full = full_smms_values(instance, budget);
  cert.states_enumerated = full.front().states_enumerated;
  cert.premise_holds = true;
  for (int i = 0; i < n; ++i) {
    cert.full_smms.push_back(full[static_cast<std::size_t>(i)].value);
    std::vector<Rational> row(instance.row(i).begin(), instance.row(i).end());
    std::sort(row.begin(), row.end(), std::greater<>());
    Rational top = 0;
    for (int x = 0; x < cert.goods_per_bundle - 1 && x < m; ++x) top += row[static_cast<std::size_t>(x)];
    cert.best_short_bundle.push_back(top);
    if (!(top < cert.full_smms.back())) cert.premise_holds = false;
  }
  if (cert.premise_holds) {
    cert.witness = find_allocation_meeting(instance, cert.full_smms, AllocationSpace::kFullySharing, budget,
                                           &cert.search_nodes);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// CMMS

namespace {

void require_covering(const CCInstance& cc) {
  cc.check();
  auto members = cc.type_members();
  for (int t = 0; t < cc.type_count(); ++t) {
    if (static_cast<long long>(members[t].size()) > static_cast<long long>(cc.budgets[t]) * cc.agents) {
      throw InfeasibleError("type " + cc.type_names[t] + " has " + std::to_string(members[t].size()) +
                            " items but budget " + std::to_string(cc.budgets[t]) + " x " + std::to_string(cc.agents) +
                            " agents cannot cover them");
    }
  }
}

ItemSpace cc_space(const CCInstance& cc, bool symmetric) {
  ItemSpace space;
  space.agents = cc.agents;
  space.items = cc.item_count();
  space.options = detail::subset_options(cc.agents, 1, 1);
  space.item_group = cc.item_type;
  space.group_cap = cc.budgets;
  space.symmetric = symmetric;
  return space;
}

std::vector<OracleResult> cmms_impl(const CCInstance& cc, std::optional<int> agent, const OracleBudget& budget) {
  require_covering(cc);
  if (agent && (*agent < 0 || *agent >= cc.agents)) throw PreconditionError("agent index out of range");
  ItemSpace space = cc_space(cc, true);
  std::vector<int> evaluators;
  if (agent) {
    evaluators.push_back(*agent);
  } else {
    for (int i = 0; i < cc.agents; ++i) evaluators.push_back(i);
  }
  Weights<Rational> w(static_cast<int>(evaluators.size()), cc.item_count(), 1);
  for (std::size_t e = 0; e < evaluators.size(); ++e) {
    for (int x = 0; x < cc.item_count(); ++x) {
      w.at(static_cast<int>(e), x, 1) = cc.valuations[static_cast<std::size_t>(evaluators[e])][static_cast<std::size_t>(x)];
    }
  }
  return package(space, maximin(space, w, budget, "CMMS enumeration"));
}

}  // namespace

OracleResult cmms_value(const CCInstance& cc, int agent, const OracleBudget& budget) {
  return cmms_impl(cc, agent, budget).front();
}

std::vector<OracleResult> cmms_values(const CCInstance& cc, const OracleBudget& budget) {
  return cmms_impl(cc, std::nullopt, budget);
}

std::vector<CCAllocation> feasible_cc_allocations(const CCInstance& cc, const OracleBudget& budget) {
  require_covering(cc);
  std::vector<CCAllocation> out;
  CCAllocation owner(static_cast<std::size_t>(cc.item_count()), -1);
  std::vector<int> count(static_cast<std::size_t>(cc.agents) * cc.type_count(), 0);
  std::function<void(int)> walk = [&](int x) {
    if (x == cc.item_count()) {
      if (out.size() >= budget.max_states) throw BudgetExceeded(budget.max_states, "feasible CC allocation listing");
      out.push_back(owner);
      return;
    }
    const int t = cc.item_type[static_cast<std::size_t>(x)];
    for (int a = 0; a < cc.agents; ++a) {
      auto& c = count[static_cast<std::size_t>(a) * cc.type_count() + t];
      if (c >= cc.budgets[t]) continue;
      ++c;
      owner[static_cast<std::size_t>(x)] = a;
      walk(x + 1);
      --c;
    }
  };
  walk(0);
  return out;
}

// ---------------------------------------------------------------------------
// Two-agent cut and choose

namespace {

template <class Scalar>
Bipartition cut_and_choose(const std::vector<Scalar>& vi, const std::vector<Scalar>& vj) {
  const int m = static_cast<int>(vi.size());
  Scalar total_i(0);
  Scalar total_j(0);
  for (int g = 0; g < m; ++g) {
    total_i += vi[g];
    total_j += vj[g];
  }
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  bool have = false;
  Scalar best_min(0);
  Scalar best_i(0);
  Scalar best_j(0);
  std::uint64_t best_bits = 0;
  bool best_chooser_takes_first = false;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    // Good 0 stays on side one; bit g-1 set moves good g to side two.
    Scalar second_i(0);
    Scalar second_j(0);
    for (int g = 1; g < m; ++g) {
      if ((bits >> (g - 1)) & 1U) {
        second_i += vi[g];
        second_j += vj[g];
      }
    }
    Scalar first_i = total_i - second_i;
    Scalar first_j = total_j - second_j;
    Scalar lo = std::min(first_i, second_i);
    const bool chooser_takes_first = first_j > second_j;
    Scalar got_i = chooser_takes_first ? second_i : first_i;
    Scalar got_j = chooser_takes_first ? first_j : second_j;
    bool better = !have || lo > best_min ||
                  (lo == best_min && (got_i > best_i || (got_i == best_i && got_j > best_j)));
    if (better) {
      have = true;
      best_min = lo;
      best_i = got_i;
      best_j = got_j;
      best_bits = bits;
      best_chooser_takes_first = chooser_takes_first;
    }
  }
  std::vector<int> first{0};
  std::vector<int> second;
  for (int g = 1; g < m; ++g) {
    if ((best_bits >> (g - 1)) & 1U) {
      second.push_back(g);
    } else {
      first.push_back(g);
    }
  }
  if (best_chooser_takes_first) std::swap(first, second);
  return {first, second};
}

}  // namespace

Bipartition two_agent_mms_partition(const Instance& instance, int cut_maker, int chooser,
                                    const OracleBudget& budget) {
  require_agent(instance, cut_maker);
  require_agent(instance, chooser);
  const int m = instance.good_count();
  if (m - 1 >= 63 || (std::uint64_t{1} << (m - 1)) > budget.max_states) {
    throw BudgetExceeded(budget.max_states, "two-agent bipartition enumeration over " + std::to_string(m) + " goods");
  }
  BigInt li = 1;
  BigInt lj = 1;
  Rational ti = 0;
  Rational tj = 0;
  for (int g = 0; g < m; ++g) {
    li = lcm(li, instance.value(cut_maker, g).get_den());
    lj = lcm(lj, instance.value(chooser, g).get_den());
  }
  ti = instance.total_value(cut_maker) * li;
  tj = instance.total_value(chooser) * lj;
  const Rational ceiling(BigInt(std::to_string(kIntCeiling), 10));
  if (ti <= ceiling && tj <= ceiling) {
    std::vector<std::int64_t> vi;
    std::vector<std::int64_t> vj;
    for (int g = 0; g < m; ++g) {
      vi.push_back(to_int64(Rational(instance.value(cut_maker, g) * li).get_num()));
      vj.push_back(to_int64(Rational(instance.value(chooser, g) * lj).get_num()));
    }
    return cut_and_choose(vi, vj);
  }
  std::vector<Rational> vi(instance.row(cut_maker).begin(), instance.row(cut_maker).end());
  std::vector<Rational> vj(instance.row(chooser).begin(), instance.row(chooser).end());
  return cut_and_choose(vi, vj);
}

}  // namespace sharefair
