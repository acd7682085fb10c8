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

#include "sharefair/bagfill.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sharefair/error.hpp"

namespace sharefair {

Rational guarantee_factor(int k, const Rational& max_cost) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (max_cost < 0 || max_cost > 1) throw PreconditionError("C must lie in [0, 1]");
  Rational a = (Rational(1) - max_cost) * (k - 1);
  return a < 1 ? a : Rational(1);
}

int ShareMultiset::total() const { return std::accumulate(multiplicity.begin(), multiplicity.end(), 0); }

std::vector<int> ShareMultiset::support() const {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(multiplicity.size()); ++g) {
    if (multiplicity[g] > 0) out.push_back(g);
  }
  return out;
}

namespace {

Rational bag_value_for(const BagTrace& t, int agent, const std::vector<int>& goods) {
  Rational s = 0;
  for (int g : goods) s += t.share_value[agent][g];
  return s;
}

std::vector<Rational> bag_values(const BagTrace& t, const std::vector<int>& agents, const std::vector<int>& goods) {
  std::vector<Rational> out(static_cast<std::size_t>(t.agents), Rational(0));
  for (int i : agents) out[i] = bag_value_for(t, i, goods);
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void erase_value(std::vector<int>& v, int x) { v.erase(std::find(v.begin(), v.end(), x)); }

// `exempt` is the all-zero fallback agent, if any.
void check_lemma1(const BagTrace& t, const std::vector<int>& agents, const ShareMultiset& xi, int exempt) {
  const int n = static_cast<int>(agents.size());
  for (int i : agents) {
    if (i == exempt) continue;
    Rational s = 0;
    for (int g = 0; g < t.goods; ++g) s += xi.multiplicity[g] * t.share_value[i][g];
    if (s < n) {
      throw InvariantViolation("Lemma 1 fails for agent " + std::to_string(i) + ": remaining value " +
                               to_fraction_string(s) + " < " + std::to_string(n));
    }
  }
  for (int g = 0; g < t.goods; ++g) {
    if (xi.multiplicity[g] > n) {
      throw InvariantViolation("multiplicity of good " + std::to_string(g) + " is " +
                               std::to_string(xi.multiplicity[g]) + " > " + std::to_string(n) + " remaining agents");
    }
  }
}

}  // namespace

BagFillResult shared_bag_filling(const Instance& instance, const BagFillOptions& options) {
  const int n = instance.agent_count();
  const int m = instance.good_count();
  const int k = instance.k();

  BagTrace t;
  t.agents = n;
  t.goods = m;
  t.k = k;
  t.share_value.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));

  std::vector<int> agents(static_cast<std::size_t>(n));
  std::iota(agents.begin(), agents.end(), 0);
  std::vector<int> goods(static_cast<std::size_t>(m));
  std::iota(goods.begin(), goods.end(), 0);

  auto remaining_value = [&](int i) {
    Rational s = 0;
    for (int g : goods) s += instance.value(i, g);
    return s;
  };

  // Phase 1: singletons worth at least a proportional share of what is left.
  while (agents.size() >= 2) {
    bool assigned = false;
    for (int i : agents) {
      const Rational total = remaining_value(i);
      const int count = static_cast<int>(agents.size());
      int pick = -1;
      for (int g : goods) {
        if (instance.value(i, g) * count < total) continue;
        if (pick < 0 || instance.value(i, g) > instance.value(i, pick)) pick = g;
      }
      if (pick < 0) continue;
      t.phase1.push_back({i, pick, total, count});
      erase_value(agents, i);
      erase_value(goods, pick);
      assigned = true;
      break;
    }
    if (!assigned) break;
  }

  // Agents that value nothing left get empty bundles.
  std::vector<int> zero;
  for (int i : agents) {
    if (remaining_value(i) == 0) zero.push_back(i);
  }
  int fallback = -1;
  if (zero.size() == agents.size() && !agents.empty() && !goods.empty()) {
    // Nobody values the rest; it still has to go somewhere.
    fallback = zero.front();
    zero.erase(zero.begin());
  }
  for (int i : zero) erase_value(agents, i);
  t.zero_value_agents = zero;
  t.phase2_agents = agents;

  ShareMultiset xi;
  xi.multiplicity.assign(static_cast<std::size_t>(m), 0);
  if (!agents.empty()) {
    const int na = static_cast<int>(agents.size());
    t.copies = std::min(k, na);
    for (int g : goods) xi.multiplicity[g] = t.copies;
    for (int i : agents) {
      const Rational total = remaining_value(i);
      if (total == 0) continue;  // only the all-zero fallback agent
      for (int g : goods) t.share_value[i][g] = instance.value(i, g) * na / (total * t.copies);
    }
  }

  const Rational threshold = t.copies > 0 ? Rational(t.copies - 1, t.copies) : Rational(0);
  while (agents.size() >= 2) {
    check_lemma1(t, agents, xi, fallback);
    const int na = static_cast<int>(agents.size());
    BagRound r;
    r.agents_before = agents;
    r.multiplicity_before = xi.multiplicity;
    std::vector<int> bag;
    for (int g = 0; g < m; ++g) {
      if (xi.multiplicity[g] == na) {
        r.mandatory.push_back(g);
        bag.push_back(g);
      }
    }
    auto qualifier = [&]() {
      for (int i : agents) {
        if (bag_value_for(t, i, bag) >= threshold) return i;
      }
      return -1;
    };
    int who = qualifier();
    while (who < 0) {
      int filler = -1;
      for (int g = 0; g < m; ++g) {
        if (xi.multiplicity[g] > 0 && !contains(bag, g)) {
          filler = g;
          break;
        }
      }
      if (filler < 0) throw InvariantViolation("bag filling is stuck: no share left to add and no agent accepts");
      r.filler.push_back(filler);
      bag.push_back(filler);
      who = qualifier();
    }
    r.recipient = who;
    r.bag_value = bag_values(t, agents, bag);
    for (int g : bag) --xi.multiplicity[g];
    erase_value(agents, who);
    t.rounds.push_back(std::move(r));
    for (int g = 0; g < m; ++g) {
      if (xi.multiplicity[g] > static_cast<int>(agents.size())) {
        throw InvariantViolation("multiplicity invariant broken after a bag for good " + std::to_string(g));
      }
    }
  }
  if (agents.size() == 1) {
    if (t.copies > 0) check_lemma1(t, agents, xi, fallback);
    BagRound r;
    r.agents_before = agents;
    r.multiplicity_before = xi.multiplicity;
    r.mandatory = xi.support();
    r.recipient = agents.front();
    r.final_round = true;
    r.bag_value = bag_values(t, agents, r.mandatory);
    for (int g : r.mandatory) --xi.multiplicity[g];
    t.rounds.push_back(std::move(r));
  }
  if (!xi.empty()) throw InvariantViolation("shares left over after the final bag");

  BagFillResult out;
  out.allocation = replay(t);
  if (!validate(instance, out.allocation).empty()) throw InvariantViolation("bag filling produced an invalid allocation");
  out.max_cost = instance.max_cost();
  out.alpha = guarantee_factor(k, out.max_cost);
  const auto u = utilities(instance, out.allocation);
  std::vector<std::optional<Rational>> thr(static_cast<std::size_t>(n));
  if (options.with_oracle) {
    auto mms = mms_values(instance, n, options.budget);
    for (int i = 0; i < n; ++i) thr[i] = out.alpha * mms[i].value;
  }
  out.report = make_report(u, thr, to_fraction_string(out.alpha) + " * MMS^" + std::to_string(n));
  out.trace = std::move(t);
  return out;
}

KSharingAllocation replay(const BagTrace& t) {
  KSharingAllocation a(t.agents, t.goods);
  auto agent_ok = [&](int i) { return i >= 0 && i < t.agents; };
  auto good_ok = [&](int g) { return g >= 0 && g < t.goods; };
  for (const auto& e : t.phase1) {
    if (!agent_ok(e.agent) || !good_ok(e.good)) throw DimensionError("trace entry out of range");
    a.add_sharer(e.good, e.agent);
  }
  for (const auto& r : t.rounds) {
    if (!agent_ok(r.recipient)) throw DimensionError("trace recipient out of range");
    for (const auto* part : {&r.mandatory, &r.filler}) {
      for (int g : *part) {
        if (!good_ok(g)) throw DimensionError("trace good out of range");
        if (a.holds(r.recipient, g)) throw InvariantViolation("agent receives two shares of one good");
        a.add_sharer(g, r.recipient);
      }
    }
  }
  return a;
}

bool never_stuck_check(const BagTrace& t) {
  if (t.agents < 0 || t.goods < 0 || static_cast<int>(t.share_value.size()) != t.agents) {
    throw DimensionError("malformed trace: share table shape");
  }
  for (const auto& row : t.share_value) {
    if (static_cast<int>(row.size()) != t.goods) throw DimensionError("malformed trace: share table shape");
  }
  for (int i : t.phase2_agents) {
    if (i < 0 || i >= t.agents) throw DimensionError("malformed trace: agent out of range");
  }

  // Rebuild the starting multiset from Phase 1.
  std::vector<int> xi(static_cast<std::size_t>(t.goods), t.copies);
  for (const auto& e : t.phase1) {
    if (e.good < 0 || e.good >= t.goods) throw DimensionError("malformed trace: good out of range");
    xi[e.good] = 0;
  }
  if (t.phase2_agents.empty()) return t.rounds.empty();
  if (t.copies < 1) return false;

  const Rational threshold(t.copies - 1, t.copies);
  std::vector<int> agents = t.phase2_agents;
  for (std::size_t idx = 0; idx < t.rounds.size(); ++idx) {
    const auto& r = t.rounds[idx];
    if (r.agents_before != agents || r.multiplicity_before != xi) return false;
    const bool last = idx + 1 == t.rounds.size();
    if (r.final_round != last || r.final_round != (agents.size() == 1)) return false;
    if (!contains(agents, r.recipient)) return false;
    const int na = static_cast<int>(agents.size());

    std::vector<int> bag;
    for (int g : r.mandatory) {
      if (g < 0 || g >= t.goods) throw DimensionError("malformed trace: good out of range");
      if (xi[g] == 0 || contains(bag, g)) return false;
      if (!r.final_round && xi[g] != na) return false;
      bag.push_back(g);
    }
    if (!r.final_round) {
      for (int g = 0; g < t.goods; ++g) {
        if (xi[g] == na && !contains(bag, g)) return false;
      }
    }
    for (std::size_t f = 0; f < r.filler.size(); ++f) {
      const int g = r.filler[f];
      if (g < 0 || g >= t.goods) throw DimensionError("malformed trace: good out of range");
      // A filler is only added while nobody accepts the bag.
      for (int i : agents) {
        if (bag_value_for(t, i, bag) >= threshold) return false;
      }
      if (xi[g] == 0 || contains(bag, g)) return false;
      bag.push_back(g);
    }
    if (r.final_round) {
      for (int g = 0; g < t.goods; ++g) {
        if (xi[g] != (contains(bag, g) ? 1 : 0)) return false;
      }
    } else {
      if (bag_value_for(t, r.recipient, bag) < threshold) return false;
      for (int i : agents) {
        if (i < r.recipient && bag_value_for(t, i, bag) >= threshold) return false;
      }
    }
    if (static_cast<int>(r.bag_value.size()) != t.agents) throw DimensionError("malformed trace: bag values");
    for (int i : agents) {
      if (r.bag_value[i] != bag_value_for(t, i, bag)) return false;
    }
    for (int g : bag) --xi[g];
    erase_value(agents, r.recipient);
  }
  if (!agents.empty()) return false;
  return std::all_of(xi.begin(), xi.end(), [](int x) { return x == 0; });
}

}  // namespace sharefair
