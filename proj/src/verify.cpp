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

#include "sharefair/verify.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "sharefair/bagfill.hpp"
#include "sharefair/error.hpp"
#include "sharefair/pairing.hpp"
#include "sharefair/reductions.hpp"

namespace sharefair {

// ---------------------------------------------------------------------------
// Guarantee table

std::vector<int> table1_k_values() { return {2, 3, 4, 5, 6, 8, 10, 15, 20, 25}; }

std::vector<Rational> table1_cost_values() {
  std::vector<Rational> out;
  for (const char* c : {"0", "0.1", "0.2", "0.3", "0.5", "0.7", "0.8", "0.9", "0.99"}) out.push_back(parse_rational(c));
  return out;
}

std::vector<std::vector<std::string>> table1_cells() {
  std::vector<std::vector<std::string>> out;
  for (int k : table1_k_values()) {
    std::vector<std::string> row;
    for (const auto& c : table1_cost_values()) row.push_back(to_decimal_string(guarantee_factor(k, c)));
    out.push_back(std::move(row));
  }
  return out;
}

std::string table1_csv() {
  std::ostringstream os;
  os << "k";
  for (const auto& c : table1_cost_values()) os << ',' << to_decimal_string(c);
  os << '\n';
  const auto cells = table1_cells();
  const auto ks = table1_k_values();
  for (std::size_t r = 0; r < ks.size(); ++r) {
    os << ks[r];
    for (const auto& cell : cells[r]) os << ',' << cell;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Suites

namespace {

const char* cost_label(GeneratorConfig::Cost c) {
  switch (c) {
    case GeneratorConfig::Cost::kCostFree:
      return "cost_free";
    case GeneratorConfig::Cost::kEqualShare:
      return "equal_share";
    case GeneratorConfig::Cost::kFlatTable:
      return "count_table";
  }
  return "?";
}

SuiteInstance make_suite_instance(const GeneratorConfig& c) {
  std::ostringstream os;
  os << 'n' << c.agents << "-m" << c.goods << "-k" << c.k << '-' << cost_label(c.cost) << "-seed" << c.seed;
  return {os.str(), c, generate(c)};
}

}  // namespace

std::vector<SuiteInstance> bagfill_suite(int per_cell, std::uint64_t seed_base) {
  std::vector<SuiteInstance> out;
  std::uint64_t seed = seed_base;
  const GeneratorConfig::Cost costs[] = {GeneratorConfig::Cost::kCostFree, GeneratorConfig::Cost::kEqualShare,
                                         GeneratorConfig::Cost::kFlatTable};
  for (int n = 2; n <= 4; ++n) {
    for (int k = 2; k <= std::min(3, n); ++k) {
      for (int m = 3; m <= 7; ++m) {
        for (auto cost : costs) {
          for (int s = 0; s < per_cell; ++s) {
            GeneratorConfig c;
            c.seed = seed++;
            c.agents = n;
            c.goods = m;
            c.k = k;
            c.cost = cost;
            c.flat_cost = make_rational(3, 10);
            c.min_value = 0;
            c.max_value = 20;
            out.push_back(make_suite_instance(c));
          }
        }
      }
    }
  }
  return out;
}

std::vector<SuiteInstance> pairing_suite(int per_cell, std::uint64_t seed_base) {
  std::vector<SuiteInstance> out;
  std::uint64_t seed = seed_base;
  for (int n = 2; n <= 4; ++n) {
    for (int k = (n + 1) / 2; k <= n; ++k) {
      for (int m = 3; m <= 7; ++m) {
        for (int s = 0; s < per_cell; ++s) {
          GeneratorConfig c;
          c.seed = seed++;
          c.agents = n;
          c.goods = m;
          c.k = k;
          c.cost = GeneratorConfig::Cost::kEqualShare;
          c.min_value = 0;
          c.max_value = 20;
          out.push_back(make_suite_instance(c));
        }
      }
    }
  }
  return out;
}

std::vector<SuiteInstance> reduction_fixtures() {
  std::vector<SuiteInstance> out;
  std::uint64_t seed = 0xcc00;
  for (int m = 1; m <= 4; ++m) {
    for (auto cost : {GeneratorConfig::Cost::kCostFree, GeneratorConfig::Cost::kEqualShare,
                      GeneratorConfig::Cost::kFlatTable}) {
      for (int s = 0; s < 2; ++s) {
        GeneratorConfig c;
        c.seed = seed++;
        c.agents = 3;
        c.goods = m;
        c.k = 2;
        c.cost = cost;
        c.flat_cost = make_rational(1, 4);
        c.min_value = 0;
        c.max_value = 12;
        out.push_back(make_suite_instance(c));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<Rational>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ", ";
    s += to_decimal_string(xs[i], 0);
  }
  return s + ")";
}

// Collects the first few failure messages.
struct Violations {
  int count = 0;
  std::vector<std::string> samples;

  void add(const std::string& what) {
    ++count;
    if (samples.size() < 3) samples.push_back(what);
  }
  std::string summary() const {
    std::string s = std::to_string(count) + " violations";
    for (const auto& x : samples) s += "; " + x;
    return s;
  }
};

const char* const kPrintedTable1[10][9] = {
    {"1.0", "0.9", "0.8", "0.7", "0.5", "0.3", "0.2", "0.1", "0.01"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "0.6", "0.4", "0.2", "0.02"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "0.9", "0.6", "0.3", "0.03"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "0.8", "0.4", "0.04"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "0.5", "0.05"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "0.7", "0.07"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "0.9", "0.09"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "0.14"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "0.19"},
    {"1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "1.0", "0.24"},
};

CriterionResult check_table1(const VerifyOptions&) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const auto cells = table1_cells();
  int match = 0;
  int total = 0;
  Violations v;
  for (std::size_t row = 0; row < 10; ++row) {
    for (std::size_t col = 0; col < 9; ++col) {
      ++total;
      if (row < cells.size() && col < cells[row].size() && cells[row][col] == kPrintedTable1[row][col]) {
        ++match;
      } else {
        v.add("k=" + std::to_string(table1_k_values()[row]) + " col " + std::to_string(col) + " printed " +
              kPrintedTable1[row][col]);
      }
    }
  }
  table1_csv();
  r.seconds = since(t0);
  r.passed = match == 90 && total == 90 && r.seconds < 1.0;
  r.detail = std::to_string(match) + "/" + std::to_string(total) + " cells match";
  if (v.count > 0) r.detail += "; " + v.summary();
  return r;
}

CriterionResult check_feige_mms(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const Instance inst = catalog("feige9").instance;
  std::vector<Rational> mms;
  std::uint64_t partitions = 0;
  for (auto& x : mms_values(inst, 3, o.budget)) {
    mms.push_back(x.value);
    partitions = x.states_enumerated;
  }
  std::uint64_t nodes = 0;
  const Instance plain = inst.with_k(1).with_cost_model(CostModel::cost_free());
  auto w = find_allocation_meeting(plain, mms, AllocationSpace::kOneSharing, o.budget, &nodes);
  auto w2 = mms_allocation_exists(inst, o.budget);
  r.seconds = since(t0);
  r.passed = !w && !w2 && partitions <= 19683 && r.seconds < 10.0;
  r.detail = std::string(w || w2 ? "witness found" : "NONE") + "; MMS " + join(mms) + ", " +
             std::to_string(partitions) + " canonical 3-partitions per agent, " + std::to_string(nodes) +
             " search nodes";
  return r;
}

CriterionResult check_feige_smms(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const CatalogEntry e = catalog("feige9");
  std::vector<Rational> smms;
  for (auto& x : smms_values(e.instance, o.budget)) smms.push_back(x.value);
  const KnownAllocation* known = nullptr;
  for (const auto& a : e.allocations) {
    if (a.label == "equal-share SMMS") known = &a;
  }
  const auto u = utilities(e.instance, known->allocation);
  const bool smms_ok = smms == std::vector<Rational>(3, Rational(40));
  const bool u_ok = u == std::vector<Rational>{Rational(40), Rational(40), Rational(42)};
  r.seconds = since(t0);
  r.passed = smms_ok && u_ok;
  r.detail = "SMMS " + join(smms) + ", allocation utilities " + join(u);
  return r;
}

CriterionResult check_kurokawa(const VerifyOptions&) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const CatalogEntry e = catalog("kurokawa12");
  const KnownAllocation* known = nullptr;
  for (const auto& a : e.allocations) {
    if (a.label == "equal-share SMMS") known = &a;
  }
  const bool valid = validate(e.instance, known->allocation).empty();
  const auto u = utilities(e.instance, known->allocation);
  const std::vector<Rational> expect = {Rational(4055001), Rational(4055000), Rational(4055000)};
  bool bound = true;
  for (int i = 0; i < 3; ++i) bound = bound && u[i] >= e.instance.total_value(i) / 3;
  r.seconds = since(t0);
  r.passed = valid && u == expect && bound;
  r.detail = "utilities " + join(u) + ", bound v_i(M)/3 = " + to_decimal_string(e.instance.total_value(0) / 3, 0) +
             (bound ? " met" : " missed");
  return r;
}

CriterionResult check_theorem5(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const CatalogEntry e = catalog("theorem5");
  const Instance& inst = e.instance;
  const KSharingAllocation rows = e.allocations.front().allocation;
  const Instance one = inst.with_k(1);
  const bool rows_valid = validate(one, rows).empty();
  std::vector<Rational> mms;
  for (auto& x : mms_values(inst, 3, o.budget)) mms.push_back(x.value);
  std::vector<Rational> row_value;
  bool part_a = rows_valid;
  for (int i = 0; i < 3; ++i) {
    row_value.push_back(inst.bundle_value(i, rows.bundle(i)));
    part_a = part_a && row_value.back() >= mms[i];
  }
  const FullShareCertificate cert = certify_smms_by_full_share(inst, o.budget);
  const bool part_b = cert.premise_holds && !cert.witness;
  r.seconds = since(t0);
  r.passed = part_a && part_b && r.seconds < 300.0;
  std::ostringstream os;
  os << "(a) row values " << join(row_value) << " vs MMS " << join(mms) << (part_a ? " ok" : " FAIL") << "; (b) premise "
     << (cert.premise_holds ? "holds" : "fails") << " (top " << cert.goods_per_bundle - 1 << " goods "
     << join(cert.best_short_bundle) << " < fullSMMS " << join(cert.full_smms) << "), "
     << (cert.witness ? "SMMS allocation found" : "no SMMS allocation") << " after " << cert.search_nodes
     << " search nodes";
  r.detail = os.str();
  return r;
}

CriterionResult check_bagfill(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const auto suite = bagfill_suite(o.suite_per_cell);
  Violations v;
  std::optional<Ratio> worst;
  int rounds = 0;
  for (const auto& s : suite) {
    try {
      BagFillResult b = shared_bag_filling(s.instance, {true, o.budget});
      rounds += static_cast<int>(b.trace.rounds.size());
      if (!b.report.satisfied) v.add(s.label + ": below alpha * MMS");
      if (!never_stuck_check(b.trace)) v.add(s.label + ": trace audit failed");
      if (replay(b.trace) != b.allocation) v.add(s.label + ": replay mismatch");
      if (b.report.min_ratio && (!worst || *b.report.min_ratio < *worst)) worst = b.report.min_ratio;
    } catch (const InvariantViolation& e) {
      v.add(s.label + ": " + e.what());
    }
  }
  r.seconds = since(t0);
  r.passed = suite.size() >= 200 && v.count == 0;
  r.detail = std::to_string(suite.size()) + " instances, " + std::to_string(rounds) + " bag rounds, " + v.summary();
  if (worst && !worst->infinite) r.detail += ", min utility / MMS ratio " + to_rounded_string(worst->value, 4);
  return r;
}

CriterionResult check_pairing(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const auto suite = pairing_suite(o.suite_per_cell + 2);
  Violations v;
  int even = 0;
  int odd = 0;
  for (const auto& s : suite) {
    const int n = s.instance.agent_count();
    (n % 2 == 0 ? even : odd) += 1;
    PairingResult p = pairwise_mms_allocation(s.instance, {true, o.budget});
    if (p.mms_bundles != (n % 2 == 0 ? n : n + 1)) v.add(s.label + ": wrong MMS target");
    if (!p.report.satisfied) v.add(s.label + ": below MMS^" + std::to_string(p.mms_bundles));
    if (n % 2 == 0 && !p.allocation.fully_shared(n / 2)) v.add(s.label + ": not fully n/2-shared");
  }
  r.seconds = since(t0);
  r.passed = even >= 100 && odd > 0 && v.count == 0;
  r.detail = std::to_string(even) + " even-n and " + std::to_string(odd) + " odd-n instances, " + v.summary();
  return r;
}

CriterionResult check_reduction(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  Violations v;
  std::uint64_t allocations = 0;
  const auto fixtures = reduction_fixtures();
  for (const auto& s : fixtures) {
    const Instance& inst = s.instance;
    const CCInstance cc = to_cardinality_constrained(inst);
    const auto cmms = cmms_values(cc, o.budget);
    const auto full = full_smms_values(inst, o.budget);
    for (int i = 0; i < inst.agent_count(); ++i) {
      if (cmms[i].value != full[i].value) {
        v.add(s.label + ": CMMS " + to_fraction_string(cmms[i].value) + " != fullSMMS " +
              to_fraction_string(full[i].value) + " for agent " + std::to_string(i));
      }
    }
    std::map<KSharingAllocation, int> preimages;
    for (const auto& a : feasible_cc_allocations(cc, o.budget)) {
      ++allocations;
      const KSharingAllocation back = from_cc_allocation(cc, a);
      if (!validate(inst, back).empty() || !back.fully_shared(inst.k())) v.add(s.label + ": image not fully shared");
      if (utilities(inst, back) != cc_utilities(cc, a)) v.add(s.label + ": utilities differ");
      if (from_cc_allocation(cc, to_cc_allocation(cc, back)) != back) v.add(s.label + ": round trip differs");
      ++preimages[back];
    }
    // Image = every fully-shared allocation, each hit once per copy labelling.
    long long expect_images = 1;
    long long per_image = 1;
    for (int g = 0; g < inst.good_count(); ++g) {
      expect_images *= 3;  // C(3, 2)
      per_image *= 2;      // 2! copy orders
    }
    if (static_cast<long long>(preimages.size()) != expect_images) v.add(s.label + ": image size mismatch");
    for (const auto& [alloc, count] : preimages) {
      if (count != per_image) v.add(s.label + ": uneven preimage count");
    }
  }
  r.seconds = since(t0);
  r.passed = v.count == 0;
  r.detail = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(allocations) +
             " feasible CC allocations, " + v.summary();
  return r;
}

CriterionResult check_lemma2(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const auto suite = bagfill_suite(o.suite_per_cell);
  Violations v;
  int generous = 0;
  for (const auto& s : suite) {
    const Instance& inst = s.instance;
    const Rational keep = Rational(1) - inst.max_cost();
    const auto smms = smms_values(inst, o.budget);
    const auto full = full_smms_values(inst, o.budget);
    const auto mms = mms_values(inst, inst.agent_count(), o.budget);
    const auto smms_cf = smms_values(inst.with_cost_model(CostModel::cost_free()), o.budget);
    const bool gen = inst.generous();
    generous += gen ? 1 : 0;
    for (int i = 0; i < inst.agent_count(); ++i) {
      const std::string who = s.label + " agent " + std::to_string(i);
      if (full[i].value > smms[i].value) v.add(who + ": fullSMMS > SMMS");
      if (full[i].value < keep * smms[i].value) v.add(who + ": fullSMMS < (1-C) SMMS");
      if (full[i].value < keep * inst.k() * mms[i].value) v.add(who + ": fullSMMS < k(1-C) MMS");
      if (gen && smms_cf[i].value < smms[i].value) v.add(who + ": SMMS_cf < SMMS_c");
      if (gen && smms[i].value < keep * smms_cf[i].value) v.add(who + ": SMMS_c < (1-C) SMMS_cf");
    }
  }
  r.seconds = since(t0);
  r.passed = suite.size() >= 200 && generous == static_cast<int>(suite.size()) && v.count == 0;
  r.detail = std::to_string(suite.size()) + " instances (" + std::to_string(generous) + " generous), " + v.summary();
  return r;
}

CriterionResult check_monotonicity(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  const auto suite = bagfill_suite(o.suite_per_cell);
  Violations v;
  long long removals = 0;
  long long scalings = 0;
  const std::vector<Rational> factors = {make_rational(1, 3), make_rational(2), make_rational(7)};
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const auto& s = suite[idx];
    const Instance& inst = s.instance;
    const int n = inst.agent_count();
    const auto mms = mms_values(inst, n, o.budget);
    for (int g = 0; g < inst.good_count(); ++g) {
      for (int i = 0; i < n; ++i) {
        const int drop = i == n - 1 ? 0 : n - 1;
        const Instance smaller = inst.without(drop, g);
        const int ii = i > drop ? i - 1 : i;
        ++removals;
        if (mms_value(smaller, ii, n - 1, o.budget).value < mms[i].value) {
          v.add(s.label + ": removing good " + std::to_string(g) + " lowers agent " + std::to_string(i) + "'s MMS");
        }
      }
    }

    const int a = static_cast<int>(idx % static_cast<std::size_t>(n));
    const auto smms = smms_values(inst, o.budget);
    const auto full = full_smms_values(inst, o.budget);
    const BagFillResult bag = shared_bag_filling(inst, {false, o.budget});
    const Rational alpha = bag.alpha;
    std::vector<KSharingAllocation> witnesses = {bag.allocation};
    for (const auto& x : smms) witnesses.push_back(x.witness);

    auto status = [&](const Instance& in, const KSharingAllocation& w, const std::vector<Rational>& mms_t,
                      const std::vector<Rational>& smms_t) {
      std::vector<std::pair<bool, bool>> st;
      const auto u = utilities(in, w);
      for (int j = 0; j < n; ++j) st.emplace_back(u[j] >= alpha * mms_t[j], u[j] >= smms_t[j]);
      return st;
    };
    std::vector<Rational> mms_t;
    std::vector<Rational> smms_t;
    for (int j = 0; j < n; ++j) {
      mms_t.push_back(mms[j].value);
      smms_t.push_back(smms[j].value);
    }
    for (const auto& f : factors) {
      ++scalings;
      const Instance scaled = inst.with_scaled_agent(a, f);
      const Rational m2 = mms_value(scaled, a, n, o.budget).value;
      const Rational s2 = smms_value(scaled, a, o.budget).value;
      const Rational f2 = full_smms_value(scaled, a, o.budget).value;
      if (m2 != f * mms[a].value) v.add(s.label + ": MMS not scaled by " + to_fraction_string(f));
      if (s2 != f * smms[a].value) v.add(s.label + ": SMMS not scaled by " + to_fraction_string(f));
      if (f2 != f * full[a].value) v.add(s.label + ": fullSMMS not scaled by " + to_fraction_string(f));
      auto mms_s = mms_t;
      auto smms_s = smms_t;
      mms_s[a] = m2;
      smms_s[a] = s2;
      for (const auto& w : witnesses) {
        if (status(inst, w, mms_t, smms_t) != status(scaled, w, mms_s, smms_s)) {
          v.add(s.label + ": witness status changes under scaling by " + to_fraction_string(f));
        }
      }
    }
  }
  r.seconds = since(t0);
  r.passed = v.count == 0;
  r.detail = std::to_string(suite.size()) + " instances, " + std::to_string(removals) + " agent/good removals, " +
             std::to_string(scalings) + " scalings, " + v.summary();
  return r;
}

CriterionResult check_constructions(const VerifyOptions& o) {
  CriterionResult r;
  const auto t0 = Clock::now();
  Violations v;
  int two = 0;
  int identical = 0;
  std::uint64_t seed = 0x3a4b;
  const GeneratorConfig::Cost costs[] = {GeneratorConfig::Cost::kCostFree, GeneratorConfig::Cost::kEqualShare,
                                         GeneratorConfig::Cost::kFlatTable};
  for (int m = 1; m <= 5; ++m) {
    for (auto cost : costs) {
      for (int s = 0; s < 4; ++s) {
        GeneratorConfig c;
        c.seed = seed++;
        c.agents = 2;
        c.goods = m;
        c.k = 2;
        c.cost = cost;
        c.flat_cost = make_rational(2, 5);
        c.max_value = 15;
        const SuiteInstance si = make_suite_instance(c);
        if (!si.instance.generous()) continue;
        ++two;
        const auto u = utilities(si.instance, two_agent_smms(si.instance));
        const auto smms = smms_values(si.instance, o.budget);
        for (int i = 0; i < 2; ++i) {
          if (u[i] < smms[i].value) v.add(si.label + ": two-agent construction below SMMS");
        }
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int m = 1; m <= 5; ++m) {
        for (auto cost : costs) {
          GeneratorConfig c;
          c.seed = seed++;
          c.agents = 1;
          c.goods = m;
          c.k = 1;
          c.max_value = 15;
          const Instance base = generate(c);
          std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n), base.valuations().front());
          GeneratorConfig cc = c;
          cc.agents = n;
          cc.k = k;
          cc.cost = cost;
          cc.flat_cost = make_rational(3, 10);
          const Instance inst(rows, k, generator_cost_model(cc));
          ++identical;
          const auto u = utilities(inst, identical_valuation_smms(inst, o.budget));
          const auto smms = smms_values(inst, o.budget);
          for (int i = 0; i < n; ++i) {
            if (u[i] < smms[i].value) {
              v.add("identical n" + std::to_string(n) + "-m" + std::to_string(m) + "-k" + std::to_string(k) +
                    ": construction below SMMS");
            }
          }
        }
      }
    }
  }
  r.seconds = since(t0);
  r.passed = two > 0 && identical > 0 && v.count == 0;
  r.detail = std::to_string(two) + " two-agent and " + std::to_string(identical) + " identical-valuation instances, " +
             v.summary();
  return r;
}

}  // namespace

std::string criterion_title(int id) {
  switch (id) {
    case 1:
      return "Table 1 reproduction";
    case 2:
      return "Feige-9 MMS nonexistence";
    case 3:
      return "Feige-9 equal-share SMMS";
    case 4:
      return "Kurokawa-12 equal-share SMMS witness";
    case 5:
      return "Theorem-5 MMS but no SMMS";
    case 6:
      return "Bag-filling guarantee";
    case 7:
      return "Pairwise MMS construction";
    case 8:
      return "Reduction bijection";
    case 9:
      return "Lemma 2 and cost-comparison bounds";
    case 10:
      return "Monotonicity and scale invariance";
    case 11:
      return "Two-agent and identical-valuation SMMS";
    default:
      throw PreconditionError("criterion id must be 1.." + std::to_string(kCriterionCount));
  }
}

CriterionResult verify_criterion(int id, const VerifyOptions& options) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  static const Fn fns[] = {check_table1,   check_feige_mms, check_feige_smms,  check_kurokawa,
                           check_theorem5, check_bagfill,   check_pairing,     check_reduction,
                           check_lemma2,   check_monotonicity, check_constructions};
  const std::string title = criterion_title(id);
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = fns[id - 1](options);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
    r.seconds = since(t0);
  }
  r.id = id;
  r.title = title;
  if (options.progress) options.progress(r);
  return r;
}

std::vector<CriterionResult> verify_all(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(verify_criterion(id, options));
  return out;
}

}  // namespace sharefair
