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

#include "sharefair/pairing.hpp"

#include "sharefair/error.hpp"

namespace sharefair {

std::string to_string(PairingGuarantee g) {
  switch (g) {
    case PairingGuarantee::kEqualShare:
      return "equal-share";
    case PairingGuarantee::kGenerous:
      return "generous (Observation 1)";
    case PairingGuarantee::kNone:
      return "none";
  }
  return "none";
}

PairingResult pairwise_mms_allocation(const Instance& instance, const PairingOptions& options) {
  const int n = instance.agent_count();
  const int m = instance.good_count();
  const int ell = (n + 1) / 2;
  if (instance.k() < ell) {
    throw PreconditionError("pairing needs k >= ceil(n/2) = " + std::to_string(ell) + ", got k = " +
                            std::to_string(instance.k()));
  }
  PairingResult out;
  out.sharing_degree = ell;
  out.used_dummy = n % 2 == 1;
  out.mms_bundles = out.used_dummy ? n + 1 : n;

  // Valuations only; the dummy is agent n.
  auto rows = instance.valuations();
  if (out.used_dummy) rows.emplace_back(static_cast<std::size_t>(m), Rational(0));
  const Instance work(rows, 1, CostModel::cost_free());

  KSharingAllocation alloc(n, m);
  std::vector<int> dummy_goods;
  for (int a = 0; a + 1 < static_cast<int>(rows.size()); a += 2) {
    const int b = a + 1;
    Bipartition p = two_agent_mms_partition(work, a, b, options.budget);
    for (int g : p.first) alloc.add_sharer(g, a);
    for (int g : p.second) {
      if (b < n) {
        alloc.add_sharer(g, b);
      } else {
        dummy_goods.push_back(g);
      }
    }
  }
  for (int g : dummy_goods) {
    int best = 0;
    for (int i = 1; i < n; ++i) {
      if (instance.value(i, g) > instance.value(best, g)) best = i;
    }
    if (!alloc.holds(best, g)) alloc.add_sharer(g, best);
  }
  if (!validate(instance, alloc).empty()) throw InvariantViolation("pairing produced an invalid allocation");

  const auto& cm = instance.cost_model();
  if (cm.kind() == CostModel::Kind::kEqualShare) {
    out.guarantee = PairingGuarantee::kEqualShare;
  } else if (instance.generous()) {
    out.guarantee = PairingGuarantee::kGenerous;
  }

  const auto u = utilities(instance, alloc);
  std::vector<std::optional<Rational>> thr(static_cast<std::size_t>(n));
  if (options.with_oracle && out.guarantee != PairingGuarantee::kNone) {
    auto mms = mms_values(instance, out.mms_bundles, options.budget);
    for (int i = 0; i < n; ++i) thr[i] = mms[i].value;
  }
  out.report = make_report(u, thr, "MMS^" + std::to_string(out.mms_bundles));
  out.allocation = std::move(alloc);
  return out;
}

bool bipartition_floor_check(const Instance& instance, int agent, int ell, const OracleBudget& budget) {
  if (ell <= 0) ell = (instance.agent_count() + 1) / 2;
  const Rational two = mms_value(instance, agent, 2, budget).value;
  const Rational many = mms_value(instance, agent, 2 * ell, budget).value;
  return two >= many * ell;
}

}  // namespace sharefair
