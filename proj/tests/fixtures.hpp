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

#ifndef SHAREFAIR_TESTS_FIXTURES_HPP_
#define SHAREFAIR_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <vector>

#include "sharefair/instances.hpp"
#include "sharefair/model.hpp"

namespace fx {

using sharefair::CostModel;
using sharefair::Instance;
using sharefair::Rational;

inline Rational q(long long num, long long den = 1) { return sharefair::make_rational(num, den); }

inline std::vector<Rational> qs(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (long long x : xs) out.push_back(q(x));
  return out;
}

inline Instance make(std::initializer_list<std::initializer_list<long long>> rows, int k, CostModel cost) {
  std::vector<std::vector<Rational>> v;
  for (auto r : rows) v.push_back(qs(r));
  return Instance(std::move(v), k, std::move(cost));
}

// Three agents, k = 2, equal-share, identical values (1, 2).
inline Instance example1() { return make({{1, 2}, {1, 2}, {1, 2}}, 2, CostModel::equal_share()); }

inline std::vector<Rational> uniform_row(int m, long long value) {
  return std::vector<Rational>(static_cast<std::size_t>(m), q(value));
}

// Flat count table: c(1) = 0, c(l) = c for l >= 2.
inline CostModel flat(int goods, int k, const Rational& c) {
  std::vector<Rational> row(static_cast<std::size_t>(k), c);
  row[0] = 0;
  return CostModel::count_table(std::vector<std::vector<Rational>>(static_cast<std::size_t>(goods), row));
}

inline Instance random_instance(std::uint64_t seed, int n, int m, int k,
                                sharefair::GeneratorConfig::Cost cost = sharefair::GeneratorConfig::Cost::kCostFree,
                                long long max_value = 12, Rational flat_cost = q(3, 10)) {
  sharefair::GeneratorConfig c;
  c.seed = seed;
  c.agents = n;
  c.goods = m;
  c.k = k;
  c.cost = cost;
  c.flat_cost = flat_cost;
  c.max_value = max_value;
  return sharefair::generate(c);
}

}  // namespace fx

#endif  // SHAREFAIR_TESTS_FIXTURES_HPP_
