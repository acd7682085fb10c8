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

#include "sharefair/instances.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sharefair/error.hpp"

namespace sharefair {

using nlohmann::json;

namespace {

std::vector<std::vector<Rational>> to_rational(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long long x : r) row.push_back(make_rational(x));
    out.push_back(std::move(row));
  }
  return out;
}

// 1-based bundles -> allocation.
KSharingAllocation bundles1(int goods, const std::vector<std::vector<int>>& bundles) {
  std::vector<std::vector<int>> zero;
  for (const auto& b : bundles) {
    std::vector<int> z;
    for (int g : b) z.push_back(g - 1);
    zero.push_back(std::move(z));
  }
  return KSharingAllocation::from_bundles(goods, zero);
}

std::vector<Rational> ints(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (long long x : xs) out.push_back(make_rational(x));
  return out;
}

constexpr long long kT[12] = {17, 25, 12, 1, 2, 22, 3, 28, 11, 0, 21, 23};

std::vector<std::vector<long long>> grid(long long s_scale, const long long (&e)[3][12]) {
  std::vector<std::vector<long long>> v(3, std::vector<long long>(12));
  for (int i = 0; i < 3; ++i) {
    for (int g = 0; g < 12; ++g) v[i][g] = s_scale + 1000 * kT[g] + e[i][g];
  }
  return v;
}

CatalogEntry feige9() {
  const std::vector<std::vector<long long>> v = {
      {1, 16, 23, 26, 4, 10, 12, 19, 9},
      {1, 16, 22, 26, 4, 9, 13, 20, 9},
      {1, 15, 23, 25, 4, 10, 13, 20, 9},
  };
  CatalogEntry e{"feige9", "n=3, m=9 instance with no 1-sharing MMS allocation; goods row-major over 3x3 matrices",
                 Instance(to_rational(v), 2, CostModel::equal_share()), ints({120, 120, 120}), {}};
  e.allocations.push_back({"equal-share SMMS", bundles1(9, {{1, 2, 3}, {4, 5, 8}, {6, 7, 8, 9}}),
                           CostModel::equal_share(), ints({40, 40, 42}), "published"});
  e.allocations.push_back({"cost-free SMMS", bundles1(9, {{1, 2, 3, 4, 5, 6}, {2, 3, 7, 8, 9}, {4, 5, 6, 7, 8, 9}}),
                           CostModel::cost_free(), ints({80, 80, 81}), "published"});
  return e;
}

CatalogEntry kurokawa12() {
  const long long e[3][12] = {
      {3, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {3, -1, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0},
      {3, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, -1},
  };
  CatalogEntry c{"kurokawa12", "n=3, m=12 instance with no 1-sharing MMS allocation; v = 10^6 S + 10^3 T + E^i",
                 Instance(to_rational(grid(1'000'000, e)), 2, CostModel::equal_share()),
                 ints({12'165'000, 12'165'000, 12'165'000}), {}};
  c.allocations.push_back({"equal-share SMMS", bundles1(12, {{1, 2, 3, 5, 10}, {4, 7, 8, 12}, {5, 6, 9, 10, 11}}),
                           CostModel::equal_share(), ints({4'055'001, 4'055'000, 4'055'000}), "published"});
  // Agent 2's value is 8,110,002 by direct summation (E^2 contributes 3 - 1).
  c.allocations.push_back({"cost-free SMMS",
                           bundles1(12, {{1, 2, 3, 5, 7, 8, 10, 12}, {1, 3, 4, 6, 7, 9, 11, 12}, {2, 4, 5, 6, 8, 9, 10, 11}}),
                           CostModel::cost_free(), ints({8'110'001, 8'110'002, 8'110'000}), "derived"});
  return c;
}

CatalogEntry theorem5() {
  const long long e[3][12] = {
      {-2, 1, 0, 1, 0, 0, 0, 0, -1, 0, 1, 0},
      {0, 0, -2, 0, 0, 1, 0, 0, 0, 1, 0, 0},
      {-1, -1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
  };
  CatalogEntry c{"theorem5", "n=3, m=12 cost-free 2-sharing instance with an MMS but no SMMS allocation; v = 10^7 S + 10^3 T + E^i",
                 Instance(to_rational(grid(10'000'000, e)), 2, CostModel::cost_free()),
                 ints({120'165'000, 120'165'000, 120'165'000}), {}};
  c.allocations.push_back({"row allocation (1-sharing MMS)",
                           bundles1(12, {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}}), CostModel::cost_free(),
                           ints({40'055'000, 40'055'001, 40'055'001}), "derived"});
  return c;
}

}  // namespace

std::vector<std::string> catalog_ids() { return {"feige9", "kurokawa12", "theorem5"}; }

bool is_catalog_id(std::string_view id) { return id == "feige9" || id == "kurokawa12" || id == "theorem5"; }

CatalogEntry catalog(std::string_view id) {
  if (id == "feige9") return feige9();
  if (id == "kurokawa12") return kurokawa12();
  if (id == "theorem5") return theorem5();
  throw PreconditionError("unknown catalog id '" + std::string(id) + "' (known: feige9, kurokawa12, theorem5)");
}

std::string fingerprint(const Instance& instance) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : serialize(instance)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// Generator

GeneratorConfig::Cost parse_generator_cost(std::string_view text, Rational* flat_cost) {
  if (text == "cost_free") return GeneratorConfig::Cost::kCostFree;
  if (text == "equal_share") return GeneratorConfig::Cost::kEqualShare;
  constexpr std::string_view prefix = "count_table:";
  if (text.substr(0, prefix.size()) == prefix) {
    Rational c = parse_rational(text.substr(prefix.size()));
    if (c < 0 || c > 1) throw ParseError("count_table cost must lie in [0, 1]");
    if (flat_cost != nullptr) *flat_cost = c;
    return GeneratorConfig::Cost::kFlatTable;
  }
  throw ParseError("unknown cost '" + std::string(text) + "' (cost_free, equal_share, count_table:<C>)");
}

std::int64_t bounded_draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw PreconditionError("empty draw range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(rng());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

CostModel generator_cost_model(const GeneratorConfig& config) {
  switch (config.cost) {
    case GeneratorConfig::Cost::kCostFree:
      return CostModel::cost_free();
    case GeneratorConfig::Cost::kEqualShare:
      return CostModel::equal_share();
    case GeneratorConfig::Cost::kFlatTable: {
      std::vector<Rational> row(static_cast<std::size_t>(config.k), config.flat_cost);
      row[0] = 0;
      return CostModel::count_table(std::vector<std::vector<Rational>>(static_cast<std::size_t>(config.goods), row));
    }
  }
  return CostModel::cost_free();
}

Instance generate(const GeneratorConfig& config) {
  if (config.agents < 1 || config.goods < 1) throw PreconditionError("generator needs n, m >= 1");
  if (config.k < 1 || config.k > config.agents) throw PreconditionError("generator needs 1 <= k <= n");
  if (config.min_value < 0 || config.min_value > config.max_value) {
    throw PreconditionError("generator needs 0 <= min <= max");
  }
  std::mt19937_64 rng(config.seed);
  std::vector<std::vector<Rational>> v(static_cast<std::size_t>(config.agents));
  for (auto& row : v) {
    for (int g = 0; g < config.goods; ++g) row.push_back(make_rational(bounded_draw(rng, config.min_value, config.max_value)));
  }
  return Instance(std::move(v), config.k, generator_cost_model(config));
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json rational_json(const Rational& r) {
  if (is_integer(r) && fits_int64(r.get_num())) return to_int64(r.get_num());
  return to_fraction_string(r);
}

Rational json_rational(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rational(BigInt(std::to_string(j.get<std::uint64_t>()), 10));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ": expected an integer or a rational string");
}

const json& field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(path + ": missing field '" + name + "'");
  return *it;
}

int json_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  const auto x = j.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) throw ParseError(path + ": out of range");
  return static_cast<int>(x);
}

// "agents": n or [names]
std::vector<std::string> names_field(const json& j, const std::string& path, std::string (*def)(int)) {
  std::vector<std::string> out;
  if (j.is_number_integer()) {
    const int n = json_int(j, path);
    if (n < 1) throw ParseError(path + ": must be positive");
    for (int i = 0; i < n; ++i) out.push_back(def(i));
    return out;
  }
  if (!j.is_array()) throw ParseError(path + ": expected a count or a list of names");
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(path + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  std::map<std::string, int> seen;
  for (const auto& s : out) {
    if (seen[s]++ > 0) throw ParseError(path + ": duplicate name '" + s + "'");
  }
  if (out.empty()) throw ParseError(path + ": must not be empty");
  return out;
}

std::vector<std::vector<Rational>> matrix_field(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(path + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError(rp + ": expected " + std::to_string(cols) + " entries");
    std::vector<Rational> row;
    for (std::size_t g = 0; g < cols; ++g) row.push_back(json_rational(j[i][g], rp + "[" + std::to_string(g) + "]"));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Rational> cost_row(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected a list c(1)..c(k)");
  std::vector<Rational> row;
  for (std::size_t l = 0; l < j.size(); ++l) row.push_back(json_rational(j[l], path + "[" + std::to_string(l) + "]"));
  return row;
}

CostModel cost_model_field(const json& j, const std::vector<std::string>& agents, const std::vector<std::string>& goods) {
  const std::string path = "cost_model";
  const std::string type = [&] {
    const json& t = field(j, "type", path);
    if (!t.is_string()) throw ParseError(path + ".type: expected a string");
    return t.get<std::string>();
  }();
  if (type == "cost_free") return CostModel::cost_free();
  if (type == "equal_share") return CostModel::equal_share();

  auto good_rows = [&](const json& node, const std::string& p) {
    std::optional<std::vector<Rational>> fallback;
    const json* defaults = nullptr;
    if (j.contains("default")) defaults = &j["default"];
    if (defaults != nullptr) fallback = cost_row(*defaults, path + ".default");
    if (!node.is_object()) throw ParseError(p + ": expected an object keyed by good name");
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (std::find(goods.begin(), goods.end(), it.key()) == goods.end()) {
        throw ParseError(p + ": unknown good '" + it.key() + "'");
      }
    }
    std::vector<std::vector<Rational>> table;
    for (const auto& g : goods) {
      auto it = node.find(g);
      if (it != node.end()) {
        table.push_back(cost_row(*it, p + "." + g));
      } else if (fallback) {
        table.push_back(*fallback);
      } else {
        throw ParseError(p + ": no costs for good '" + g + "' and no default");
      }
    }
    return table;
  };

  if (type == "count_table") {
    return CostModel::count_table(good_rows(field(j, "table", path), path + ".table"));
  }
  if (type == "agent_count_table") {
    const json& t = field(j, "table", path);
    if (!t.is_object()) throw ParseError(path + ".table: expected an object keyed by agent name");
    std::vector<std::vector<std::vector<Rational>>> table;
    for (const auto& a : agents) {
      auto it = t.find(a);
      if (it == t.end()) throw ParseError(path + ".table: no costs for agent '" + a + "'");
      table.push_back(good_rows(*it, path + ".table." + a));
    }
    return CostModel::agent_count_table(std::move(table));
  }
  throw ParseError(path + ".type: unknown cost model '" + type +
                   "' (cost_free, equal_share, count_table, agent_count_table)");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Byte offset -> line/column.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

json names_json(const std::vector<std::string>& names, bool use_count) {
  if (use_count) return names.size();
  return names;
}

json table_json(const std::vector<std::vector<Rational>>& table, const std::vector<std::string>& goods) {
  json t = json::object();
  for (std::size_t g = 0; g < goods.size(); ++g) {
    json row = json::array();
    for (const auto& c : table[g]) row.push_back(rational_json(c));
    t[goods[g]] = row;
  }
  return t;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top level: expected an object");
  auto agents = names_field(field(j, "agents", "top level"), "agents", &default_agent_name);
  auto goods = names_field(field(j, "goods", "top level"), "goods", &default_good_name);
  auto v = matrix_field(field(j, "valuations", "top level"), agents.size(), goods.size(), "valuations");
  const int k = json_int(field(j, "k", "top level"), "k");
  if (k < 1 || k > static_cast<int>(agents.size())) {
    throw ParseError("k: must satisfy 1 <= k <= n = " + std::to_string(agents.size()) + ", got " + std::to_string(k));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t g = 0; g < v[i].size(); ++g) {
      if (v[i][g] < 0) {
        throw ParseError("valuations[" + std::to_string(i) + "][" + std::to_string(g) + "]: must be non-negative");
      }
    }
  }
  CostModel cost = j.contains("cost_model") ? cost_model_field(j["cost_model"], agents, goods) : CostModel::cost_free();
  try {
    return Instance(std::move(v), k, std::move(cost), std::move(agents), std::move(goods));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("cost_model: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize(const Instance& instance) {
  const bool defaults = instance.has_default_names();
  json j;
  j["agents"] = names_json(instance.agent_names(), defaults);
  j["goods"] = names_json(instance.good_names(), defaults);
  json v = json::array();
  for (int i = 0; i < instance.agent_count(); ++i) {
    json row = json::array();
    for (const auto& x : instance.row(i)) row.push_back(rational_json(x));
    v.push_back(row);
  }
  j["valuations"] = v;
  j["k"] = instance.k();
  const CostModel& cm = instance.cost_model();
  json c;
  switch (cm.kind()) {
    case CostModel::Kind::kCostFree:
      c["type"] = "cost_free";
      break;
    case CostModel::Kind::kEqualShare:
      c["type"] = "equal_share";
      break;
    case CostModel::Kind::kCountTable:
      c["type"] = "count_table";
      c["table"] = table_json(cm.good_table(), instance.good_names());
      break;
    case CostModel::Kind::kAgentCountTable: {
      c["type"] = "agent_count_table";
      json t = json::object();
      for (int i = 0; i < instance.agent_count(); ++i) {
        t[instance.agent_names()[i]] = table_json(cm.agent_table()[i], instance.good_names());
      }
      c["table"] = t;
      break;
    }
    case CostModel::Kind::kSetDependent:
      throw Unsupported("set-dependent cost models cannot be serialized");
  }
  j["cost_model"] = c;
  return dump(j);
}

CCInstance parse_cc_instance(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top level: expected an object");
  CCInstance cc;
  cc.agent_names = names_field(field(j, "agents", "top level"), "agents", &default_agent_name);
  cc.agents = static_cast<int>(cc.agent_names.size());
  cc.item_names = names_field(field(j, "goods", "top level"), "goods", &default_good_name);
  cc.valuations = matrix_field(field(j, "valuations", "top level"), cc.agent_names.size(), cc.item_names.size(),
                               "valuations");
  const json& types = field(j, "types", "top level");
  const json& budgets = field(j, "budgets", "top level");
  if (!types.is_array()) throw ParseError("types: expected a list");
  if (!budgets.is_array() || budgets.size() != types.size()) throw ParseError("budgets: expected one entry per type");
  cc.item_type.assign(cc.item_names.size(), -1);
  for (std::size_t t = 0; t < types.size(); ++t) {
    const std::string p = "types[" + std::to_string(t) + "]";
    const json& name = field(types[t], "name", p);
    if (!name.is_string()) throw ParseError(p + ".name: expected a string");
    cc.type_names.push_back(name.get<std::string>());
    const json& items = field(types[t], "items", p);
    if (!items.is_array()) throw ParseError(p + ".items: expected a list");
    for (const auto& it : items) {
      if (!it.is_string()) throw ParseError(p + ".items: expected item names");
      auto pos = std::find(cc.item_names.begin(), cc.item_names.end(), it.get<std::string>());
      if (pos == cc.item_names.end()) throw ParseError(p + ".items: unknown item '" + it.get<std::string>() + "'");
      auto x = static_cast<std::size_t>(pos - cc.item_names.begin());
      if (cc.item_type[x] >= 0) throw ParseError(p + ".items: item '" + cc.item_names[x] + "' already has a type");
      cc.item_type[x] = static_cast<int>(t);
    }
    const int b = json_int(budgets[t], "budgets[" + std::to_string(t) + "]");
    if (b < 0) throw ParseError("budgets[" + std::to_string(t) + "]: must be non-negative");
    cc.budgets.push_back(b);
  }
  for (std::size_t x = 0; x < cc.item_type.size(); ++x) {
    if (cc.item_type[x] < 0) throw ParseError("types: item '" + cc.item_names[x] + "' has no type");
  }
  if (j.contains("source")) {
    const json& s = j["source"];
    cc.copies_per_type = json_int(field(s, "copies_per_type", "source"), "source.copies_per_type");
    const json& sg = field(s, "source_good", "source");
    const json& ci = field(s, "copy_index", "source");
    if (!sg.is_array() || !ci.is_array()) throw ParseError("source: expected lists");
    for (std::size_t t = 0; t < sg.size(); ++t) cc.source_good.push_back(json_int(sg[t], "source.source_good"));
    for (std::size_t x = 0; x < ci.size(); ++x) cc.copy_index.push_back(json_int(ci[x], "source.copy_index"));
  }
  try {
    cc.check();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return cc;
}

std::string serialize(const CCInstance& cc) {
  bool defaults = true;
  for (int i = 0; i < cc.agents; ++i) defaults = defaults && cc.agent_names[i] == default_agent_name(i);
  json j;
  j["agents"] = names_json(cc.agent_names, defaults);
  j["goods"] = cc.item_names;
  json v = json::array();
  for (const auto& r : cc.valuations) {
    json row = json::array();
    for (const auto& x : r) row.push_back(rational_json(x));
    v.push_back(row);
  }
  j["valuations"] = v;
  json types = json::array();
  auto members = cc.type_members();
  for (int t = 0; t < cc.type_count(); ++t) {
    json items = json::array();
    for (int x : members[t]) items.push_back(cc.item_names[x]);
    types.push_back({{"name", cc.type_names[t]}, {"items", items}});
  }
  j["types"] = types;
  j["budgets"] = cc.budgets;
  if (!cc.source_good.empty()) {
    j["source"] = {{"copies_per_type", cc.copies_per_type}, {"source_good", cc.source_good}, {"copy_index", cc.copy_index}};
  }
  return dump(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace sharefair
