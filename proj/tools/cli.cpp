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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sharefair/bagfill.hpp"
#include "sharefair/error.hpp"
#include "sharefair/instances.hpp"
#include "sharefair/oracles.hpp"
#include "sharefair/pairing.hpp"
#include "sharefair/reductions.hpp"
#include "sharefair/verify.hpp"

namespace sharefair::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

struct Context {
  std::ostream& out;
  Format format = Format::kText;
  OracleBudget budget;
};

// Text and CSV: exact decimal when it terminates, else p/q. JSON: p/q.
std::string num(const Rational& r) { return to_decimal_string(r, 0); }
std::string exact(const Rational& r) { return to_fraction_string(r); }

std::string ratio_text(const std::optional<Ratio>& r) {
  if (!r) return "";
  return r->infinite ? "inf" : num(r->value);
}

Json ratio_json(const std::optional<Ratio>& r) {
  if (!r) return nullptr;
  return r->infinite ? Json("inf") : Json(exact(r->value));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::vector<std::string> good_names(const Instance& inst, const std::vector<int>& goods) {
  std::vector<std::string> out;
  for (int g : goods) out.push_back(inst.good_names()[g]);
  return out;
}

std::string brace(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i > 0 ? sep : "") + xs[i];
  return s + "}";
}

std::string joined(const std::vector<std::string>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i > 0 ? std::string(1, sep) : "") + xs[i];
  return s;
}

Json allocation_json(const Instance& inst, const KSharingAllocation& a) {
  Json j = Json::object();
  for (int i = 0; i < a.agent_count(); ++i) j[inst.agent_names()[i]] = good_names(inst, a.bundle(i));
  return j;
}

// Allocation plus per-agent fairness, in the chosen format. `extra` goes to
// the header (text) or top-level fields (json); CSV carries rows only.
void print_report(Context& c, const Instance& inst, const KSharingAllocation& a, const FairnessReport& rep,
                  const std::vector<std::pair<std::string, std::string>>& extra, Json json_extra = Json::object()) {
  const int n = inst.agent_count();
  switch (c.format) {
    case Format::kText: {
      for (const auto& [k, v] : extra) c.out << k << ": " << v << '\n';
      bool any_threshold = false;
      for (const auto& ag : rep.agents) any_threshold = any_threshold || ag.threshold.has_value();
      for (int i = 0; i < n; ++i) {
        const auto& ag = rep.agents[i];
        c.out << inst.agent_names()[i] << ": " << brace(good_names(inst, a.bundle(i))) << "  utility " << num(ag.utility);
        if (ag.threshold) {
          c.out << "  threshold " << num(*ag.threshold) << "  ratio " << ratio_text(ag.ratio)
                << (ag.satisfied ? "  ok" : "  BELOW");
        }
        c.out << '\n';
      }
      if (any_threshold) {
        c.out << "thresholds: " << rep.threshold_label << '\n';
        c.out << "min ratio: " << ratio_text(rep.min_ratio) << '\n';
        c.out << "satisfied: " << (rep.satisfied ? "yes" : "no") << '\n';
      }
      break;
    }
    case Format::kJson: {
      Json j = Json::object();
      for (const auto& [k, v] : extra) j[k] = v;
      for (auto it = json_extra.begin(); it != json_extra.end(); ++it) j[it.key()] = it.value();
      j["allocation"] = allocation_json(inst, a);
      Json agents = Json::array();
      for (int i = 0; i < n; ++i) {
        const auto& ag = rep.agents[i];
        Json x = {{"agent", inst.agent_names()[i]}, {"utility", exact(ag.utility)}};
        x["threshold"] = ag.threshold ? Json(exact(*ag.threshold)) : Json(nullptr);
        x["ratio"] = ratio_json(ag.ratio);
        x["satisfied"] = ag.satisfied;
        agents.push_back(x);
      }
      j["agents"] = agents;
      j["threshold_label"] = rep.threshold_label;
      j["min_ratio"] = ratio_json(rep.min_ratio);
      j["satisfied"] = rep.satisfied;
      c.out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      c.out << "agent,goods,utility,threshold,ratio,satisfied\n";
      for (int i = 0; i < n; ++i) {
        const auto& ag = rep.agents[i];
        c.out << csv_field(inst.agent_names()[i]) << ',' << csv_field(joined(good_names(inst, a.bundle(i)), ';')) << ','
              << num(ag.utility) << ',' << (ag.threshold ? num(*ag.threshold) : "") << ',' << ratio_text(ag.ratio)
              << ',' << (ag.threshold ? (ag.satisfied ? "yes" : "no") : "") << '\n';
      }
      break;
    }
  }
}

void print_none(Context& c, const std::string& notion) {
  switch (c.format) {
    case Format::kText:
    case Format::kCsv:
      c.out << "NONE\n";
      break;
    case Format::kJson:
      c.out << Json({{"notion", notion}, {"result", "NONE"}}).dump(2) << '\n';
      break;
  }
}

// Per-agent oracle values.
void print_values(Context& c, const Instance& inst, const std::string& notion, const std::vector<int>& agents,
                  const std::vector<OracleResult>& results, bool witness, bool partition) {
  auto witness_sets = [&](const OracleResult& r) {
    std::vector<std::vector<std::string>> sets;
    for (int b = 0; b < r.witness.agent_count(); ++b) sets.push_back(good_names(inst, r.witness.bundle(b)));
    return sets;
  };
  auto witness_label = [&](int b) {
    return partition ? "bundle " + std::to_string(b + 1) : inst.agent_names()[b];
  };
  switch (c.format) {
    case Format::kText:
      for (std::size_t x = 0; x < agents.size(); ++x) {
        c.out << inst.agent_names()[agents[x]] << ": " << notion << " = " << num(results[x].value) << "  ("
              << results[x].states_enumerated << " states)\n";
        if (witness) {
          auto sets = witness_sets(results[x]);
          for (std::size_t b = 0; b < sets.size(); ++b) {
            c.out << "  " << witness_label(static_cast<int>(b)) << ": " << brace(sets[b]) << '\n';
          }
        }
      }
      break;
    case Format::kJson: {
      Json arr = Json::array();
      for (std::size_t x = 0; x < agents.size(); ++x) {
        Json j = {{"agent", inst.agent_names()[agents[x]]},
                  {"value", exact(results[x].value)},
                  {"states", results[x].states_enumerated}};
        if (witness) {
          Json w = Json::array();
          for (const auto& s : witness_sets(results[x])) w.push_back(s);
          j["witness"] = w;
        }
        arr.push_back(j);
      }
      c.out << Json({{"notion", notion}, {"values", arr}}).dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      c.out << "agent,value,states" << (witness ? ",witness" : "") << '\n';
      for (std::size_t x = 0; x < agents.size(); ++x) {
        c.out << csv_field(inst.agent_names()[agents[x]]) << ',' << num(results[x].value) << ','
              << results[x].states_enumerated;
        if (witness) {
          std::vector<std::string> parts;
          for (const auto& s : witness_sets(results[x])) parts.push_back(joined(s, ';'));
          c.out << ',' << csv_field(joined(parts, '|'));
        }
        c.out << '\n';
      }
      break;
  }
}

// ---------------------------------------------------------------------------
// Instance loading

struct InstanceArgs {
  std::string source;
  std::optional<int> k;
  std::string cost;
};

void add_instance_args(CLI::App* sub, InstanceArgs& a) {
  sub->add_option("--instance,-i", a.source, "Instance file or catalog id (feige9, kurokawa12, theorem5)")->required();
  sub->add_option("--k", a.k, "Override the sharing bound k");
  sub->add_option("--cost", a.cost, "Override the cost model: cost_free, equal_share, count_table:<C>");
}

Instance load_instance(const InstanceArgs& a) {
  Instance inst = is_catalog_id(a.source) ? catalog(a.source).instance : parse_instance(read_text_file(a.source));
  if (a.k) {
    if (*a.k < 1 || *a.k > inst.agent_count()) throw ParseError("--k must satisfy 1 <= k <= n");
    inst = inst.with_k(*a.k);
  }
  if (!a.cost.empty()) {
    GeneratorConfig g;
    g.cost = parse_generator_cost(a.cost, &g.flat_cost);
    g.goods = inst.good_count();
    g.k = inst.k();
    inst = inst.with_cost_model(generator_cost_model(g));
  }
  return inst;
}

int resolve_agent(const Instance& inst, const std::string& text) {
  for (int i = 0; i < inst.agent_count(); ++i) {
    if (inst.agent_names()[i] == text) return i;
  }
  try {
    std::size_t used = 0;
    const int idx = std::stoi(text, &used);
    if (used == text.size() && idx >= 1 && idx <= inst.agent_count()) return idx - 1;
  } catch (const std::exception&) {
  }
  throw ParseError("unknown agent '" + text + "' (use a name or a 1-based index)");
}

std::vector<int> selected_agents(const Instance& inst, const std::string& agent) {
  if (!agent.empty()) return {resolve_agent(inst, agent)};
  std::vector<int> all;
  for (int i = 0; i < inst.agent_count(); ++i) all.push_back(i);
  return all;
}

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw CLI::ValidationError("--format", "must be text, json or csv");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximin-share fair division under cost-sensitive k-sharing", "sharefair"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  int jobs = 1;
  app.add_option("--format", format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs,-j", jobs, "Parallel enumeration chunks")->check(CLI::PositiveNumber);

  InstanceArgs ia;
  std::string agent;
  int bundles = 0;
  bool witness = false;
  bool full_share = false;
  std::string notion;
  bool with_oracle = false;
  bool show_trace = false;
  std::vector<int> only;
  std::uint64_t seed = 0;
  int gen_n = 3;
  int gen_m = 5;
  int gen_k = 2;
  std::string gen_cost = "cost_free";
  std::int64_t gen_min = 0;
  std::int64_t gen_max = 10;
  std::string output;
  std::string dump_id;

  auto* mms = app.add_subcommand("mms", "Oracle MMS values");
  add_instance_args(mms, ia);
  mms->add_option("--agent", agent, "Agent name or 1-based index (default: all)");
  mms->add_option("--bundles,-d", bundles, "Number of bundles d (default: n)")->check(CLI::PositiveNumber);
  mms->add_flag("--witness", witness, "Print a maximising partition");

  auto* smms = app.add_subcommand("smms", "Oracle SMMS or fullSMMS values");
  add_instance_args(smms, ia);
  smms->add_option("--agent", agent, "Agent name or 1-based index (default: all)");
  smms->add_flag("--full-share", full_share, "Restrict to fully-shared allocations (fullSMMS)");
  smms->add_flag("--witness", witness, "Print a maximising allocation");

  auto* exists = app.add_subcommand("exists", "Find a fair allocation or report NONE (exit 3)");
  add_instance_args(exists, ia);
  exists->add_option("--notion", notion, "mms or smms")->required()->check(CLI::IsMember({"mms", "smms"}));

  auto* bag = app.add_subcommand("bagfill", "Shared bag filling");
  add_instance_args(bag, ia);
  bag->add_flag("--oracle", with_oracle, "Compare against oracle MMS values");
  bag->add_flag("--trace", show_trace, "Print the bag rounds");

  auto* pair = app.add_subcommand("pairing", "Pairwise MMS construction");
  add_instance_args(pair, ia);
  pair->add_flag("--oracle", with_oracle, "Compare against oracle MMS values");

  auto* reduce = app.add_subcommand("reduce", "Cardinality-constrained instance (JSON)");
  add_instance_args(reduce, ia);

  auto* approx = app.add_subcommand("smms-approx", "SMMS approximation through the exact CMMS solver");
  add_instance_args(approx, ia);
  approx->add_flag("--oracle", with_oracle, "Compare against oracle SMMS and MMS values");

  auto* table = app.add_subcommand("table1", "Guarantee factor grid min(1, (1-C)(k-1)); CSV by default");

  auto* verify = app.add_subcommand("verify-paper", "Run every acceptance check");
  verify->add_option("--only", only, "Run only these check ids (1-11)")->delimiter(',')->check(CLI::Range(1, kCriterionCount));

  auto* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("--seed", seed, "PRNG seed")->required();
  gen->add_option("--n", gen_n, "Agents")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "Goods")->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_k, "Sharing bound")->check(CLI::PositiveNumber);
  gen->add_option("--cost", gen_cost, "cost_free, equal_share or count_table:<C>");
  gen->add_option("--min", gen_min, "Smallest value");
  gen->add_option("--max", gen_max, "Largest value");
  gen->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* dump = app.add_subcommand("dump", "Print a catalog instance as JSON");
  dump->add_option("--id", dump_id, "Catalog id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Context c{out};
    c.budget = OracleBudget::from_env();
    c.budget.parallel_chunks = jobs;
    c.format = parse_format(format, Format::kText);

    if (*mms) {
      const Instance inst = load_instance(ia);
      const int d = bundles > 0 ? bundles : inst.agent_count();
      const auto agents = selected_agents(inst, agent);
      std::vector<OracleResult> res;
      if (agent.empty()) {
        res = mms_values(inst, d, c.budget);
      } else {
        res.push_back(mms_value(inst, agents.front(), d, c.budget));
      }
      print_values(c, inst, "MMS^" + std::to_string(d), agents, res, witness, true);
      return kOk;
    }
    if (*smms) {
      const Instance inst = load_instance(ia);
      const auto agents = selected_agents(inst, agent);
      std::vector<OracleResult> res;
      if (agent.empty()) {
        res = full_share ? full_smms_values(inst, c.budget) : smms_values(inst, c.budget);
      } else {
        res.push_back(full_share ? full_smms_value(inst, agents.front(), c.budget)
                                 : smms_value(inst, agents.front(), c.budget));
      }
      print_values(c, inst, full_share ? "fullSMMS" : "SMMS", agents, res, witness, false);
      return kOk;
    }
    if (*exists) {
      const Instance inst = load_instance(ia);
      std::vector<Rational> thresholds;
      std::optional<KSharingAllocation> w;
      if (notion == "mms") {
        for (auto& r : mms_values(inst, inst.agent_count(), c.budget)) thresholds.push_back(r.value);
        w = mms_allocation_exists(inst, c.budget);
      } else {
        for (auto& r : smms_values(inst, c.budget)) thresholds.push_back(r.value);
        w = smms_allocation_exists(inst, c.budget);
      }
      if (!w) {
        print_none(c, notion);
        return kNone;
      }
      // MMS witnesses are 1-sharing: plain bundle values.
      const Instance eval = notion == "mms" ? inst.with_k(1).with_cost_model(CostModel::cost_free()) : inst;
      const auto u = utilities(eval, *w);
      std::vector<std::optional<Rational>> thr(thresholds.begin(), thresholds.end());
      print_report(c, inst, *w, make_report(u, thr, notion == "mms" ? "MMS" : "SMMS"), {{"notion", notion}});
      return kOk;
    }
    if (*bag) {
      const Instance inst = load_instance(ia);
      const BagFillResult r = shared_bag_filling(inst, {with_oracle, c.budget});
      const std::vector<std::pair<std::string, std::string>> extra = {
          {"k", std::to_string(inst.k())}, {"max cost C", num(r.max_cost)}, {"alpha", num(r.alpha)}};
      Json jx = Json::object();
      if (show_trace && c.format == Format::kJson) {
        Json rounds = Json::array();
        for (const auto& p : r.trace.phase1) {
          rounds.push_back({{"phase", 1}, {"agent", inst.agent_names()[p.agent]}, {"good", inst.good_names()[p.good]}});
        }
        for (const auto& b : r.trace.rounds) {
          Json vals = Json::object();
          for (int i : b.agents_before) vals[inst.agent_names()[i]] = exact(b.bag_value[i]);
          rounds.push_back({{"phase", 2},
                            {"mandatory", good_names(inst, b.mandatory)},
                            {"filler", good_names(inst, b.filler)},
                            {"recipient", inst.agent_names()[b.recipient]},
                            {"final", b.final_round},
                            {"bag_value", vals}});
        }
        jx["trace"] = rounds;
      }
      print_report(c, inst, r.allocation, r.report, extra, jx);
      if (show_trace && c.format == Format::kText) {
        for (const auto& p : r.trace.phase1) {
          c.out << "phase 1: " << inst.agent_names()[p.agent] << " takes " << inst.good_names()[p.good] << '\n';
        }
        for (const auto& b : r.trace.rounds) {
          c.out << (b.final_round ? "final: " : "bag: ") << brace(good_names(inst, b.mandatory)) << " + "
                << brace(good_names(inst, b.filler)) << " -> " << inst.agent_names()[b.recipient] << " (value "
                << num(b.bag_value[b.recipient]) << ")\n";
        }
      }
      return kOk;
    }
    if (*pair) {
      const Instance inst = load_instance(ia);
      const PairingResult r = pairwise_mms_allocation(inst, {with_oracle, c.budget});
      print_report(c, inst, r.allocation, r.report,
                   {{"sharing degree", std::to_string(r.sharing_degree)},
                    {"target", "MMS^" + std::to_string(r.mms_bundles)},
                    {"guarantee", to_string(r.guarantee)}});
      return kOk;
    }
    if (*reduce) {
      c.out << serialize(to_cardinality_constrained(load_instance(ia)));
      return kOk;
    }
    if (*approx) {
      const Instance inst = load_instance(ia);
      const SmmsApproximation r = smms_via_cmms(inst, exact_cmms_solver(c.budget), with_oracle, c.budget);
      const std::vector<std::pair<std::string, std::string>> extra = {
          {"alpha", num(r.alpha)}, {"max cost C", num(r.max_cost)}};
      print_report(c, inst, r.allocation, r.smms, extra);
      if (with_oracle && c.format == Format::kText) {
        c.out << "MMS bound (" << r.mms.threshold_label << "): " << (r.mms.satisfied ? "met" : "MISSED")
              << ", min ratio " << ratio_text(r.mms.min_ratio) << '\n';
      }
      return kOk;
    }
    if (*table) {
      const Format f = parse_format(format, Format::kCsv);
      if (f == Format::kCsv) {
        c.out << table1_csv();
      } else if (f == Format::kJson) {
        Json rows = Json::array();
        const auto cells = table1_cells();
        const auto ks = table1_k_values();
        for (std::size_t r = 0; r < ks.size(); ++r) rows.push_back({{"k", ks[r]}, {"cells", cells[r]}});
        Json cols = Json::array();
        for (const auto& x : table1_cost_values()) cols.push_back(to_decimal_string(x));
        c.out << Json({{"C", cols}, {"rows", rows}}).dump(2) << '\n';
      } else {
        c.out << "k \\ C";
        for (const auto& x : table1_cost_values()) c.out << '\t' << to_decimal_string(x);
        c.out << '\n';
        const auto cells = table1_cells();
        const auto ks = table1_k_values();
        for (std::size_t r = 0; r < ks.size(); ++r) {
          c.out << ks[r];
          for (const auto& cell : cells[r]) c.out << '\t' << cell;
          c.out << '\n';
        }
      }
      return kOk;
    }
    if (*verify) {
      VerifyOptions o;
      o.budget = c.budget;
      std::vector<CriterionResult> results;
      if (c.format == Format::kText) {
        o.progress = [&](const CriterionResult& r) {
          c.out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << ": " << r.detail << " ["
                << to_rounded_string(Rational(static_cast<long>(r.seconds * 1000)) / 1000, 3) << "s]\n";
          c.out.flush();
        };
      }
      if (only.empty()) {
        results = verify_all(o);
      } else {
        for (int id : only) results.push_back(verify_criterion(id, o));
      }
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (c.format == Format::kJson) {
        Json arr = Json::array();
        for (const auto& r : results) {
          arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                         {"seconds", r.seconds}});
        }
        c.out << Json({{"passed", all}, {"checks", arr}}).dump(2) << '\n';
      } else if (c.format == Format::kCsv) {
        c.out << "id,title,passed,detail\n";
        for (const auto& r : results) {
          c.out << r.id << ',' << csv_field(r.title) << ',' << (r.passed ? "yes" : "no") << ',' << csv_field(r.detail)
                << '\n';
        }
      } else {
        int passed = 0;
        for (const auto& r : results) passed += r.passed ? 1 : 0;
        c.out << passed << "/" << results.size() << " checks passed\n";
      }
      return all ? kOk : kInvariant;
    }
    if (*gen) {
      GeneratorConfig g;
      g.seed = seed;
      g.agents = gen_n;
      g.goods = gen_m;
      g.k = gen_k;
      g.cost = parse_generator_cost(gen_cost, &g.flat_cost);
      g.min_value = gen_min;
      g.max_value = gen_max;
      const std::string text = serialize(generate(g));
      if (output.empty()) {
        c.out << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + output + "'");
        f << text;
      }
      return kOk;
    }
    if (*dump) {
      c.out << serialize(catalog(dump_id).instance);
      return kOk;
    }
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise SHAREFAIR_BUDGET)\n";
    return kBudget;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace sharefair::cli
