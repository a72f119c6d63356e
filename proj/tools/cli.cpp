// Copyright 2026 The exclear Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "exclear/error.hpp"
#include "exclear/formulations.hpp"
#include "exclear/harness.hpp"
#include "exclear/pricing.hpp"
#include "exclear/solver.hpp"
#include "json.hpp"

namespace exclear::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kBackendEnv = "EXCHANGE_CLEAR_BACKEND";
constexpr const char* kBnpName = "picef-bnp";

// Raised for problems with the command line itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a solve ends without a proven answer.
struct NoAnswer : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  std::string input = "-";
  std::optional<int> cycle_cap;
  std::optional<int> chain_cap;
  std::optional<double> failure_prob;
};

struct SolveArgs {
  InstanceArgs inst;
  std::string formulation = "picef";
  bool relax = false;
  std::string dump_model;
  long node_limit = 0;
  double time_limit = 0.0;
  std::string search = "dfs";
  std::string initial_columns = "none";
  std::size_t column_cap = 0;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return read_all(file);
}

Instance load_instance(const InstanceArgs& a, std::istream& in) {
  Instance inst = parse_instance(read_source(a.input, in));
  if (a.cycle_cap || a.chain_cap) {
    inst = inst.with_caps(a.cycle_cap.value_or(inst.cycle_cap()),
                          a.chain_cap.value_or(inst.chain_cap()));
  }
  if (a.failure_prob) inst = inst.with_failure_prob(a.failure_prob);
  return inst;
}

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("--input", a.input, "Instance JSON file, '-' for stdin");
  cmd->add_option("--cycle-cap", a.cycle_cap, "Override the cycle cap K")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--chain-cap", a.chain_cap, "Override the chain cap L")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--failure-prob", a.failure_prob,
                  "Uniform arc success probability p")
      ->check(CLI::Range(0.0, 1.0));
}

Json instance_summary(const Instance& inst) {
  Json j;
  j["ndds"] = inst.num_ndds();
  j["pairs"] = inst.num_pairs();
  j["arcs"] = inst.arcs().size();
  j["cycle_cap"] = inst.cycle_cap();
  j["chain_cap"] = inst.chain_cap();
  j["failure_prob"] = inst.failure_prob() ? Json(*inst.failure_prob()) : Json(nullptr);
  return j;
}

void packing_json(const Solution& s, Json& report) {
  Json cycles = Json::array();
  for (const Cycle& c : s.cycles) cycles.push_back(c.vertices);
  Json chains = Json::array();
  for (const Chain& c : s.chains) chains.push_back(c.vertices);
  report["cycles"] = std::move(cycles);
  report["chains"] = std::move(chains);
}

MipConfig mip_config(const SolveArgs& a) {
  MipConfig config;
  config.node_limit = a.node_limit;
  if (a.time_limit > 0) config.time_limit_s = a.time_limit;
  config.search = a.search == "best-bound" ? SearchOrder::kBestBound
                                           : SearchOrder::kDepthFirst;
  return config;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

Json solve_bnp(const SolveArgs& a, const Instance& inst, Json report) {
  if (a.relax) throw UsageError("--relax is not available for picef-bnp");
  BnpConfig config;
  config.initial_columns = a.initial_columns == "greedy" ? InitialColumns::kGreedy
                                                         : InitialColumns::kNone;
  config.column_cap = a.column_cap;
  config.node_limit = a.node_limit;
  if (a.time_limit > 0) config.time_limit_s = a.time_limit;
  const BnpResult result = solve_picef_bnp(inst, config);
  const Solution& s = result.solution;
  report["status"] = "optimal";
  report["objective"] = s.expected_weight ? *s.expected_weight : s.weight;
  report["weight"] = s.weight;
  report["expected_objective"] = s.expected_weight ? Json(*s.expected_weight) : Json(nullptr);
  packing_json(s, report);
  report["model"] = nullptr;
  report["solver"] = {{"backend", active_backend()->name()},
                      {"nodes", result.stats.nodes},
                      {"columns_generated", result.stats.columns_generated},
                      {"pricing_calls", result.stats.pricing_calls},
                      {"lp_value", result.stats.root_bound}};
  return report;
}

Json solve(const SolveArgs& a, const Instance& inst) {
  Json report;
  report["instance"] = instance_summary(inst);
  report["formulation"] = a.formulation;
  report["relaxed"] = a.relax;
  if (a.formulation == kBnpName) return solve_bnp(a, inst, std::move(report));

  const std::optional<Formulation> f = parse_formulation(a.formulation);
  if (!f) {
    throw UsageError("unknown formulation '" + a.formulation + "'");
  }
  MipModel model = build_formulation(inst, *f);
  if (inst.failure_prob()) model = apply_failure_objective(model, inst);
  if (!a.dump_model.empty()) {
    std::ofstream file(a.dump_model, std::ios::binary);
    if (!file) throw UsageError("cannot write " + a.dump_model);
    file << dump_model(model);
  }
  Json model_stats = {{"variables", model.num_variables()},
                      {"constraints", model.num_constraints()}};

  if (a.relax) {
    LpOptions options;
    const LpOutcome lp = solve_lp(model, options);
    if (lp.status != LpStatus::kOptimal) {
      throw NoAnswer(std::string("relaxation ") + std::string(lp_status_name(lp.status)));
    }
    report["status"] = "optimal";
    report["objective"] = lp.value;
    report["weight"] = nullptr;
    report["expected_objective"] = nullptr;
    report["cycles"] = Json::array();
    report["chains"] = Json::array();
    report["model"] = model_stats;
    report["solver"] = {{"backend", active_backend()->name()},
                        {"nodes", 0},
                        {"iterations", lp.iterations},
                        {"lp_value", lp.value}};
    return report;
  }

  const MipOutcome mip = solve_mip(model, mip_config(a));
  if (mip.status == MipStatus::kInfeasible) throw NoAnswer("model is infeasible");
  if (mip.status == MipStatus::kLimitReached) {
    throw NoAnswer("search limit reached after " +
                   std::to_string(mip.nodes_explored) + " nodes");
  }
  const Solution s = decode_solution(model, mip.assignment, inst);
  report["status"] = "optimal";
  report["objective"] = mip.value;
  report["weight"] = s.weight;
  report["expected_objective"] = s.expected_weight ? Json(*s.expected_weight) : Json(nullptr);
  packing_json(s, report);
  report["model"] = model_stats;
  report["solver"] = {{"backend", active_backend()->name()},
                      {"nodes", mip.nodes_explored},
                      {"lp_value", mip.root_lp_value}};
  return report;
}

std::vector<Formulation> default_comparison(const Instance& inst) {
  std::vector<Formulation> out = {Formulation::kCf};
  if (inst.num_ndds() == 0) {
    out.push_back(Formulation::kPief);
    out.push_back(Formulation::kPiefReduced);
    if (inst.cycle_cap() >= 3) out.push_back(Formulation::kPiefReduced2);
  }
  out.push_back(Formulation::kPicef);
  out.push_back(Formulation::kPicefReduced);
  out.push_back(Formulation::kHpief);
  return out;
}

Json compare(const Instance& inst, const std::vector<std::string>& names) {
  std::vector<Formulation> formulations;
  for (const std::string& name : names) {
    const auto f = parse_formulation(name);
    if (!f) throw UsageError("unknown formulation '" + name + "'");
    formulations.push_back(*f);
  }
  if (formulations.empty()) formulations = default_comparison(inst);
  const LprComparison cmp = compare_lprs(inst, formulations);
  Json report;
  report["instance"] = instance_summary(inst);
  Json values = Json::object();
  for (const Formulation f : formulations) {
    values[formulation_name(f)] = cmp.values.at(f);
  }
  report["lprs"] = std::move(values);
  Json gaps = Json::array();
  for (const LprGap& g : cmp.gaps) {
    gaps.push_back({{"a", formulation_name(g.a)},
                    {"b", formulation_name(g.b)},
                    {"gap", g.gap}});
  }
  report["gaps"] = std::move(gaps);
  return report;
}

std::vector<Vertex> vertex_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::kSyntaxError, std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::kSyntaxError, std::string(what) + " holds a non-integer vertex");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

bool close(double a, double b) { return std::fabs(a - b) <= 1e-6 * (1.0 + std::fabs(a)); }

// Returns true when the packing is feasible and its recorded weights match.
Json verify(const Instance& inst, const std::string& text, bool& ok) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("solution: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kSyntaxError, "solution must be a JSON object");
  std::vector<Cycle> cycles;
  std::vector<Chain> chains;
  for (const Json& c : doc.value("cycles", Json::array())) {
    cycles.push_back(Cycle{vertex_list(c, "cycle")});
  }
  for (const Json& c : doc.value("chains", Json::array())) {
    chains.push_back(Chain{vertex_list(c, "chain")});
  }
  Json report;
  std::string problem;
  std::optional<Solution> s;
  try {
    for (Cycle& c : cycles) c = make_cycle(c.vertices);
    s = make_solution(inst, cycles, chains);
    verify_solution(inst, *s);
  } catch (const Error& e) {
    problem = e.what();
  }
  const bool relaxed = doc.value("relaxed", false);
  if (problem.empty() && !relaxed) {
    const double value = s->expected_weight ? *s->expected_weight : s->weight;
    if (doc.contains("weight") && doc["weight"].is_number() &&
        !close(doc["weight"].get<double>(), s->weight)) {
      problem = "recorded weight does not match the packing";
    } else if (doc.contains("expected_objective") && doc["expected_objective"].is_number() &&
               (!s->expected_weight ||
                !close(doc["expected_objective"].get<double>(), *s->expected_weight))) {
      problem = "recorded expected objective does not match the packing";
    } else if (doc.contains("objective") && doc["objective"].is_number() &&
               !close(doc["objective"].get<double>(), value)) {
      problem = "recorded objective does not match the packing";
    }
  }
  ok = problem.empty();
  report["valid"] = ok;
  if (s) {
    report["weight"] = s->weight;
    report["expected_weight"] = s->expected_weight ? Json(*s->expected_weight) : Json(nullptr);
  }
  report["objective_checked"] = !relaxed;
  if (!ok) report["problem"] = problem;
  return report;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLimitReached:
    case ErrorCode::kModelTooLarge:
    case ErrorCode::kNumericalFailure:
    case ErrorCode::kTooLargeForOracle:
    case ErrorCode::kInfeasibleAssignment:
      return kExitInfeasible;
    case ErrorCode::kUnsupported:
    case ErrorCode::kUnknownBackend:
    case ErrorCode::kBadFamilyParams:
      return kExitUsage;
    default:
      return kExitDataError;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Kidney-exchange clearing engine", "exclear"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  add_instance_options(solve_cmd, solve_args.inst);
  solve_cmd->add_option("--formulation", solve_args.formulation,
                        "cf|pief|piefr|pief2|picef|picef-red|hpief|picef-bnp");
  solve_cmd->add_flag("--relax", solve_args.relax, "Solve the LP relaxation only");
  solve_cmd->add_option("--dump-model", solve_args.dump_model, "Write the model as LP text");
  solve_cmd->add_option("--node-limit", solve_args.node_limit)->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--time-limit", solve_args.time_limit, "Seconds")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--search", solve_args.search)
      ->check(CLI::IsMember({"dfs", "best-bound"}));
  solve_cmd->add_option("--initial-columns", solve_args.initial_columns)
      ->check(CLI::IsMember({"none", "greedy"}));
  solve_cmd->add_option("--column-cap", solve_args.column_cap);

  SolveArgs relax_args;
  CLI::App* relax_cmd = app.add_subcommand("relax", "Solve the LP relaxation");
  add_instance_options(relax_cmd, relax_args.inst);
  relax_cmd->add_option("--formulation", relax_args.formulation);
  relax_cmd->add_option("--dump-model", relax_args.dump_model);

  InstanceArgs compare_inst;
  std::string compare_list;
  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare LP relaxations");
  add_instance_options(compare_cmd, compare_inst);
  compare_cmd->add_option("--formulations", compare_list, "Comma-separated list");

  GeneratorParams gen;
  std::optional<int> weight_lo;
  std::optional<int> weight_hi;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  gen_cmd->add_option("--ndds", gen.num_ndds)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--pairs", gen.num_pairs)->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--density", gen.arc_density)->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--weight-lo", weight_lo);
  gen_cmd->add_option("--weight-hi", weight_hi);
  gen_cmd->add_option("--cycle-cap", gen.cycle_cap)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--chain-cap", gen.chain_cap)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--failure-prob", gen.failure_prob)->check(CLI::Range(0.0, 1.0));

  std::string family_name;
  FamilyParams family;
  CLI::App* family_cmd = app.add_subcommand("family", "Emit an adversarial family instance");
  family_cmd->add_option("--name", family_name)->required()
      ->check(CLI::IsMember({"two-arm", "udders"}));
  family_cmd->add_option("--K", family.cycle_cap);
  family_cmd->add_option("--L", family.chain_cap);

  InstanceArgs verify_inst;
  std::string solution_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Re-check a reported solution");
  add_instance_options(verify_cmd, verify_inst);
  verify_cmd->add_option("--solution", solution_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (const char* backend = std::getenv(kBackendEnv); backend && *backend) {
      select_backend(backend);
    }
    Json report;
    int code = kExitOk;
    if (*solve_cmd || *relax_cmd) {
      SolveArgs a = *solve_cmd ? solve_args : relax_args;
      if (*relax_cmd) a.relax = true;
      const Instance inst = load_instance(a.inst, in);
      report = solve(a, inst);
      report["wall_time_ms"] = elapsed_ms(start);
    } else if (*compare_cmd) {
      report = compare(load_instance(compare_inst, in), split_list(compare_list));
      report["wall_time_ms"] = elapsed_ms(start);
    } else if (*gen_cmd) {
      if (weight_lo || weight_hi) {
        gen.weights = {WeightSpec::Mode::kUniformInt, weight_lo.value_or(1),
                       weight_hi.value_or(weight_lo.value_or(1))};
      }
      out << serialize_instance(generate_random(gen));
      return kExitOk;
    } else if (*family_cmd) {
      family.family = *parse_family(family_name);
      out << serialize_instance(make_family(family));
      return kExitOk;
    } else if (*verify_cmd) {
      const Instance inst = load_instance(verify_inst, in);
      bool ok = false;
      report = verify(inst, read_source(solution_path, in), ok);
      if (!ok) code = kExitInfeasible;
    }
    out << report.dump(2) << "\n";
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoAnswer& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace exclear::cli
