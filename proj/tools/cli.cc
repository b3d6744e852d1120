// Copyright 2026 The Ranking Concentration Authors.
//
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

#include "cli.h"

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ranking/instance_io.h"
#include "ranking/oracles.h"
#include "ranking/rng.h"
#include "ranking/structural_checks.h"

namespace ranking::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "csv";
};

// Writes `text` to the output path, or to `out` when the path is empty.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

void PrintMatching(const Matching& m, bool bipartite, std::ostream& out) {
  out << "matching: " << m.size() << " pair(s)\n";
  for (const auto& [a, b] : m.pairs) {
    if (bipartite) {
      out << "  seller " << a << " - buyer " << b << "\n";
    } else {
      out << "  vertex " << a << " - vertex " << b << "\n";
    }
  }
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  int n = 0;
  int ns = 0;
  int nb = 0;
  double p = 0.0;
  std::vector<double> weights;
  bool planted = false;
  bool with_oracle = false;
};

int CmdGenerate(const GenerateArgs& args, const GlobalOptions& global,
                std::ostream& out, std::ostream& err) {
  GeneratorSpec spec;
  spec.family = ParseFamily(args.family);
  spec.n = args.n;
  spec.n_sellers = args.ns;
  spec.n_buyers = args.nb;
  spec.p = args.p;
  spec.seed = global.seed;
  spec.plant_perfect_matching = args.planted;
  if (!args.weights.empty()) {
    if (args.weights.size() != 2) {
      throw UsageError("--weights takes MIN,MAX");
    }
    spec.weights = WeightRange{args.weights[0], args.weights[1]};
  }
  const Instance instance = Generate(spec);
  Emit(global.output, SerializeInstance(instance, spec.ToJson()), out);
  if (args.with_oracle) {
    const auto* g = std::get_if<BipartiteInstance>(&instance);
    const double objective =
        OracleObjective(instance, g != nullptr && g->is_weighted(),
                        std::numeric_limits<int>::max());
    std::ostream& sink = global.output.empty() ? err : out;
    sink << "oracle_objective: " << FormatDouble(objective) << "\n";
  }
  return kExitOk;
}

// ---- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string instance;
  bool cardinality = false;
  bool brute_force = false;
  int cap = kDefaultBruteForceEdgeCap;
};

int CmdOracle(const OracleArgs& args, std::ostream& out) {
  const Instance instance = LoadInstance(args.instance);
  const ValidationReport report = Validate(instance);
  if (!report.empty()) {
    throw UsageError("invalid instance: " + report.front().location + ": " +
                     report.front().message);
  }
  OracleResult result;
  std::string method;
  bool bipartite = true;
  if (const auto* g = std::get_if<BipartiteInstance>(&instance)) {
    if (args.brute_force) {
      result = BruteForceMaxMatching(*g, args.cap);
      method = "brute_force";
    } else if (g->is_weighted() && !args.cardinality) {
      result = MaxWeightSellerMatching(*g);
      method = "max_weight_seller";
    } else {
      result = MaxMatchingBipartite(*g);
      method = "max_cardinality";
    }
  } else {
    bipartite = false;
    result = MaxMatchingGeneral(std::get<FullyOnlineInstance>(instance),
                                args.cap);
    method = "general_branch_and_bound";
  }
  out << "oracle: " << method << "\n";
  out << "objective: " << FormatDouble(result.objective) << "\n";
  PrintMatching(result.matching, bipartite, out);
  return kExitOk;
}

// ---- run ------------------------------------------------------------------

struct RunArgs {
  std::string instance;
  std::string engine;
  std::optional<double> eps;
  std::string ranks;
};

int CmdRun(const RunArgs& args, const GlobalOptions& global,
           std::ostream& out) {
  const Instance instance = LoadInstance(args.instance);
  const ValidationReport report = Validate(instance);
  if (!report.empty()) {
    throw UsageError("invalid instance: " + report.front().location + ": " +
                     report.front().message);
  }
  const Engine engine = ParseEngine(args.engine);
  if (engine == Engine::kEpsRanking && !args.eps) {
    throw UsageError("eps_ranking needs --eps");
  }
  RankVector x;
  if (!args.ranks.empty()) {
    x = LoadRankVector(args.ranks);
  } else {
    SplitMix64 stream(DeriveSeed(global.seed, 0));
    x = DrawRanks(stream, RankDimension(instance));
  }
  const RunRecord run = RunEngine(instance, engine, x, args.eps.value_or(0.0));
  const bool bipartite = std::holds_alternative<BipartiteInstance>(instance);

  std::ostringstream text;
  text << "engine: " << EngineName(engine) << "\n";
  if (engine == Engine::kEpsRanking) {
    text << "eps: " << FormatDouble(*args.eps) << "\n";
  }
  text << "ranks:";
  for (double v : x.values) text << ' ' << FormatDouble(v);
  text << "\n";
  text << "objective: " << FormatDouble(run.objective) << "\n";
  PrintMatching(run.matching, bipartite, text);
  text << "trace:\n";
  for (const TraceStep& step : run.trace) {
    text << "  " << (bipartite ? "buyer " : "vertex ") << step.online_vertex;
    if (!bipartite) text << " departs at " << ToString(step.time);
    text << " -> ";
    if (step.chosen) {
      text << (bipartite ? "seller " : "vertex ") << *step.chosen;
    } else {
      text << "unmatched";
    }
    text << "\n";
  }
  if (IsWeightedEngine(engine)) {
    double total = 0.0;
    text << "accounting:\n";
    for (size_t j = 0; j < run.revenue.size(); ++j) {
      text << "  r[" << j << "] = " << FormatDouble(run.revenue[j]) << "\n";
      total += run.revenue[j];
    }
    for (size_t i = 0; i < run.utility.size(); ++i) {
      text << "  u[" << i << "] = " << FormatDouble(run.utility[i]) << "\n";
      total += run.utility[i];
    }
    text << "  sum(r) + sum(u) = " << FormatDouble(total) << "\n";
  }
  Emit(global.output, text.str(), out);
  return kExitOk;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string lemma;
  std::int64_t cases = 10000;
  std::optional<double> eps;
  std::int64_t edge_trials = 1000;
};

int CmdCheck(const CheckArgs& args, const GlobalOptions& global,
             std::ostream& out, std::ostream& err) {
  const LemmaId lemma = ParseLemma(args.lemma);
  if (args.cases < 1) throw UsageError("--cases must be >= 1");
  SuiteOptions options;
  options.cases = args.cases;
  options.seed = global.seed;
  options.eps = args.eps;
  options.edge_bound_trials = args.edge_trials;
  const std::vector<SuiteRow> rows = RunLemmaSuite(lemma, options);
  Emit(global.output, FormatSuiteCsv(rows), out);

  std::int64_t violations = 0;
  for (const SuiteRow& row : rows) violations += row.report.holds ? 0 : 1;
  err << LemmaName(lemma) << ": " << rows.size() << " case(s), "
      << violations << (lemma == LemmaId::kL9 ? " inconsistent (informational)"
                                              : " violation(s)")
      << "\n";
  if (lemma == LemmaId::kL9) return kExitOk;
  return violations == 0 ? kExitOk : kExitViolation;
}

// ---- concentrate ----------------------------------------------------------

void PrintSummary(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << std::left << std::setw(8) << "alpha" << std::setw(8) << "eps"
      << std::setw(16) << "threshold" << std::setw(16) << "empirical_tail"
      << std::setw(16) << "ci_upper" << std::setw(16) << "bound"
      << "satisfied\n";
  for (const ResultRow& r : rows) {
    out << std::left << std::setw(8) << FormatDouble(r.tail.alpha)
        << std::setw(8) << FormatDouble(r.eps) << std::setw(16)
        << r.tail.threshold << std::setw(16) << r.tail.empirical_tail
        << std::setw(16) << r.tail.ci_upper << std::setw(16)
        << r.tail.theoretical_bound << (r.tail.satisfied ? "yes" : "NO")
        << "\n";
  }
  if (!rows.empty()) {
    out << "mean_ratio " << rows.front().mean_ratio << ", oracle "
        << FormatDouble(rows.front().oracle_objective) << "\n";
  }
}

int CmdConcentrate(const ExperimentConfig& config, int threads,
                   const std::string& save_config, std::ostream& out,
                   std::ostream& err) {
  if (!config.instance_path && !config.generator) {
    throw UsageError("concentrate needs an instance file or --config");
  }
  if (config.trials < 1) throw UsageError("--trials must be >= 1");
  if (!save_config.empty()) WriteFile(save_config, config.ToJson());

  const Instance instance = config.instance_path
                                ? LoadInstance(*config.instance_path)
                                : Generate(*config.generator);
  const ValidationReport report = Validate(instance);
  if (!report.empty()) {
    throw UsageError("invalid instance: " + report.front().location + ": " +
                     report.front().message);
  }
  ConcentrationRequest request;
  request.instance_id = InstanceId(config);
  request.engine = config.engine;
  request.eps = config.eps;
  request.theorem = config.theorem;
  request.rho = config.rho;
  request.trials = config.trials;
  request.master_seed = config.master_seed;
  request.alphas = config.alphas;
  request.oracle_edge_cap = config.oracle_edge_cap;
  request.monte_carlo.threads = threads;
  const ConcentrationResult result = RunConcentration(instance, request);

  Emit(config.output, FormatResultsCsv(result.rows), out);
  PrintSummary(result.rows, config.output.empty() ? err : out);
  const bool all_satisfied =
      std::all_of(result.rows.begin(), result.rows.end(),
                  [](const ResultRow& r) { return r.tail.satisfied; });
  return all_satisfied ? kExitOk : kExitViolation;
}

std::optional<double> OptionalDouble(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return it->get<double>();
}

}  // namespace

std::string ExperimentConfig::ToJson() const {
  Json doc;
  if (instance_path) doc["instance"] = *instance_path;
  if (generator) doc["generator"] = Json::parse(generator->ToJson());
  doc["engine"] = EngineName(engine);
  if (eps) doc["eps"] = *eps;
  if (theorem) doc["theorem"] = TheoremName(*theorem);
  if (rho) doc["rho"] = *rho;
  doc["trials"] = trials;
  doc["master_seed"] = master_seed;
  doc["alphas"] = alphas;
  doc["oracle_cap"] = oracle_edge_cap;
  doc["output"] = output;
  return doc.dump(1) + "\n";
}

ExperimentConfig ExperimentConfig::FromJson(std::string_view json_text) {
  try {
    const Json doc = Json::parse(json_text);
    if (!doc.is_object()) throw FormatError("config must be a JSON object");
    ExperimentConfig config;
    if (auto it = doc.find("instance"); it != doc.end()) {
      config.instance_path = it->get<std::string>();
    }
    if (auto it = doc.find("generator"); it != doc.end()) {
      config.generator = GeneratorSpec::FromJson(it->dump());
    }
    config.engine = ParseEngine(doc.value("engine", std::string("ranking")));
    config.eps = OptionalDouble(doc, "eps");
    if (auto it = doc.find("theorem"); it != doc.end() && !it->is_null()) {
      config.theorem = ParseTheorem(it->get<std::string>());
    }
    config.rho = OptionalDouble(doc, "rho");
    config.trials = doc.value("trials", config.trials);
    config.master_seed = doc.value("master_seed", config.master_seed);
    if (auto it = doc.find("alphas"); it != doc.end()) {
      config.alphas = it->get<std::vector<double>>();
    }
    config.oracle_edge_cap = doc.value("oracle_cap", config.oracle_edge_cap);
    config.output = doc.value("output", std::string());
    return config;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid config: ") + e.what());
  }
}

std::string InstanceId(const ExperimentConfig& config) {
  if (config.instance_path) {
    return std::filesystem::path(*config.instance_path).stem().string();
  }
  if (!config.generator) return "instance";
  const GeneratorSpec& g = *config.generator;
  std::string id(FamilyName(g.family));
  switch (g.family) {
    case Family::kUpperTriangular:
    case Family::kDisjointPerfect:
      id += "_n" + std::to_string(g.n);
      break;
    case Family::kRandomBipartite:
      id += "_" + std::to_string(g.n_sellers) + "x" +
            std::to_string(g.n_buyers) + "_p" + FormatDouble(g.p) + "_s" +
            std::to_string(g.seed);
      break;
    case Family::kRandomFullyOnline:
      id += "_n" + std::to_string(g.n) + "_p" + FormatDouble(g.p) + "_s" +
            std::to_string(g.seed);
      break;
    case Family::kFigure1:
      break;
  }
  return id;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Ranking-family online matching: runs, lemma checks and "
               "concentration experiments",
               "ranking"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  auto* seed_opt = app.add_option("--seed", global.seed, "Random seed")
                       ->capture_default_str();
  auto* output_opt =
      app.add_option("-o,--output", global.output, "Output path");
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate
      ->add_option("family", gen.family,
                   "upper-triangular | random-bipartite | figure1 | "
                   "random-fully-online | disjoint-perfect")
      ->required();
  generate->add_option("--n", gen.n, "Size (upper-triangular, "
                                     "disjoint-perfect, random-fully-online)");
  generate->add_option("--ns", gen.ns, "Sellers (random-bipartite)");
  generate->add_option("--nb", gen.nb, "Buyers (random-bipartite)");
  generate->add_option("--p", gen.p, "Edge probability");
  generate->add_option("--weights", gen.weights,
                       "Log-uniform weight range MIN,MAX")
      ->delimiter(',')
      ->expected(2);
  generate->add_flag("--planted", gen.planted,
                     "Plant a perfect matching (random-bipartite)");
  generate->add_flag("--with-oracle", gen.with_oracle,
                     "Print the oracle objective");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Exact offline optimum");
  oracle->add_option("instance", orc.instance, "Instance file")->required();
  oracle->add_flag("--cardinality", orc.cardinality,
                   "Maximize cardinality even when weights are present");
  oracle->add_flag("--brute-force", orc.brute_force,
                   "Exhaustive bipartite search");
  oracle->add_option("--cap", orc.cap, "Edge cap for exhaustive search")
      ->capture_default_str();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one engine on an instance");
  run_cmd->add_option("instance", run.instance, "Instance file")->required();
  run_cmd
      ->add_option("--engine", run.engine,
                   "ranking | fully_online | vertex_weighted | eps_ranking | "
                   "single_valued")
      ->required();
  run_cmd->add_option("--eps", run.eps, "eps for eps_ranking");
  run_cmd->add_option("--ranks", run.ranks,
                      "Rank file (decimal literals); overrides --seed");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Randomized lemma suite");
  check
      ->add_option("lemma", chk.lemma,
                   "L3 | L4 | L5 | L6 | L7 | L8 | L8-utility | L9")
      ->required();
  check->add_option("--cases", chk.cases, "Number of cases")
      ->capture_default_str();
  check->add_option("--eps", chk.eps,
                    "eps for L7-L9 (default cycles 0.1, 0.25, 0.5)");
  check->add_option("--edge-trials", chk.edge_trials,
                    "Monte Carlo trials per L9 case")
      ->capture_default_str();

  ExperimentConfig cfg;
  std::string instance_path;
  std::string config_path;
  std::string save_config;
  std::string engine_name = "ranking";
  std::string theorem_name;
  std::optional<double> eps;
  std::optional<double> rho;
  int threads = 0;
  auto* concentrate =
      app.add_subcommand("concentrate", "Empirical tails vs. tail bounds");
  concentrate->add_option("instance", instance_path, "Instance file");
  auto* config_opt =
      concentrate->add_option("--config", config_path, "Experiment config");
  concentrate->add_option("--save-config", save_config,
                          "Write the effective config to this path");
  auto* engine_opt =
      concentrate->add_option("--engine", engine_name, "Engine")
          ->capture_default_str();
  auto* theorem_opt = concentrate->add_option(
      "--theorem", theorem_name, "T1 | T2 | T3 (default from engine)");
  auto* eps_opt = concentrate->add_option(
      "--eps", eps, "Fixed eps (eps_ranking defaults to alpha/2)");
  auto* rho_opt = concentrate->add_option("--rho", rho, "Competitive ratio "
                                                        "for T2");
  auto* trials_opt =
      concentrate->add_option("--trials", cfg.trials, "Trials")
          ->capture_default_str();
  auto* alphas_opt =
      concentrate->add_option("--alphas", cfg.alphas, "Alpha grid")
          ->delimiter(',');
  auto* cap_opt = concentrate->add_option("--cap", cfg.oracle_edge_cap,
                                          "Edge cap for exhaustive oracles");
  concentrate->add_option("--threads", threads,
                          "Worker threads (0 = all cores)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("ranking");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return CmdGenerate(gen, global, out, err);
    if (oracle->parsed()) return CmdOracle(orc, out);
    if (run_cmd->parsed()) return CmdRun(run, global, out);
    if (check->parsed()) return CmdCheck(chk, global, out, err);
    if (concentrate->parsed()) {
      ExperimentConfig config;
      if (config_opt->count() > 0) {
        config = ExperimentConfig::FromJson(ReadFile(config_path));
      }
      if (!instance_path.empty()) {
        config.instance_path = instance_path;
        config.generator.reset();
      }
      if (config_opt->count() == 0 || engine_opt->count() > 0) {
        config.engine = ParseEngine(engine_name);
      }
      if (theorem_opt->count() > 0) config.theorem = ParseTheorem(theorem_name);
      if (eps_opt->count() > 0) config.eps = eps;
      if (rho_opt->count() > 0) config.rho = rho;
      if (config_opt->count() == 0 || trials_opt->count() > 0) {
        config.trials = cfg.trials;
      }
      if (config_opt->count() == 0 || alphas_opt->count() > 0) {
        config.alphas = cfg.alphas;
      }
      if (config_opt->count() == 0 || cap_opt->count() > 0) {
        config.oracle_edge_cap = cfg.oracle_edge_cap;
      }
      if (config_opt->count() == 0 || seed_opt->count() > 0) {
        config.master_seed = global.seed;
      }
      if (config_opt->count() == 0 || output_opt->count() > 0) {
        config.output = global.output;
      }
      return CmdConcentrate(config, threads, save_config, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int Main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace ranking::cli
