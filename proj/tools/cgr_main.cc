// Copyright 2026 The cgreduce Authors.
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

// Command-line front end: instance generation, single solves, strategy
// comparisons and pricing oracle checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgr/cg_driver.h"
#include "cgr/format.h"
#include "cgr/instance_gen.h"
#include "cgr/instance_io.h"
#include "cgr/metrics.h"
#include "cgr/pricing_dp.h"
#include "cgr/reduction.h"
#include "cgr/rng.h"
#include "cgr/solomon.h"

namespace fs = std::filesystem;

namespace {

// JSON instances as written by `generate`; anything else is parsed as a
// Solomon / Gehring-Homberger text file.
cgr::VrptwInstance LoadInstance(const fs::path& path) {
  if (path.extension() == ".json") return cgr::ReadInstance(path);
  return cgr::NormalizeBenchmark(cgr::ReadSolomonFile(path)).instance;
}

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

fs::path WithSuffix(const fs::path& csv, const std::string& suffix) {
  fs::path p = csv;
  p.replace_extension();
  return fs::path(p.string() + suffix);
}

struct GenerateArgs {
  int n = 200;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<int> count;
  std::optional<double> capacity;
};

int RunGenerate(const GenerateArgs& args) {
  cgr::GenConfig cfg;
  cfg.n = args.n;
  cfg.seed = args.seed;
  cfg.capacity = args.capacity.value_or(cgr::DefaultCapacity(args.n));
  if (args.count) {
    const auto dirs = cgr::ExportTrainingSet(*args.count, cfg, args.out);
    std::cout << "wrote " << dirs.size() << " samples to " << args.out << "\n";
  } else {
    cgr::WriteInstance(cgr::GenerateInstance(cfg), args.out);
    std::cout << "wrote " << args.out << "\n";
  }
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string config;
  std::string strategy;
  std::string heatmap;
  std::optional<double> surrogate;
  std::optional<double> time_limit;
  std::optional<int> iter_limit;
  std::optional<std::int64_t> expansion_limit;
  std::optional<int> threads;
  std::optional<std::string> pricing;
  std::uint64_t seed = 0;
  std::string log;
  std::string run_json;
};

int RunSolve(const SolveArgs& args) {
  cgr::CgConfig cfg;
  if (!args.config.empty()) cfg = cgr::CgConfigFromJson(cgr::ReadTextFile(args.config));
  if (!args.strategy.empty()) cfg.strategy = cgr::ParseStrategy(args.strategy);
  if (!args.heatmap.empty()) cfg.heatmap_dir = args.heatmap;
  if (args.surrogate) cfg.surrogate_tau = *args.surrogate;
  if (args.time_limit) cfg.time_limit_s = *args.time_limit;
  if (args.iter_limit) {
    cfg.iteration_limit = *args.iter_limit;
    if (!args.time_limit) cfg.time_limit_s = 0.0;
  }
  if (args.expansion_limit) {
    cfg.dp.expansion_limit = *args.expansion_limit;
    cfg.construction.expansion_limit = *args.expansion_limit;
  }
  if (args.threads) {
    cfg.dp.threads = *args.threads;
    cfg.construction.threads = *args.threads;
    cfg.ls.threads = *args.threads;
  }
  if (args.pricing) cfg.pricing = cgr::ParsePricingMode(*args.pricing);
  cfg.seed = args.seed;
  cfg.Validate();

  const cgr::VrptwInstance instance = LoadInstance(args.instance);
  const cgr::CgRun run = cgr::Run(instance, cfg);
  if (!args.log.empty()) {
    std::ofstream out = OpenOutput(args.log);
    cgr::WriteIterationCsv(run, out);
  }
  if (!args.run_json.empty()) cgr::WriteTextFile(args.run_json, cgr::CgRunToJson(run));
  std::cout << "strategy=" << cgr::StrategyName(cfg.strategy)
            << " iterations=" << run.iterations.size()
            << " objective=" << cgr::FormatDouble(run.final_objective)
            << " columns=" << run.num_columns << " reason=" << cgr::TerminationName(run.reason)
            << " total_ms=" << cgr::FormatDouble(run.total_ms) << "\n";
  return 0;
}

struct CompareArgs {
  std::string instances;
  std::string a;
  std::string b;
  std::string out;
  std::string time_axis = "wall_ms";
};

int RunCompare(const CompareArgs& args) {
  const cgr::CgConfig cfg_a = cgr::CgConfigFromJson(cgr::ReadTextFile(args.a));
  const cgr::CgConfig cfg_b = cgr::CgConfigFromJson(cgr::ReadTextFile(args.b));
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.instances)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no instances in " + args.instances);
  std::vector<cgr::NamedInstance> instances;
  for (const fs::path& f : files) {
    instances.push_back({f.filename().string(), LoadInstance(f)});
  }
  const cgr::ComparisonReport report =
      cgr::Compare(instances, cfg_a, cfg_b, cgr::ParseTimeAxis(args.time_axis));
  {
    std::ofstream out = OpenOutput(args.out);
    cgr::WriteComparisonCsv(report, out);
  }
  {
    std::ofstream out = OpenOutput(WithSuffix(args.out, ".summary.csv"));
    cgr::WriteSummaryCsv(report.summary, out);
  }
  {
    std::ofstream out = OpenOutput(WithSuffix(args.out, ".rc_series.csv"));
    cgr::WriteRcSeriesCsv(report.rc_series, out);
  }
  const cgr::ComparisonSummary& s = report.summary;
  std::cout << "instances=" << s.instances << " obj_gap=" << cgr::FormatDouble(s.obj_gap)
            << " J(<)=" << s.j_less << "/" << s.instances
            << " speedup_a_better=" << cgr::FormatDouble(s.speedup_a_better)
            << " speedup_b_better=" << cgr::FormatDouble(s.speedup_b_better) << "\n";
  return 0;
}

struct OracleArgs {
  int n = 8;
  int trials = 20;
  std::uint64_t seed = 0;
};

// Heuristic pricing never beats exhaustive enumeration, and the unpruned
// DFS reproduces it exactly.
int RunOracleCheck(const OracleArgs& args) {
  int failures = 0;
  for (int t = 0; t < args.trials; ++t) {
    const std::uint64_t seed =
        cgr::DeriveSeed(args.seed, static_cast<std::uint64_t>(cgr::Stream::kTrainingInstance),
                        static_cast<std::uint64_t>(t));
    cgr::GenConfig gen;
    gen.n = args.n;
    gen.seed = seed;
    const cgr::VrptwInstance instance = cgr::GenerateInstance(gen);
    const cgr::DualSample duals = cgr::SampleDuals(instance, seed);
    const cgr::PricingInstance pricing = cgr::BuildPricing(instance, duals.duals);
    const cgr::ReducedGraph mask = cgr::NoReduction(pricing);
    const cgr::OracleResult oracle = cgr::ExactOracle(pricing, mask);
    const double exhaustive = std::min(
        0.0, cgr::DpPrice(pricing, mask, cgr::DpParams::Exhaustive(), seed).best_reduced_cost());
    const double baseline = std::min(
        0.0, cgr::DpPrice(pricing, mask, cgr::DpParams::Baseline(), seed).best_reduced_cost());
    const bool ok = exhaustive == oracle.optimum && baseline >= oracle.optimum;
    if (!ok) ++failures;
    std::cout << "trial " << t << ": oracle=" << cgr::FormatDouble(oracle.optimum)
              << " exhaustive=" << cgr::FormatDouble(exhaustive)
              << " baseline=" << cgr::FormatDouble(baseline) << " paths=" << oracle.feasible_paths
              << (ok ? " ok" : " MISMATCH") << "\n";
  }
  std::cout << (args.trials - failures) << "/" << args.trials << " trials consistent\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Column generation for the VRPTW root LP with pricing-graph reduction"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Generate random instances");
  generate->add_option("--n", gen.n, "Number of customers")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--out", gen.out, "Instance JSON file, or directory with --count")
      ->required();
  generate->add_option("--count", gen.count, "Write a training set of this many samples")
      ->check(CLI::PositiveNumber);
  generate->add_option("--capacity", gen.capacity, "Vehicle capacity (default by size)");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Run column generation on one instance");
  solve->add_option("--instance", solve_args.instance, "Instance (.json or Solomon text)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--config", solve_args.config, "CgConfig JSON; flags override it")
      ->check(CLI::ExistingFile);
  solve->add_option("--strategy", solve_args.strategy, "ulgr | be2 | none")
      ->check(CLI::IsMember({"ulgr", "be2", "none"}));
  auto* heatmap = solve->add_option("--heatmap", solve_args.heatmap,
                                    "Directory of per-iteration iter_<k>.hmap files");
  auto* surrogate =
      solve->add_option("--surrogate", solve_args.surrogate, "Surrogate heat-map temperature tau");
  heatmap->excludes(surrogate);
  auto* time_limit = solve->add_option("--time-limit", solve_args.time_limit, "Seconds");
  auto* iter_limit = solve->add_option("--iter-limit", solve_args.iter_limit, "CG iterations")
                         ->check(CLI::PositiveNumber);
  time_limit->excludes(iter_limit);
  solve->add_option("--expansion-limit", solve_args.expansion_limit,
                    "Per-worker DFS expansion budget (deterministic pricing)");
  solve->add_option("--threads", solve_args.threads, "Pricing threads (0 = hardware)");
  solve->add_option("--pricing", solve_args.pricing, "heuristic | exact")
      ->check(CLI::IsMember({"heuristic", "exact"}));
  solve->add_option("--seed", solve_args.seed, "Random seed")->required();
  solve->add_option("--log", solve_args.log, "Per-iteration CSV log")->required();
  solve->add_option("--run-json", solve_args.run_json, "Full run record as JSON");

  CompareArgs cmp;
  CLI::App* compare = app.add_subcommand("compare", "Compare two configurations");
  compare->add_option("--instances", cmp.instances, "Directory of instances")
      ->required()
      ->check(CLI::ExistingDirectory);
  compare->add_option("--a", cmp.a, "CgConfig JSON of method A")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--b", cmp.b, "CgConfig JSON of method B")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--out", cmp.out, "Per-instance CSV; summary and rc series beside it")
      ->required();
  compare->add_option("--time-axis", cmp.time_axis, "wall_ms | iteration")
      ->check(CLI::IsMember({"wall_ms", "iteration"}));

  OracleArgs oracle;
  CLI::App* oracle_check =
      app.add_subcommand("oracle-check", "Check DP pricing against exhaustive enumeration");
  oracle_check->add_option("--n", oracle.n, "Customers per instance")
      ->required()
      ->check(CLI::Range(1, cgr::kOracleMaxCustomers));
  oracle_check->add_option("--trials", oracle.trials, "Number of random instances")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle_check->add_option("--seed", oracle.seed, "Random seed");

  std::string convert_in;
  std::string convert_out;
  CLI::App* convert = app.add_subcommand("convert", "Convert a Solomon text file to JSON");
  convert->add_option("--in", convert_in, "Solomon / Gehring-Homberger file")
      ->required()
      ->check(CLI::ExistingFile);
  convert->add_option("--out", convert_out, "Instance JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return RunGenerate(gen);
    if (*solve) return RunSolve(solve_args);
    if (*compare) return RunCompare(cmp);
    if (*oracle_check) return RunOracleCheck(oracle);
    if (*convert) {
      cgr::WriteInstance(LoadInstance(convert_in), convert_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
