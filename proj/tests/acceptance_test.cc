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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Each criterion is checked against the
// independent reference implementations in support/.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cgr/cg_driver.h"
#include "cgr/heatmap.h"
#include "cgr/instance.h"
#include "cgr/instance_gen.h"
#include "cgr/local_search.h"
#include "cgr/metrics.h"
#include "cgr/pricing_dp.h"
#include "cgr/reduction.h"
#include "cgr/rng.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace cgr {
namespace {

using ::cgr::testing::FullMasterOptimum;
using ::cgr::testing::GeneratedInstance;
using ::cgr::testing::MinReducedCost;
using ::cgr::testing::NaiveHeat;
using ::cgr::testing::RandomRowStochastic;
using ::cgr::testing::SampledDuals;
using ::cgr::testing::SimulateRoute;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  std::string first_failure;

  void Fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
    pass = false;
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(double v, int precision = 6) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

// ---------------------------------------------------------------------------
// LP-optimality certificate.

Outcome LpOptimality() {
  Outcome out;
  double worst_error = 0.0;
  double slowest = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int n = 5 + k % 4;
    const VrptwInstance inst = GeneratedInstance(n, 1000 + static_cast<std::uint64_t>(k));
    CgConfig cfg;
    cfg.strategy = Strategy::kNone;
    cfg.pricing = PricingMode::kExact;
    cfg.time_limit_s = 0.0;
    cfg.stall_iterations = 0;
    cfg.seed = static_cast<std::uint64_t>(k);
    const auto started = Clock::now();
    const CgRun run = Run(inst, cfg);
    const double elapsed = Seconds(started);
    slowest = std::max(slowest, elapsed);
    const double reference = FullMasterOptimum(inst);
    const double error = std::abs(run.final_objective - reference);
    worst_error = std::max(worst_error, error);
    const std::string tag = "instance " + std::to_string(k) + " (n=" + std::to_string(n) + ")";
    if (run.reason != Termination::kPricedOut) {
      out.Fail(tag + " ended " + std::string(TerminationName(run.reason)));
    }
    if (!(error <= 1e-6)) out.Fail(tag + " objective off by " + Fmt(error));
    if (elapsed >= 10.0) out.Fail(tag + " took " + Fmt(elapsed) + " s");
  }
  out.detail = "20 instances, max |obj - enumeration LP| = " + Fmt(worst_error) + ", slowest run " +
               Fmt(slowest, 3) + " s";
  return out;
}

// ---------------------------------------------------------------------------
// Oracle dominance.

Outcome OracleDominance() {
  Outcome out;
  int exhaustive_checked = 0;
  int dp_found_optimum = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 9;  // 2..10
    const auto seed = 2000 + static_cast<std::uint64_t>(k);
    const VrptwInstance inst = GeneratedInstance(n, seed);
    const PricingInstance pricing = BuildPricing(inst, SampledDuals(inst, seed));
    const ReducedGraph mask = NoReduction(pricing);
    const double reference = MinReducedCost(inst, pricing.duals);
    const OracleResult oracle = ExactOracle(pricing, mask);
    const std::string tag = "instance " + std::to_string(k) + " (n=" + std::to_string(n) + ")";
    if (std::abs(oracle.optimum - reference) > 1e-9) {
      out.Fail(tag + ": library oracle " + Fmt(oracle.optimum, 12) + " vs reference " +
               Fmt(reference, 12));
    }
    const PricingResult heuristic = DpPrice(pricing, mask, DpParams::Baseline(), seed);
    const double best = std::min(0.0, heuristic.best_reduced_cost());
    if (best < oracle.optimum - 1e-9) {
      out.Fail(tag + ": heuristic " + Fmt(best, 12) + " below optimum " + Fmt(oracle.optimum, 12));
    }
    if (std::abs(best - oracle.optimum) <= 1e-9) ++dp_found_optimum;
    if (n <= 8) {
      const PricingResult exhaustive = DpPrice(pricing, mask, DpParams::Exhaustive(), seed);
      const double exact = std::min(0.0, exhaustive.best_reduced_cost());
      if (exact != oracle.optimum) {
        out.Fail(tag + ": exhaustive " + Fmt(exact, 17) + " != optimum " + Fmt(oracle.optimum, 17));
      }
      ++exhaustive_checked;
    }
  }
  out.detail = "200 instances (n 2..10); heuristic matched optimum on " +
               std::to_string(dp_found_optimum) + "; exhaustive == oracle on " +
               std::to_string(exhaustive_checked) + " (n <= 8)";
  return out;
}

// ---------------------------------------------------------------------------
// Heat-map algebra.

Outcome HeatMapAlgebra() {
  Outcome out;
  Rng rng(3000);
  double worst = 0.0;
  double worst_row = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + rng.Index(49);  // 2..50 nodes
    const DoubleMatrix t = RandomRowStochastic(n, rng, k % 3 == 0 ? 0.5 : 0.0);
    const DoubleMatrix fast = HeatFromT(t);
    const DoubleMatrix slow = NaiveHeat(t);
    for (std::size_t e = 0; e < fast.data().size(); ++e) {
      worst = std::max(worst, std::abs(fast.data()[e] - slow.data()[e]));
    }
    const HeatMapAdjusted adj = Adjust(fast, 10);
    const DoubleMatrix& p = adj.probabilities();
    const std::string tag = "matrix " + std::to_string(k);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = p.row(i);
      const double sum = std::accumulate(row.begin(), row.end(), 0.0);
      worst_row = std::max(worst_row, std::abs(sum - 1.0));
      if (i > 0 &&
          (!adj.InSupport(0, static_cast<int>(i)) || !adj.InSupport(static_cast<int>(i), 0))) {
        out.Fail(tag + ": depot arc missing for node " + std::to_string(i));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if ((p(i, j) > 0.0) != (p(j, i) > 0.0)) out.Fail(tag + ": asymmetric support");
      }
    }
  }
  if (worst > 1e-12) out.Fail("heat map differs from reference by " + Fmt(worst));
  if (worst_row > 1e-9) out.Fail("row sum off by " + Fmt(worst_row));
  out.detail = "100 matrices, max |H - reference| = " + Fmt(worst) +
               ", max |row sum - 1| = " + Fmt(worst_row);
  return out;
}

// ---------------------------------------------------------------------------
// Local-search safety.

Outcome LocalSearchSafety() {
  Outcome out;
  int improved = 0;
  for (int k = 0; k < 500; ++k) {
    const int n = 4 + k % 9;  // 4..12
    const auto seed = 4000 + static_cast<std::uint64_t>(k);
    const VrptwInstance inst = GeneratedInstance(n, seed / 2);
    const PricingInstance pricing = BuildPricing(inst, SampledDuals(inst, seed));
    const HeatMapAdjusted hmap = Adjust(HeatFromT(SurrogateT(pricing, 0.1)), 10);
    const ReducedGraph mask = UlgrMask(hmap);
    const PricingResult seeds = ConstructInitial(pricing, mask, seed);
    const std::string tag = "pair " + std::to_string(k);
    if (seeds.columns.empty()) {
      out.Fail(tag + ": no construction column");
      continue;
    }
    const Column& start = seeds.columns[k % seeds.columns.size()];
    Rng rng = Rng::ForStream(seed, Stream::kLocalSearchWorker);
    const Column result = LsImprove(start, pricing, hmap, LsParams{}, rng);
    const auto sim = SimulateRoute(result.sequence, inst);
    if (!sim.feasible) out.Fail(tag + ": infeasible output");
    if (result.reduced_cost > start.reduced_cost) out.Fail(tag + ": worsened");
    const double bound = ExactOracle(pricing, NoReduction(pricing)).optimum;
    if (result.reduced_cost < bound - 1e-9) out.Fail(tag + ": below exact optimum");
    if (result.reduced_cost < start.reduced_cost) ++improved;
  }
  out.detail = "500 pairs (n 4..12), " + std::to_string(improved) + " strictly improved";
  return out;
}

// ---------------------------------------------------------------------------
// Desk-scale runs, shared by the monotonicity and comparison criteria.

CgConfig DeskConfig(Strategy strategy, std::uint64_t seed) {
  CgConfig cfg;
  cfg.strategy = strategy;
  cfg.time_limit_s = 0.0;
  cfg.iteration_limit = 200;
  // Expansion budgets instead of wall-clock budgets keep the runs
  // reproducible on any machine.
  for (DpParams* dp : {&cfg.dp, &cfg.construction}) {
    dp->time_limit_s = 0.0;
    dp->expansion_limit = 5000;
  }
  cfg.seed = seed;
  cfg.record_trace = true;
  return cfg;
}

struct DeskRuns {
  std::vector<std::string> names;
  std::vector<VrptwInstance> instances;
  std::map<Strategy, std::vector<CgRun>> runs;
};

const DeskRuns& Desk() {
  static const DeskRuns* desk = [] {
    auto* d = new DeskRuns;
    for (int n : {30, 60}) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        d->names.push_back("n" + std::to_string(n) + "_s" + std::to_string(seed));
        d->instances.push_back(GeneratedInstance(n, seed));
      }
    }
    for (Strategy s : {Strategy::kUlgr, Strategy::kBe2, Strategy::kNone}) {
      for (std::size_t k = 0; k < d->instances.size(); ++k) {
        d->runs[s].push_back(Run(d->instances[k], DeskConfig(s, k)));
      }
    }
    return d;
  }();
  return *desk;
}

// Checks one run's log against the independent simulator.
void CheckMonotoneRun(const VrptwInstance& inst, const CgRun& run, const std::string& tag,
                      Outcome& out, int& columns_checked) {
  for (std::size_t k = 1; k < run.iterations.size(); ++k) {
    if (run.iterations[k].objective > run.iterations[k - 1].objective + 1e-9) {
      out.Fail(tag + ": objective rose at iteration " + std::to_string(k));
    }
  }
  if (run.trace.size() != run.iterations.size()) {
    out.Fail(tag + ": trace length mismatch");
    return;
  }
  for (std::size_t k = 0; k < run.trace.size(); ++k) {
    for (const Column& c : run.trace[k].admitted) {
      const auto sim = SimulateRoute(c.sequence, inst);
      double rc = sim.cost;
      for (int v : c.customers()) rc -= run.trace[k].duals[static_cast<std::size_t>(v)];
      if (!sim.feasible || !(rc < 0.0)) {
        out.Fail(tag + ": admitted column at iteration " + std::to_string(k) + " re-prices to " +
                 Fmt(rc));
      }
      ++columns_checked;
    }
  }
}

Outcome MonotoneCg() {
  Outcome out;
  int runs = 0;
  int columns = 0;
  // Exact-pricing runs on small instances.
  for (int k = 0; k < 10; ++k) {
    const VrptwInstance inst = GeneratedInstance(6 + k % 3, 5000 + static_cast<std::uint64_t>(k));
    CgConfig cfg;
    cfg.strategy = Strategy::kNone;
    cfg.pricing = PricingMode::kExact;
    cfg.time_limit_s = 0.0;
    cfg.record_trace = true;
    CheckMonotoneRun(inst, Run(inst, cfg), "exact run " + std::to_string(k), out, columns);
    ++runs;
  }
  const DeskRuns& desk = Desk();
  for (const auto& [strategy, list] : desk.runs) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      CheckMonotoneRun(desk.instances[k], list[k],
                       std::string(StrategyName(strategy)) + " " + desk.names[k], out, columns);
      ++runs;
    }
  }
  out.detail = std::to_string(runs) + " runs, " + std::to_string(columns) +
               " admitted columns re-priced independently";
  return out;
}

// ---------------------------------------------------------------------------
// BE2 cardinality.

Outcome Be2Cardinality() {
  Outcome out;
  for (int k = 0; k < 50; ++k) {
    const int n = 5 + 3 * k;
    const auto seed = 6000 + static_cast<std::uint64_t>(k);
    const VrptwInstance inst = GeneratedInstance(n, seed);
    const PricingInstance pricing = BuildPricing(inst, SampledDuals(inst, seed));
    const ReducedGraph g = Be2(pricing, 0.2);
    const std::size_t arcs = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n);
    // Integer ceiling of arcs / 5.
    const std::size_t expected = (arcs + 4) / 5;
    std::size_t kept = 0;
    for (unsigned char v : g.keep.data()) kept += v;
    if (kept != expected || g.retained != expected) {
      out.Fail("n=" + std::to_string(n) + ": kept " + std::to_string(kept) + ", expected " +
               std::to_string(expected));
    }
  }
  // Rounded figures often quoted for these sizes.
  std::ostringstream sizes;
  const std::vector<std::pair<int, double>> reported = {
      {200, 8000.0}, {500, 50000.0}, {1000, 200000.0}};
  for (const auto& [n, rough] : reported) {
    const VrptwInstance inst = GeneratedInstance(n, 7000 + static_cast<std::uint64_t>(n));
    const PricingInstance pricing = BuildPricing(inst, SampledDuals(inst, 1));
    const std::size_t kept = Be2(pricing, 0.2).retained;
    const std::size_t formula =
        (static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) + 4) / 5;
    // 0.2 n (n + 1) exceeds the rounded figure 0.2 n^2 by exactly 0.2 n.
    const double excess = static_cast<double>(kept) - rough;
    if (kept != formula || std::abs(excess - 0.2 * n) > 0.5) {
      out.Fail("n=" + std::to_string(n) + ": kept " + std::to_string(kept));
    }
    sizes << " n=" << n << ":" << kept;
  }
  out.detail = "50 instances exact;" + sizes.str();
  return out;
}

// ---------------------------------------------------------------------------
// Desk-scale comparison report.

std::filesystem::path ReportDir() {
  const char* env = std::getenv("CGR_ACCEPTANCE_OUT");
  const std::filesystem::path dir = env != nullptr && *env != '\0'
                                        ? std::filesystem::path(env)
                                        : std::filesystem::temp_directory_path() / "cgr_acceptance";
  std::filesystem::create_directories(dir);
  return dir;
}

// The reduced graph of a ULGR iteration, rebuilt from the logged duals,
// must admit at least one feasible route.
bool UlgrGraphFeasible(const VrptwInstance& inst, const std::vector<double>& duals,
                       const CgConfig& cfg) {
  const PricingInstance pricing = BuildPricing(inst, duals);
  const ReducedGraph mask =
      UlgrMask(Adjust(HeatFromT(SurrogateT(pricing, cfg.surrogate_tau)), cfg.top_m));
  for (int i = 1; i <= inst.num_customers(); ++i) {
    if (mask.Keeps(0, i) && mask.Keeps(i, 0) && SimulateRoute({0, i, 0}, inst).feasible) {
      return true;
    }
  }
  return false;
}

Outcome DeskComparison() {
  Outcome out;
  const DeskRuns& desk = Desk();
  const auto dir = ReportDir();
  const std::vector<std::pair<Strategy, Strategy>> pairs = {{Strategy::kUlgr, Strategy::kNone},
                                                            {Strategy::kUlgr, Strategy::kBe2},
                                                            {Strategy::kBe2, Strategy::kNone}};
  std::ostringstream gaps;
  for (const auto& [a, b] : pairs) {
    const ComparisonReport report =
        CompareRunSets(desk.names, desk.runs.at(a), desk.runs.at(b), TimeAxis::kIteration);
    const std::string stem = std::string(StrategyName(a)) + "_vs_" + std::string(StrategyName(b));
    {
      std::ofstream rows(dir / (stem + ".csv"));
      WriteComparisonCsv(report, rows);
      std::ofstream summary(dir / (stem + ".summary.csv"));
      WriteSummaryCsv(report.summary, summary);
      std::ofstream series(dir / (stem + ".rc_series.csv"));
      WriteRcSeriesCsv(report.rc_series, series);
    }
    if (report.rows.size() != desk.names.size() || !std::isfinite(report.summary.obj_gap)) {
      out.Fail(stem + ": incomplete report");
    }
    gaps << " " << stem << " gap=" << Fmt(100.0 * report.summary.obj_gap, 3)
         << "% J<=" << report.summary.j_less;
  }

  int clean = 0;
  int ulgr_runs = 0;
  const CgConfig reference = DeskConfig(Strategy::kUlgr, 0);
  const auto& ulgr = desk.runs.at(Strategy::kUlgr);
  std::map<Termination, int> be2_reasons;
  for (const CgRun& run : desk.runs.at(Strategy::kBe2)) ++be2_reasons[run.reason];
  for (std::size_t k = 0; k < ulgr.size(); ++k) {
    ++ulgr_runs;
    const CgRun& run = ulgr[k];
    bool ok = run.reason != Termination::kStalled && run.reason != Termination::kTimeLimit;
    for (const CgTraceEntry& entry : run.trace) {
      ok = ok && UlgrGraphFeasible(desk.instances[k], entry.duals, reference);
    }
    if (ok) {
      ++clean;
    } else {
      out.Fail("ulgr " + desk.names[k] + " ended " + std::string(TerminationName(run.reason)));
    }
  }
  out.detail = std::to_string(clean) + "/" + std::to_string(ulgr_runs) +
               " ULGR runs without premature stall; BE2 priced-out " +
               std::to_string(be2_reasons[Termination::kPricedOut]) + "/" +
               std::to_string(desk.runs.at(Strategy::kBe2).size()) + ";" + gaps.str() +
               "; reports in " + dir.string();
  return out;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {"lp-optimality-certificate", LpOptimality},
      {"oracle-dominance", OracleDominance},
      {"heat-map-algebra", HeatMapAlgebra},
      {"local-search-safety", LocalSearchSafety},
      {"monotone-cg", MonotoneCg},
      {"be2-cardinality", Be2Cardinality},
      {"desk-scale-comparison", DeskComparison},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto started = Clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    std::string line = std::string(outcome.pass ? "PASS " : "FAIL ") + c.name + " -- " +
                       outcome.detail + " [" + Fmt(Seconds(started), 3) + " s]";
    if (!outcome.pass) {
      line += " first failure: " + outcome.first_failure + " (" + std::to_string(outcome.failures) +
              " total)";
      ++failed;
    }
    std::cout << line << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace cgr

int main() { return cgr::Main(); }
