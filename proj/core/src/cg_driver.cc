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

#include "cgr/cg_driver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <utility>

#include "cgr/format.h"
#include "cgr/heatmap.h"
#include "cgr/rmp.h"
#include "cgr/rng.h"
#include "json.hpp"

namespace cgr {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// JSON has no infinities; they travel as the strings "inf" / "-inf".
Json NumberToJson(double v) {
  if (std::isfinite(v)) return v;
  return FormatDouble(v);
}

double NumberFromJson(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw std::invalid_argument("expected a number, got " + j.dump());
}

// Reads the keys of `j` into fields via `read(key, value)`; rejects keys the
// reader does not know.
template <typename Reader>
void ReadObject(const Json& j, std::string_view what, Reader read) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!read(key, value)) {
      throw std::invalid_argument("unknown " + std::string(what) + " key '" + key + "'");
    }
  }
}

Json DpToJson(const DpParams& p) {
  return Json{{"p_lb", NumberToJson(p.p_lb)},
              {"time_limit_s", p.time_limit_s},
              {"expansion_limit", p.expansion_limit},
              {"accept_max", NumberToJson(p.accept_max)},
              {"accept_inclusive", p.accept_inclusive},
              {"rollback_enabled", p.rollback_enabled},
              {"rollback_fraction", p.rollback_fraction},
              {"rollback_rc_threshold", p.rollback_rc_threshold},
              {"success_threads", p.success_threads},
              {"max_threads", p.max_threads},
              {"columns_per_worker", p.columns_per_worker},
              {"threads", p.threads}};
}

DpParams DpFromJson(const Json& j, DpParams p) {
  ReadObject(j, "dp", [&](const std::string& key, const Json& v) {
    if (key == "p_lb")
      p.p_lb = NumberFromJson(v);
    else if (key == "time_limit_s")
      p.time_limit_s = v.get<double>();
    else if (key == "expansion_limit")
      p.expansion_limit = v.get<std::int64_t>();
    else if (key == "accept_max")
      p.accept_max = NumberFromJson(v);
    else if (key == "accept_inclusive")
      p.accept_inclusive = v.get<bool>();
    else if (key == "rollback_enabled")
      p.rollback_enabled = v.get<bool>();
    else if (key == "rollback_fraction")
      p.rollback_fraction = v.get<double>();
    else if (key == "rollback_rc_threshold")
      p.rollback_rc_threshold = v.get<double>();
    else if (key == "success_threads")
      p.success_threads = v.get<int>();
    else if (key == "max_threads")
      p.max_threads = v.get<int>();
    else if (key == "columns_per_worker")
      p.columns_per_worker = v.get<int>();
    else if (key == "threads")
      p.threads = v.get<int>();
    else
      return false;
    return true;
  });
  return p;
}

void ValidateDp(const DpParams& p, std::string_view what) {
  const std::string name(what);
  if (!(p.rollback_fraction > 0.0 && p.rollback_fraction < 1.0)) {
    throw std::invalid_argument(name + ": rollback_fraction must lie in (0, 1)");
  }
  if (!(p.p_lb < p.accept_max)) {
    throw std::invalid_argument(name + ": p_lb must be below accept_max");
  }
  if (p.success_threads < 1 || p.max_threads < 1) {
    throw std::invalid_argument(name + ": thread caps must be positive");
  }
  if (p.expansion_limit < 0) throw std::invalid_argument(name + ": negative expansion_limit");
}

Json ColumnToJson(const Column& c) {
  return Json{{"sequence", c.sequence}, {"cost", c.cost}, {"reduced_cost", c.reduced_cost}};
}

Column ColumnFromJson(const Json& j) {
  Column c;
  c.sequence = j.at("sequence").get<std::vector<int>>();
  c.cost = j.at("cost").get<double>();
  c.reduced_cost = j.at("reduced_cost").get<double>();
  return c;
}

}  // namespace

std::string_view PricingModeName(PricingMode mode) {
  return mode == PricingMode::kExact ? "exact" : "heuristic";
}

PricingMode ParsePricingMode(std::string_view name) {
  if (name == "heuristic") return PricingMode::kHeuristic;
  if (name == "exact") return PricingMode::kExact;
  throw std::invalid_argument("unknown pricing mode '" + std::string(name) + "'");
}

void CgConfig::Validate() const {
  if (!(surrogate_tau > 0.0)) throw std::invalid_argument("surrogate_tau must be positive");
  if (!(beta > 0.0) || beta > 1.0) throw std::invalid_argument("beta must lie in (0, 1]");
  if (top_m < 1) throw std::invalid_argument("top_m must be at least 1");
  if (iteration_limit < 0) throw std::invalid_argument("negative iteration_limit");
  if (stall_iterations < 0) throw std::invalid_argument("negative stall_iterations");
  if (ls.c_e < 1) throw std::invalid_argument("ls.c_e must be at least 1");
  if (ls.workers < 1) throw std::invalid_argument("ls.workers must be at least 1");
  ValidateDp(dp, "dp");
  ValidateDp(construction, "construction");
}

std::string CgConfigToJson(const CgConfig& cfg) {
  Json j{{"strategy", StrategyName(cfg.strategy)},
         {"time_limit_s", cfg.time_limit_s},
         {"iteration_limit", cfg.iteration_limit},
         {"heatmap_dir", cfg.heatmap_dir},
         {"surrogate_tau", cfg.surrogate_tau},
         {"beta", cfg.beta},
         {"top_m", cfg.top_m},
         {"pricing", PricingModeName(cfg.pricing)},
         {"dp", DpToJson(cfg.dp)},
         {"construction", DpToJson(cfg.construction)},
         {"ls",
          {{"c_e", cfg.ls.c_e},
           {"workers", cfg.ls.workers},
           {"threads", cfg.ls.threads},
           {"max_redraws", cfg.ls.max_redraws}}},
         {"stall_iterations", cfg.stall_iterations},
         {"seed", cfg.seed},
         {"record_trace", cfg.record_trace}};
  return j.dump(2) + "\n";
}

CgConfig CgConfigFromJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  CgConfig cfg;
  try {
    ReadObject(j, "config", [&](const std::string& key, const Json& v) {
      if (key == "strategy")
        cfg.strategy = ParseStrategy(v.get<std::string>());
      else if (key == "time_limit_s")
        cfg.time_limit_s = v.get<double>();
      else if (key == "iteration_limit")
        cfg.iteration_limit = v.get<int>();
      else if (key == "heatmap_dir")
        cfg.heatmap_dir = v.get<std::string>();
      else if (key == "surrogate_tau")
        cfg.surrogate_tau = v.get<double>();
      else if (key == "beta")
        cfg.beta = v.get<double>();
      else if (key == "top_m")
        cfg.top_m = v.get<int>();
      else if (key == "pricing")
        cfg.pricing = ParsePricingMode(v.get<std::string>());
      else if (key == "dp")
        cfg.dp = DpFromJson(v, cfg.dp);
      else if (key == "construction")
        cfg.construction = DpFromJson(v, cfg.construction);
      else if (key == "ls") {
        ReadObject(v, "ls", [&](const std::string& k, const Json& x) {
          if (k == "c_e")
            cfg.ls.c_e = x.get<int>();
          else if (k == "workers")
            cfg.ls.workers = x.get<int>();
          else if (k == "threads")
            cfg.ls.threads = x.get<int>();
          else if (k == "max_redraws")
            cfg.ls.max_redraws = x.get<int>();
          else
            return false;
          return true;
        });
      } else if (key == "stall_iterations")
        cfg.stall_iterations = v.get<int>();
      else if (key == "seed")
        cfg.seed = v.get<std::uint64_t>();
      else if (key == "record_trace")
        cfg.record_trace = v.get<bool>();
      else
        return false;
      return true;
    });
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  cfg.Validate();
  return cfg;
}

std::string_view TerminationName(Termination t) {
  switch (t) {
    case Termination::kPricedOut:
      return "priced-out";
    case Termination::kTimeLimit:
      return "time-limit";
    case Termination::kIterationLimit:
      return "iteration-limit";
    case Termination::kStalled:
      return "stalled";
  }
  return "unknown";
}

Termination ParseTermination(std::string_view name) {
  for (Termination t : {Termination::kPricedOut, Termination::kTimeLimit,
                        Termination::kIterationLimit, Termination::kStalled}) {
    if (TerminationName(t) == name) return t;
  }
  throw std::invalid_argument("unknown termination reason '" + std::string(name) + "'");
}

std::vector<Column> InitColumns(const VrptwInstance& instance) {
  const int n = instance.num_customers();
  const std::vector<double> no_duals(static_cast<std::size_t>(n + 1), 0.0);
  for (int i = 1; i <= n; ++i) {
    const int route[] = {0, i, 0};
    const FeasibilityReport report = CheckFeasible(route, instance);
    if (!report) {
      throw InstanceError("customer " + std::to_string(i) +
                          " cannot be served by a dedicated route (" +
                          std::string(ViolationName(report.violation)) + ")");
    }
  }
  std::vector<Column> routes;
  std::vector<unsigned char> visited(static_cast<std::size_t>(n + 1), 0);
  int remaining = n;
  while (remaining > 0) {
    std::vector<int> seq{0};
    double departure = instance.node(0).ready;
    double load = 0.0;
    while (true) {
      const int last = seq.back();
      int best = -1;
      for (int j = 1; j <= n; ++j) {
        if (visited[static_cast<std::size_t>(j)]) continue;
        const Node& node = instance.node(j);
        if (load + node.demand > instance.capacity() + kFeasibilityTolerance) continue;
        const double arrival = departure + instance.travel(last, j);
        if (arrival > node.due + kFeasibilityTolerance) continue;
        const double leave = std::max(arrival, node.ready) + node.service;
        if (leave + instance.travel(j, 0) > instance.horizon() + kFeasibilityTolerance) continue;
        if (best < 0 || instance.travel(last, j) < instance.travel(last, best)) best = j;
      }
      if (best < 0) break;
      const Node& node = instance.node(best);
      departure = std::max(departure + instance.travel(last, best), node.ready) + node.service;
      load += node.demand;
      visited[static_cast<std::size_t>(best)] = 1;
      --remaining;
      seq.push_back(best);
    }
    seq.push_back(0);
    std::optional<Column> column = MakeColumn(seq, instance, no_duals);
    if (!column) throw std::logic_error("greedy construction produced an infeasible route");
    routes.push_back(std::move(*column));
  }
  return routes;
}

namespace {

DoubleMatrix HeatSource(const PricingInstance& pricing, const CgConfig& cfg, int iter) {
  if (!cfg.heatmap_dir.empty()) {
    char name[32];
    std::snprintf(name, sizeof(name), "iter_%05d.hmap", iter);
    const std::filesystem::path path = std::filesystem::path(cfg.heatmap_dir) / name;
    if (std::filesystem::exists(path)) {
      return LoadT(path, static_cast<std::size_t>(pricing.num_nodes()));
    }
  }
  return SurrogateT(pricing, cfg.surrogate_tau);
}

}  // namespace

CgRun Run(const VrptwInstance& instance, const CgConfig& cfg) {
  cfg.Validate();
  const auto started = Clock::now();
  CgRun run;
  RmpState rmp(instance);
  rmp.AddColumns(InitColumns(instance));
  double best_objective = std::numeric_limits<double>::infinity();
  int since_improvement = 0;
  for (int iter = 0;; ++iter) {
    if (cfg.iteration_limit > 0 && iter >= cfg.iteration_limit) {
      run.reason = Termination::kIterationLimit;
      break;
    }
    if (cfg.time_limit_s > 0.0 && ElapsedMs(started) >= cfg.time_limit_s * 1000.0) {
      run.reason = Termination::kTimeLimit;
      break;
    }
    rmp.Solve();
    CgIteration record;
    record.iter = iter;
    record.wall_ms = ElapsedMs(started);
    record.objective = rmp.objective();
    run.final_objective = rmp.objective();

    const auto pricing_started = Clock::now();
    const std::uint64_t seed =
        DeriveSeed(cfg.seed, static_cast<std::uint64_t>(Stream::kCgIteration),
                   static_cast<std::uint64_t>(iter));
    const PricingInstance pricing = BuildPricing(instance, rmp.duals());
    std::optional<HeatMapAdjusted> hmap;
    ReducedGraph mask;
    switch (cfg.strategy) {
      case Strategy::kNone:
        mask = NoReduction(pricing);
        break;
      case Strategy::kBe2:
        mask = Be2(pricing, cfg.beta);
        break;
      case Strategy::kUlgr:
        hmap = Adjust(HeatFromT(HeatSource(pricing, cfg, iter)), cfg.top_m);
        mask = UlgrMask(*hmap);
        break;
    }
    PricingResult priced;
    if (cfg.pricing == PricingMode::kExact) {
      OracleResult oracle = ExactOracle(pricing, mask);
      if (oracle.best.sequence.size() > 2) priced.columns.push_back(std::move(oracle.best));
    } else if (cfg.strategy == Strategy::kUlgr) {
      priced = LsPrice(pricing, mask, *hmap, cfg.ls, cfg.construction, seed);
    } else {
      priced = DpPrice(pricing, mask, cfg.dp, seed);
    }
    record.pricing_ms = ElapsedMs(pricing_started);
    record.graph_arcs = mask.retained;
    record.cols_found = static_cast<int>(priced.columns.size());
    record.best_rc = priced.best_reduced_cost();

    std::vector<Column> admitted;
    for (const Column& c : priced.columns) {
      if (c.reduced_cost < -kAdmitTolerance) admitted.push_back(c);
    }
    const std::size_t before = rmp.columns().size();
    record.cols_added = rmp.AddColumns(admitted);
    run.iterations.push_back(record);
    if (cfg.record_trace) {
      CgTraceEntry entry;
      entry.duals = rmp.duals();
      entry.admitted.assign(rmp.columns().begin() + static_cast<std::ptrdiff_t>(before),
                            rmp.columns().end());
      run.trace.push_back(std::move(entry));
    }
    if (record.cols_added == 0) {
      run.reason = Termination::kPricedOut;
      break;
    }
    if (record.objective < best_objective - 1e-9) {
      best_objective = record.objective;
      since_improvement = 0;
    } else if (cfg.stall_iterations > 0 && ++since_improvement >= cfg.stall_iterations) {
      run.reason = Termination::kStalled;
      break;
    }
  }
  run.num_columns = rmp.num_columns();
  run.total_ms = ElapsedMs(started);
  return run;
}

void WriteIterationCsv(const CgRun& run, std::ostream& out) {
  out << "iter,wall_ms,objective,best_rc,cols_added,pricing_ms\n";
  for (const CgIteration& it : run.iterations) {
    out << it.iter << ',' << FormatDouble(it.wall_ms) << ',' << FormatDouble(it.objective) << ','
        << FormatDouble(it.best_rc) << ',' << it.cols_added << ',' << FormatDouble(it.pricing_ms)
        << '\n';
  }
}

std::string CgRunToJson(const CgRun& run) {
  Json iterations = Json::array();
  for (const CgIteration& it : run.iterations) {
    iterations.push_back(Json{{"iter", it.iter},
                              {"wall_ms", it.wall_ms},
                              {"objective", it.objective},
                              {"best_rc", NumberToJson(it.best_rc)},
                              {"cols_found", it.cols_found},
                              {"cols_added", it.cols_added},
                              {"pricing_ms", it.pricing_ms},
                              {"graph_arcs", it.graph_arcs}});
  }
  Json trace = Json::array();
  for (const CgTraceEntry& entry : run.trace) {
    Json admitted = Json::array();
    for (const Column& c : entry.admitted) admitted.push_back(ColumnToJson(c));
    trace.push_back(Json{{"duals", entry.duals}, {"admitted", admitted}});
  }
  Json j{{"iterations", iterations},
         {"final_objective", run.final_objective},
         {"reason", TerminationName(run.reason)},
         {"num_columns", run.num_columns},
         {"total_ms", run.total_ms},
         {"trace", trace}};
  return j.dump(2) + "\n";
}

CgRun CgRunFromJson(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    CgRun run;
    for (const Json& it : j.at("iterations")) {
      CgIteration rec;
      rec.iter = it.at("iter").get<int>();
      rec.wall_ms = it.at("wall_ms").get<double>();
      rec.objective = it.at("objective").get<double>();
      rec.best_rc = NumberFromJson(it.at("best_rc"));
      rec.cols_found = it.at("cols_found").get<int>();
      rec.cols_added = it.at("cols_added").get<int>();
      rec.pricing_ms = it.at("pricing_ms").get<double>();
      rec.graph_arcs = it.at("graph_arcs").get<std::size_t>();
      run.iterations.push_back(rec);
    }
    run.final_objective = j.at("final_objective").get<double>();
    run.reason = ParseTermination(j.at("reason").get<std::string>());
    run.num_columns = j.at("num_columns").get<int>();
    run.total_ms = j.at("total_ms").get<double>();
    for (const Json& e : j.at("trace")) {
      CgTraceEntry entry;
      entry.duals = e.at("duals").get<std::vector<double>>();
      for (const Json& c : e.at("admitted")) entry.admitted.push_back(ColumnFromJson(c));
      run.trace.push_back(std::move(entry));
    }
    return run;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("run: ") + e.what());
  }
}

}  // namespace cgr
