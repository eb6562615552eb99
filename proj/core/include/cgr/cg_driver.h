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

#ifndef CGR_CG_DRIVER_H_
#define CGR_CG_DRIVER_H_

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cgr/instance.h"
#include "cgr/local_search.h"
#include "cgr/pricing_dp.h"
#include "cgr/reduction.h"

namespace cgr {

// Columns are admitted to the master only below this reduced cost.
inline constexpr double kAdmitTolerance = 1e-9;

enum class PricingMode {
  kHeuristic,  // DP heuristic (BE2, none) or construction + local search (ULGR)
  kExact,      // exhaustive enumeration on the reduced graph; small n only
};

std::string_view PricingModeName(PricingMode mode);
PricingMode ParsePricingMode(std::string_view name);

struct CgConfig {
  Strategy strategy = Strategy::kUlgr;
  // Wall-clock budget in seconds; <= 0 disables.
  double time_limit_s = 3600.0;
  // Maximum number of CG iterations; 0 disables.
  int iteration_limit = 0;
  // ULGR heat-map source: iteration k reads <heatmap_dir>/iter_<k>.hmap
  // (five digits, zero padded). Missing files, or an empty directory name,
  // fall back to the surrogate softmax(-q / surrogate_tau).
  std::string heatmap_dir;
  double surrogate_tau = 0.1;
  double beta = 0.2;  // BE2 retention fraction
  int top_m = 10;     // ULGR heat-map retention per customer row
  PricingMode pricing = PricingMode::kHeuristic;
  DpParams dp = DpParams::Baseline();
  DpParams construction = DpParams::Construction();
  LsParams ls;
  // Iterations without an objective decrease above 1e-9 before stopping;
  // 0 disables.
  int stall_iterations = 50;
  std::uint64_t seed = 0;
  // Keeps the duals and admitted columns of every iteration in the run.
  bool record_trace = false;

  // Throws std::invalid_argument on inconsistent settings.
  void Validate() const;
};

std::string CgConfigToJson(const CgConfig& cfg);
// Missing keys keep their defaults; unknown keys are rejected.
CgConfig CgConfigFromJson(const std::string& text);

enum class Termination { kPricedOut, kTimeLimit, kIterationLimit, kStalled };

std::string_view TerminationName(Termination t);
Termination ParseTermination(std::string_view name);

struct CgIteration {
  int iter = 0;
  // Elapsed time when this iteration's master objective became available.
  double wall_ms = 0.0;
  double objective = 0.0;
  // Best reduced cost returned by pricing; +inf when pricing returned nothing.
  double best_rc = std::numeric_limits<double>::infinity();
  int cols_found = 0;
  int cols_added = 0;
  // Pricing-graph construction, reduction and pricing.
  double pricing_ms = 0.0;
  std::size_t graph_arcs = 0;

  friend bool operator==(const CgIteration&, const CgIteration&) = default;
};

struct CgTraceEntry {
  std::vector<double> duals;  // per node
  std::vector<Column> admitted;

  friend bool operator==(const CgTraceEntry&, const CgTraceEntry&) = default;
};

struct CgRun {
  std::vector<CgIteration> iterations;
  double final_objective = 0.0;
  Termination reason = Termination::kPricedOut;
  int num_columns = 0;
  double total_ms = 0.0;
  // Filled when CgConfig::record_trace is set, parallel to iterations.
  std::vector<CgTraceEntry> trace;

  friend bool operator==(const CgRun&, const CgRun&) = default;
};

// Greedy nearest-neighbour routes covering every customer exactly once.
// Throws InstanceError naming a customer that is infeasible on its own.
std::vector<Column> InitColumns(const VrptwInstance& instance);

// Runs column generation at the root node until pricing admits nothing or a
// budget runs out.
CgRun Run(const VrptwInstance& instance, const CgConfig& cfg);

// Header: iter,wall_ms,objective,best_rc,cols_added,pricing_ms
void WriteIterationCsv(const CgRun& run, std::ostream& out);

std::string CgRunToJson(const CgRun& run);
CgRun CgRunFromJson(const std::string& text);

}  // namespace cgr

#endif  // CGR_CG_DRIVER_H_
