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

#ifndef CGR_METRICS_H_
#define CGR_METRICS_H_

#include <ostream>
#include <string>
#include <vector>

#include "cgr/cg_driver.h"
#include "cgr/instance.h"

namespace cgr {

// Time axis used when locating the moment a run reaches an objective.
enum class TimeAxis {
  kWallMs,     // elapsed milliseconds
  kIteration,  // number of master solves (iteration index + 1); deterministic
};

std::string_view TimeAxisName(TimeAxis axis);
TimeAxis ParseTimeAxis(std::string_view name);

// Relative tolerance when comparing objectives across runs.
inline constexpr double kObjectiveTolerance = 1e-9;

// First time at which the run's objective drops to `target` (within
// kObjectiveTolerance), linearly interpolated between logged iterations.
// NaN when the target is never reached or the run has no iterations.
double TimeToReach(const CgRun& run, double target, TimeAxis axis);

struct InstanceComparison {
  std::string name;
  double obj_a = 0.0;
  double obj_b = 0.0;
  // (obj_a - obj_b) / obj_b
  double gap = 0.0;
  // obj_a < obj_b beyond the tolerance.
  bool a_better = false;
  bool b_better = false;
  // Time the better run (a on ties) needs to reach the other's final
  // objective, divided by the time the other run needs to reach it.
  double speedup = 0.0;
  int iterations_a = 0;
  int iterations_b = 0;
  double pricing_ms_a = 0.0;  // mean per iteration
  double pricing_ms_b = 0.0;
  Termination reason_a = Termination::kPricedOut;
  Termination reason_b = Termination::kPricedOut;
};

struct ComparisonSummary {
  int instances = 0;
  double obj_gap = 0.0;  // mean relative gap
  int j_less = 0;        // instances with obj_a < obj_b
  // Mean speed-up over instances where a is at least as good / where b is
  // strictly better; NaN when the set is empty.
  double speedup_a_better = 0.0;
  int count_a_not_worse = 0;
  double speedup_b_better = 0.0;
  int count_b_better = 0;
  double mean_iterations_a = 0.0;
  double mean_iterations_b = 0.0;
  double mean_pricing_ms_a = 0.0;
  double mean_pricing_ms_b = 0.0;
};

// Mean best reduced cost per iteration index over the runs that reached it
// with a finite value.
struct RcPoint {
  int iter = 0;
  double mean_a = 0.0;
  int count_a = 0;
  double mean_b = 0.0;
  int count_b = 0;
};

struct ComparisonReport {
  std::vector<InstanceComparison> rows;
  ComparisonSummary summary;
  std::vector<RcPoint> rc_series;
  std::vector<CgRun> runs_a;
  std::vector<CgRun> runs_b;
};

InstanceComparison CompareRuns(const std::string& name, const CgRun& a, const CgRun& b,
                               TimeAxis axis);

// Throws std::invalid_argument unless names, runs_a and runs_b have equal
// lengths.
ComparisonReport CompareRunSets(const std::vector<std::string>& names, std::vector<CgRun> runs_a,
                                std::vector<CgRun> runs_b, TimeAxis axis);

struct NamedInstance {
  std::string name;
  VrptwInstance instance;
};

// Runs both configurations on every instance, then CompareRunSets.
ComparisonReport Compare(const std::vector<NamedInstance>& instances, const CgConfig& cfg_a,
                         const CgConfig& cfg_b, TimeAxis axis);

void WriteComparisonCsv(const ComparisonReport& report, std::ostream& out);
void WriteSummaryCsv(const ComparisonSummary& summary, std::ostream& out);
void WriteRcSeriesCsv(const std::vector<RcPoint>& series, std::ostream& out);

}  // namespace cgr

#endif  // CGR_METRICS_H_
