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

#include "cgr/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cgr/format.h"

namespace cgr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double AxisValue(const CgIteration& it, TimeAxis axis) {
  return axis == TimeAxis::kWallMs ? it.wall_ms : static_cast<double>(it.iter + 1);
}

bool Reaches(double objective, double target) {
  return objective <= target + kObjectiveTolerance * std::max(1.0, std::abs(target));
}

double Ratio(double num, double den) {
  if (std::isnan(num) || std::isnan(den)) return kNaN;
  if (den <= 0.0) return num <= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

double MeanPricingMs(const CgRun& run) {
  if (run.iterations.empty()) return 0.0;
  double total = 0.0;
  for (const CgIteration& it : run.iterations) total += it.pricing_ms;
  return total / static_cast<double>(run.iterations.size());
}

double FinalObjective(const CgRun& run) {
  return run.iterations.empty() ? run.final_objective : run.iterations.back().objective;
}

}  // namespace

std::string_view TimeAxisName(TimeAxis axis) {
  return axis == TimeAxis::kWallMs ? "wall_ms" : "iteration";
}

TimeAxis ParseTimeAxis(std::string_view name) {
  if (name == "wall_ms") return TimeAxis::kWallMs;
  if (name == "iteration") return TimeAxis::kIteration;
  throw std::invalid_argument("unknown time axis '" + std::string(name) + "'");
}

double TimeToReach(const CgRun& run, double target, TimeAxis axis) {
  const auto& its = run.iterations;
  for (std::size_t k = 0; k < its.size(); ++k) {
    if (!Reaches(its[k].objective, target)) continue;
    const double x = AxisValue(its[k], axis);
    if (k == 0) return x;
    const double x_prev = AxisValue(its[k - 1], axis);
    const double drop = its[k - 1].objective - its[k].objective;
    if (!(drop > 0.0)) return x;
    const double frac = std::clamp((its[k - 1].objective - target) / drop, 0.0, 1.0);
    return x_prev + frac * (x - x_prev);
  }
  return kNaN;
}

InstanceComparison CompareRuns(const std::string& name, const CgRun& a, const CgRun& b,
                               TimeAxis axis) {
  InstanceComparison row;
  row.name = name;
  row.obj_a = FinalObjective(a);
  row.obj_b = FinalObjective(b);
  row.gap = (row.obj_a - row.obj_b) / row.obj_b;
  row.a_better = !Reaches(row.obj_b, row.obj_a);
  row.b_better = !Reaches(row.obj_a, row.obj_b);
  // The better run reaches the worse objective; the worse run's own time to
  // reach it is the denominator.
  const CgRun& better = row.b_better ? b : a;
  const CgRun& worse = row.b_better ? a : b;
  const double worse_obj = FinalObjective(worse);
  row.speedup = Ratio(TimeToReach(better, worse_obj, axis), TimeToReach(worse, worse_obj, axis));
  row.iterations_a = static_cast<int>(a.iterations.size());
  row.iterations_b = static_cast<int>(b.iterations.size());
  row.pricing_ms_a = MeanPricingMs(a);
  row.pricing_ms_b = MeanPricingMs(b);
  row.reason_a = a.reason;
  row.reason_b = b.reason;
  return row;
}

ComparisonReport CompareRunSets(const std::vector<std::string>& names, std::vector<CgRun> runs_a,
                                std::vector<CgRun> runs_b, TimeAxis axis) {
  if (names.size() != runs_a.size() || names.size() != runs_b.size()) {
    throw std::invalid_argument("comparison needs one run per instance for each configuration");
  }
  ComparisonReport report;
  ComparisonSummary& s = report.summary;
  s.instances = static_cast<int>(names.size());
  double sum_a_better = 0.0;
  double sum_b_better = 0.0;
  for (std::size_t r = 0; r < names.size(); ++r) {
    InstanceComparison row = CompareRuns(names[r], runs_a[r], runs_b[r], axis);
    s.obj_gap += row.gap;
    if (row.a_better) ++s.j_less;
    if (row.b_better) {
      ++s.count_b_better;
      sum_b_better += row.speedup;
    } else {
      ++s.count_a_not_worse;
      sum_a_better += row.speedup;
    }
    s.mean_iterations_a += row.iterations_a;
    s.mean_iterations_b += row.iterations_b;
    s.mean_pricing_ms_a += row.pricing_ms_a;
    s.mean_pricing_ms_b += row.pricing_ms_b;
    report.rows.push_back(std::move(row));
  }
  if (s.instances > 0) {
    const double count = s.instances;
    s.obj_gap /= count;
    s.mean_iterations_a /= count;
    s.mean_iterations_b /= count;
    s.mean_pricing_ms_a /= count;
    s.mean_pricing_ms_b /= count;
  }
  s.speedup_a_better = s.count_a_not_worse > 0 ? sum_a_better / s.count_a_not_worse : kNaN;
  s.speedup_b_better = s.count_b_better > 0 ? sum_b_better / s.count_b_better : kNaN;

  std::size_t longest = 0;
  for (const auto* runs : {&runs_a, &runs_b}) {
    for (const CgRun& run : *runs) longest = std::max(longest, run.iterations.size());
  }
  for (std::size_t k = 0; k < longest; ++k) {
    RcPoint point;
    point.iter = static_cast<int>(k);
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (const CgRun& run : runs_a) {
      if (k < run.iterations.size() && std::isfinite(run.iterations[k].best_rc)) {
        sum_a += run.iterations[k].best_rc;
        ++point.count_a;
      }
    }
    for (const CgRun& run : runs_b) {
      if (k < run.iterations.size() && std::isfinite(run.iterations[k].best_rc)) {
        sum_b += run.iterations[k].best_rc;
        ++point.count_b;
      }
    }
    point.mean_a = point.count_a > 0 ? sum_a / point.count_a : kNaN;
    point.mean_b = point.count_b > 0 ? sum_b / point.count_b : kNaN;
    report.rc_series.push_back(point);
  }
  report.runs_a = std::move(runs_a);
  report.runs_b = std::move(runs_b);
  return report;
}

ComparisonReport Compare(const std::vector<NamedInstance>& instances, const CgConfig& cfg_a,
                         const CgConfig& cfg_b, TimeAxis axis) {
  std::vector<std::string> names;
  std::vector<CgRun> runs_a;
  std::vector<CgRun> runs_b;
  for (const NamedInstance& inst : instances) {
    names.push_back(inst.name);
    runs_a.push_back(Run(inst.instance, cfg_a));
    runs_b.push_back(Run(inst.instance, cfg_b));
  }
  return CompareRunSets(names, std::move(runs_a), std::move(runs_b), axis);
}

void WriteComparisonCsv(const ComparisonReport& report, std::ostream& out) {
  out << "instance,obj_a,obj_b,gap,a_better,b_better,speedup,iterations_a,iterations_b,"
         "pricing_ms_a,pricing_ms_b,reason_a,reason_b\n";
  for (const InstanceComparison& r : report.rows) {
    out << r.name << ',' << FormatDouble(r.obj_a) << ',' << FormatDouble(r.obj_b) << ','
        << FormatDouble(r.gap) << ',' << (r.a_better ? 1 : 0) << ',' << (r.b_better ? 1 : 0) << ','
        << FormatDouble(r.speedup) << ',' << r.iterations_a << ',' << r.iterations_b << ','
        << FormatDouble(r.pricing_ms_a) << ',' << FormatDouble(r.pricing_ms_b) << ','
        << TerminationName(r.reason_a) << ',' << TerminationName(r.reason_b) << '\n';
  }
}

void WriteSummaryCsv(const ComparisonSummary& s, std::ostream& out) {
  out << "instances,obj_gap,j_less,speedup_a_better,count_a_not_worse,speedup_b_better,"
         "count_b_better,mean_iterations_a,mean_iterations_b,mean_pricing_ms_a,"
         "mean_pricing_ms_b\n";
  out << s.instances << ',' << FormatDouble(s.obj_gap) << ',' << s.j_less << ','
      << FormatDouble(s.speedup_a_better) << ',' << s.count_a_not_worse << ','
      << FormatDouble(s.speedup_b_better) << ',' << s.count_b_better << ','
      << FormatDouble(s.mean_iterations_a) << ',' << FormatDouble(s.mean_iterations_b) << ','
      << FormatDouble(s.mean_pricing_ms_a) << ',' << FormatDouble(s.mean_pricing_ms_b) << '\n';
}

void WriteRcSeriesCsv(const std::vector<RcPoint>& series, std::ostream& out) {
  out << "iter,mean_rc_a,count_a,mean_rc_b,count_b\n";
  for (const RcPoint& p : series) {
    out << p.iter << ',' << FormatDouble(p.mean_a) << ',' << p.count_a << ','
        << FormatDouble(p.mean_b) << ',' << p.count_b << '\n';
  }
}

}  // namespace cgr
