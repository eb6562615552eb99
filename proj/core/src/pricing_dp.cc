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

#include "cgr/pricing_dp.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>

#include "cgr/rng.h"
#include "parallel.h"

namespace cgr {

DpParams DpParams::Baseline() { return DpParams{}; }

DpParams DpParams::Construction() {
  DpParams p;
  p.p_lb = -0.1;
  p.time_limit_s = 5.0;
  p.accept_max = 0.5;
  p.accept_inclusive = true;
  return p;
}

DpParams DpParams::Exhaustive() {
  DpParams p;
  p.p_lb = -std::numeric_limits<double>::infinity();
  p.time_limit_s = 0.0;
  p.expansion_limit = 0;
  p.rollback_enabled = false;
  p.success_threads = std::numeric_limits<int>::max();
  p.max_threads = std::numeric_limits<int>::max();
  return p;
}

double PricingResult::best_reduced_cost() const {
  return columns.empty() ? std::numeric_limits<double>::infinity() : columns.front().reduced_cost;
}

namespace {

using Clock = std::chrono::steady_clock;

bool ColumnLess(const Column& a, const Column& b) {
  if (a.reduced_cost != b.reduced_cost) return a.reduced_cost < b.reduced_cost;
  return a.sequence < b.sequence;
}

// Outgoing retained arcs of every node, ascending in p. Equal lengths are
// ordered by a seeded random priority of the head node.
std::vector<std::vector<int>> SortedArcs(const PricingInstance& pricing, const ReducedGraph& mask,
                                         std::uint64_t seed) {
  const int n = pricing.num_nodes();
  Rng rng(seed);
  std::vector<std::uint64_t> priority(static_cast<std::size_t>(n));
  for (auto& p : priority) p = rng.NextU64();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& arcs = out[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (j != i && mask.Keeps(i, j)) arcs.push_back(j);
    }
    const auto row = pricing.p.row(static_cast<std::size_t>(i));
    std::sort(arcs.begin(), arcs.end(), [&](int a, int b) {
      if (row[a] != row[b]) return row[a] < row[b];
      if (priority[a] != priority[b]) return priority[a] < priority[b];
      return a < b;
    });
  }
  return out;
}

class DfsWorker {
 public:
  DfsWorker(const PricingInstance& pricing, const std::vector<std::vector<int>>& arcs,
            const DpParams& params, const std::atomic<bool>& cancelled)
      : pricing_(pricing),
        instance_(*pricing.instance),
        arcs_(arcs),
        params_(params),
        cancelled_(cancelled),
        visited_(static_cast<std::size_t>(instance_.num_nodes()), 0) {}

  void Run(int first) {
    if (params_.time_limit_s > 0.0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(params_.time_limit_s));
      has_deadline_ = true;
    }
    path_.assign(1, 0);
    visited_[0] = 1;
    TryExtend(0, instance_.node(0).ready, 0.0, 0.0, 0.0, first);
    std::sort(kept_.begin(), kept_.end(), ColumnLess);
  }

  bool success() const { return success_; }
  std::int64_t expansions() const { return expansions_; }
  std::vector<Column>& columns() { return kept_; }

 private:
  bool Stopped() const { return stop_ || success_; }

  bool Accepts(double rc) const {
    return rc < params_.accept_max || (params_.accept_inclusive && rc == params_.accept_max);
  }

  void CountExpansion() {
    ++expansions_;
    if (params_.expansion_limit > 0 && expansions_ >= params_.expansion_limit) stop_ = true;
    if ((expansions_ & 255) == 0) {
      if (cancelled_.load(std::memory_order_relaxed)) stop_ = true;
      if (has_deadline_ && Clock::now() >= deadline_) stop_ = true;
    }
  }

  void Close(double departure, double cost, double dual_sum, int last) {
    const double arrival = departure + instance_.travel(last, 0);
    if (arrival > instance_.horizon() + kFeasibilityTolerance) return;
    const double estimate = cost + instance_.travel(last, 0) - dual_sum;
    if (!Accepts(estimate - 1e-9) && estimate > params_.p_lb + 1e-9) return;
    path_.push_back(0);
    std::optional<Column> column = MakeColumn(path_, instance_, pricing_.duals);
    path_.pop_back();
    if (!column) return;
    if (column->reduced_cost <= params_.p_lb) success_ = true;
    if (Accepts(column->reduced_cost)) Keep(std::move(*column));
  }

  void Keep(Column column) {
    const auto limit = params_.columns_per_worker;
    if (limit > 0 && static_cast<int>(kept_.size()) >= limit) {
      auto worst = std::max_element(kept_.begin(), kept_.end(), ColumnLess);
      if (!ColumnLess(column, *worst)) return;
      *worst = std::move(column);
      return;
    }
    kept_.push_back(std::move(column));
  }

  // Attempts the arc (from -> to) from the current path end.
  void TryExtend(int from, double departure, double load, double cost, double dual_sum, int to) {
    const Node& node = instance_.node(to);
    const double new_load = load + node.demand;
    if (new_load > instance_.capacity() + kFeasibilityTolerance) return;
    const double arrival = departure + instance_.travel(from, to);
    if (arrival > node.due + kFeasibilityTolerance) return;
    const double start = std::max(node.ready, arrival);
    const double new_departure = start + node.service;
    // Euclidean travel obeys the triangle inequality, so a node that cannot
    // return directly cannot return through others either.
    if (new_departure + instance_.travel(to, 0) > instance_.horizon() + kFeasibilityTolerance) {
      return;
    }
    const double new_cost = cost + instance_.travel(from, to);
    const double new_dual = dual_sum + pricing_.duals[static_cast<std::size_t>(to)];
    if (params_.rollback_enabled && new_cost - new_dual > params_.rollback_rc_threshold &&
        (new_load >= params_.rollback_fraction * instance_.capacity() ||
         start >= params_.rollback_fraction * instance_.horizon())) {
      return;
    }
    CountExpansion();
    path_.push_back(to);
    visited_[static_cast<std::size_t>(to)] = 1;
    Expand(to, new_departure, new_load, new_cost, new_dual);
    visited_[static_cast<std::size_t>(to)] = 0;
    path_.pop_back();
  }

  void Expand(int at, double departure, double load, double cost, double dual_sum) {
    for (int next : arcs_[static_cast<std::size_t>(at)]) {
      if (Stopped()) return;
      if (next == 0) {
        Close(departure, cost, dual_sum, at);
        continue;
      }
      if (visited_[static_cast<std::size_t>(next)]) continue;
      TryExtend(at, departure, load, cost, dual_sum, next);
    }
  }

  const PricingInstance& pricing_;
  const VrptwInstance& instance_;
  const std::vector<std::vector<int>>& arcs_;
  const DpParams& params_;
  const std::atomic<bool>& cancelled_;
  std::vector<unsigned char> visited_;
  std::vector<int> path_;
  std::vector<Column> kept_;
  std::int64_t expansions_ = 0;
  bool success_ = false;
  bool stop_ = false;
  bool has_deadline_ = false;
  Clock::time_point deadline_;
};

std::vector<Column> MergeColumns(std::vector<Column> columns) {
  std::sort(columns.begin(), columns.end(), ColumnLess);
  std::set<std::vector<int>> seen;
  std::vector<Column> out;
  for (Column& c : columns) {
    if (seen.insert(c.sequence).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

PricingResult DpPrice(const PricingInstance& pricing, const ReducedGraph& mask,
                      const DpParams& params, std::uint64_t seed) {
  const auto started = Clock::now();
  const VrptwInstance& instance = *pricing.instance;
  const int n = instance.num_customers();
  const auto arcs = SortedArcs(pricing, mask, seed);

  std::vector<int> order;
  for (int i : arcs[0]) {
    if (instance.node(0).ready + instance.travel(0, i) <=
        instance.node(i).due + kFeasibilityTolerance) {
      order.push_back(i);
    }
  }
  const int max_workers = std::min(params.max_threads, n);
  if (static_cast<int>(order.size()) > max_workers)
    order.resize(static_cast<std::size_t>(max_workers));
  const int success_cap = std::min(params.success_threads, n);

  struct Slot {
    bool done = false;
    bool success = false;
    std::int64_t expansions = 0;
    std::vector<Column> columns;
  };
  std::vector<Slot> slots(order.size());
  std::vector<std::atomic<bool>> cancel(order.size());
  std::mutex mu;
  std::size_t prefix = 0;
  int prefix_successes = 0;
  // Workers after stop_index are discarded; it only ever decreases.
  std::atomic<std::size_t> stop_index{order.empty() ? 0 : order.size() - 1};

  auto task = [&](std::size_t k) {
    if (k > stop_index.load()) return;
    DfsWorker worker(pricing, arcs, params, cancel[k]);
    worker.Run(order[k]);
    std::lock_guard<std::mutex> lock(mu);
    slots[k].done = true;
    slots[k].success = worker.success();
    slots[k].expansions = worker.expansions();
    slots[k].columns = std::move(worker.columns());
    while (prefix < slots.size() && slots[prefix].done && prefix <= stop_index.load()) {
      if (slots[prefix].success && ++prefix_successes >= success_cap) {
        stop_index.store(prefix);
        for (std::size_t j = prefix + 1; j < cancel.size(); ++j) cancel[j].store(true);
      }
      ++prefix;
    }
  };
  internal::ParallelFor(order.size(), internal::ResolveThreads(params.threads, order.size()), task);

  PricingResult result;
  std::vector<Column> all;
  const std::size_t last = order.empty() ? 0 : std::min(stop_index.load() + 1, order.size());
  for (std::size_t k = 0; k < last; ++k) {
    ++result.stats.workers_started;
    if (slots[k].success) ++result.stats.workers_hit_target;
    result.stats.expansions += slots[k].expansions;
    for (Column& c : slots[k].columns) all.push_back(std::move(c));
  }
  result.columns = MergeColumns(std::move(all));
  result.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return result;
}

PricingResult ConstructInitial(const PricingInstance& pricing, const ReducedGraph& mask,
                               std::uint64_t seed, const DpParams& params) {
  PricingResult result = DpPrice(pricing, mask, params, seed);
  if (!result.columns.empty()) return result;
  const VrptwInstance& instance = *pricing.instance;
  std::optional<Column> best;
  for (int i = 1; i <= instance.num_customers(); ++i) {
    if (!mask.Keeps(0, i) || !mask.Keeps(i, 0)) continue;
    const int route[] = {0, i, 0};
    auto column = MakeColumn(route, instance, pricing.duals);
    if (column && (!best || ColumnLess(*column, *best))) best = std::move(column);
  }
  if (best) result.columns.push_back(std::move(*best));
  return result;
}

namespace {

class Enumerator {
 public:
  Enumerator(const PricingInstance& pricing, const ReducedGraph& mask)
      : pricing_(pricing),
        instance_(*pricing.instance),
        mask_(mask),
        visited_(static_cast<std::size_t>(instance_.num_nodes()), 0) {}

  OracleResult Run() {
    result_.best.sequence = {0, 0};
    result_.best.cost = 0.0;
    result_.best.reduced_cost = 0.0;
    result_.optimum = 0.0;
    path_.assign(1, 0);
    Visit(0, instance_.node(0).ready, 0.0);
    return result_;
  }

 private:
  void Visit(int at, double departure, double load) {
    if (at != 0 && mask_.Keeps(at, 0) &&
        departure + instance_.travel(at, 0) <= instance_.horizon() + kFeasibilityTolerance) {
      path_.push_back(0);
      if (auto column = MakeColumn(path_, instance_, pricing_.duals)) {
        ++result_.feasible_paths;
        if (column->reduced_cost < result_.optimum) {
          result_.optimum = column->reduced_cost;
          result_.best = std::move(*column);
        }
      }
      path_.pop_back();
    }
    for (int next = 1; next < instance_.num_nodes(); ++next) {
      if (visited_[static_cast<std::size_t>(next)] || !mask_.Keeps(at, next)) continue;
      const Node& node = instance_.node(next);
      const double new_load = load + node.demand;
      if (new_load > instance_.capacity() + kFeasibilityTolerance) continue;
      const double arrival = departure + instance_.travel(at, next);
      if (arrival > node.due + kFeasibilityTolerance) continue;
      visited_[static_cast<std::size_t>(next)] = 1;
      path_.push_back(next);
      Visit(next, std::max(node.ready, arrival) + node.service, new_load);
      path_.pop_back();
      visited_[static_cast<std::size_t>(next)] = 0;
    }
  }

  const PricingInstance& pricing_;
  const VrptwInstance& instance_;
  const ReducedGraph& mask_;
  std::vector<unsigned char> visited_;
  std::vector<int> path_;
  OracleResult result_;
};

}  // namespace

OracleResult ExactOracle(const PricingInstance& pricing, const ReducedGraph& mask) {
  if (pricing.num_customers() > kOracleMaxCustomers) {
    throw std::invalid_argument("exact oracle limited to " + std::to_string(kOracleMaxCustomers) +
                                " customers");
  }
  return Enumerator(pricing, mask).Run();
}

}  // namespace cgr
