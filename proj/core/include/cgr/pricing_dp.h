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

#ifndef CGR_PRICING_DP_H_
#define CGR_PRICING_DP_H_

#include <cstdint>
#include <vector>

#include "cgr/instance.h"
#include "cgr/reduction.h"

namespace cgr {

// Parameters of the depth-first pricing heuristic. Reduced costs are in the
// unscaled units of the master problem.
struct DpParams {
  // A worker stops once it finds a column with reduced cost <= p_lb.
  double p_lb = -1.0;
  // Per-worker wall-clock budget in seconds; <= 0 disables.
  double time_limit_s = 30.0;
  // Per-worker arc-expansion budget; 0 disables. Deterministic substitute
  // for time_limit_s.
  std::int64_t expansion_limit = 0;
  // Columns are returned when reduced cost < accept_max, or <= when
  // accept_inclusive is set.
  double accept_max = 0.0;
  bool accept_inclusive = false;
  // Rollback pruning: abandon a partial path whose reduced cost exceeds
  // rollback_rc_threshold once load or elapsed time reaches
  // rollback_fraction of capacity / horizon.
  bool rollback_enabled = true;
  double rollback_fraction = 0.75;
  double rollback_rc_threshold = 0.1;
  // Global stop: success_threads workers reached p_lb. At most max_threads
  // workers are started. Both are capped at the number of customers.
  int success_threads = 20;
  int max_threads = 100;
  // Best accepted columns kept per worker; <= 0 keeps all.
  int columns_per_worker = 1;
  // OS threads running the workers; 0 selects hardware concurrency.
  int threads = 0;

  // P_lb = -1, 30 s, strictly negative columns only.
  static DpParams Baseline();
  // P_lb = -0.1, 5 s, columns up to +0.5 accepted.
  static DpParams Construction();
  // No target, no pruning, no budgets, every worker runs: exhaustive
  // enumeration of the masked graph.
  static DpParams Exhaustive();
};

struct PricingStats {
  int workers_started = 0;
  int workers_hit_target = 0;
  std::int64_t expansions = 0;
  double wall_ms = 0.0;
};

struct PricingResult {
  // Sorted by (reduced cost, sequence), no duplicate sequences.
  std::vector<Column> columns;
  PricingStats stats;

  double best_reduced_cost() const;  // +inf when empty
};

// One worker per customer i, started in ascending p(0, i) order, extends
// depot -> i depth first along retained arcs in ascending p. Merging follows
// worker order, so the output does not depend on thread timing when only
// expansion budgets are used.
PricingResult DpPrice(const PricingInstance& pricing, const ReducedGraph& mask,
                      const DpParams& params, std::uint64_t seed);

// DpPrice with construction parameters; falls back to the cheapest feasible
// single-customer route under the mask when nothing is accepted.
PricingResult ConstructInitial(const PricingInstance& pricing, const ReducedGraph& mask,
                               std::uint64_t seed,
                               const DpParams& params = DpParams::Construction());

inline constexpr int kOracleMaxCustomers = 12;

struct OracleResult {
  Column best;           // [0, 0] when no route beats the empty one
  double optimum = 0.0;  // min(0, best route reduced cost)
  std::int64_t feasible_paths = 0;
};

// Exhaustive enumeration of elementary feasible routes under the mask.
// Throws std::invalid_argument for more than kOracleMaxCustomers customers.
OracleResult ExactOracle(const PricingInstance& pricing, const ReducedGraph& mask);

}  // namespace cgr

#endif  // CGR_PRICING_DP_H_
