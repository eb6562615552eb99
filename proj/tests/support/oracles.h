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

#ifndef CGR_TESTS_SUPPORT_ORACLES_H_
#define CGR_TESTS_SUPPORT_ORACLES_H_

// Reference implementations used only by tests. They share no code with the
// library beyond the plain data types, so agreement is meaningful.

#include <cstdint>
#include <vector>

#include "cgr/instance.h"
#include "cgr/matrix.h"
#include "cgr/reduction.h"
#include "cgr/rng.h"

namespace cgr::testing {

double Distance(const Node& a, const Node& b);

struct SimResult {
  bool feasible = false;
  double cost = 0.0;
};

// Step-by-step route simulation straight from the problem definition.
SimResult SimulateRoute(const std::vector<int>& sequence, const VrptwInstance& instance);

// Every elementary feasible depot-to-depot route with at least one customer,
// restricted to arcs kept by `mask` when given.
std::vector<std::vector<int>> EnumerateRoutes(const VrptwInstance& instance,
                                              const ReducedGraph* mask = nullptr);

// min(0, min over enumerated routes of cost - sum of duals).
double MinReducedCost(const VrptwInstance& instance, const std::vector<double>& duals,
                      const ReducedGraph* mask = nullptr);

enum class TableauStatus { kOptimal, kInfeasible, kUnbounded };

struct TableauResult {
  TableauStatus status = TableauStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// Dense tableau two-phase simplex with Bland's rule throughout:
// min c^T x s.t. A x = b, x >= 0. `a` is row-major, rows x cols.
TableauResult TableauSolve(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                           const std::vector<double>& c);

// min c^T x s.t. A x >= 1, x >= 0 via TableauSolve with surplus columns.
TableauResult TableauCover(const std::vector<std::vector<double>>& a, const std::vector<double>& c);

// Master LP optimum over every feasible route of the instance.
double FullMasterOptimum(const VrptwInstance& instance);

// H = sum_t T[:, t] T[:, (t+1) mod N]^T as an explicit sum of outer products.
DoubleMatrix NaiveHeat(const DoubleMatrix& t);

// Rows drawn uniformly and normalized; optional exact zeros sprinkled in.
DoubleMatrix RandomRowStochastic(std::size_t n, Rng& rng, double zero_fraction = 0.0);

}  // namespace cgr::testing

#endif  // CGR_TESTS_SUPPORT_ORACLES_H_
