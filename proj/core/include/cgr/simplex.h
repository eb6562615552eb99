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

#ifndef CGR_SIMPLEX_H_
#define CGR_SIMPLEX_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cgr {

struct SparseColumn {
  std::vector<int> rows;
  std::vector<double> values;
};

// min c^T x  s.t.  A x = b,  x >= 0.
struct LpProblem {
  int num_rows = 0;
  std::vector<double> rhs;
  std::vector<double> cost;
  std::vector<SparseColumn> columns;

  int num_columns() const { return static_cast<int>(columns.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  double objective = 0.0;
  std::vector<double> x;      // one per column
  std::vector<double> duals;  // one per row: y = c_B^T B^-1
  // Basic variable per row: a column index, or -1 - r for the artificial
  // of row r. Can be passed back as a warm start.
  std::vector<int> basis;
  std::int64_t iterations = 0;
  std::int64_t bland_pivots = 0;
  bool warm_started = false;
};

struct SimplexOptions {
  double tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  // Basis inverse is recomputed from scratch every this many pivots.
  int refactor_interval = 64;
  // Bland's rule takes over after this many consecutive degenerate pivots
  // times (rows + columns), until the next non-degenerate pivot.
  int degenerate_factor = 5;
  // 0 selects 100 * (rows + columns) + 10000.
  std::int64_t max_iterations = 0;
};

// Seam for swapping the LP engine behind the restricted master problem.
class LpEngine {
 public:
  virtual ~LpEngine() = default;
  virtual LpSolution Solve(const LpProblem& problem, std::span<const int> warm_basis) = 0;
};

// Dense two-phase revised simplex with an explicit basis inverse, product
// form updates and periodic refactorization.
class RevisedSimplex final : public LpEngine {
 public:
  RevisedSimplex() = default;
  explicit RevisedSimplex(SimplexOptions options) : options_(options) {}

  LpSolution Solve(const LpProblem& problem, std::span<const int> warm_basis) override;
  LpSolution Solve(const LpProblem& problem) { return Solve(problem, {}); }

  const SimplexOptions& options() const { return options_; }

 private:
  SimplexOptions options_;
};

}  // namespace cgr

#endif  // CGR_SIMPLEX_H_
