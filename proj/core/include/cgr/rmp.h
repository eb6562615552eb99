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

#ifndef CGR_RMP_H_
#define CGR_RMP_H_

#include <memory>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "cgr/instance.h"
#include "cgr/simplex.h"

namespace cgr {

class RmpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Restricted master problem: set covering over routes,
//   min sum_r c_r x_r  s.t.  sum_r a_ir x_r >= 1 for every customer i,  x >= 0.
// Each solve warm-starts from the previous optimal basis.
class RmpState {
 public:
  // The instance must outlive the state. A null engine selects the built-in
  // RevisedSimplex.
  explicit RmpState(const VrptwInstance& instance, std::unique_ptr<LpEngine> engine = nullptr);

  // Appends the columns whose sequence is not already present. Returns the
  // number actually added.
  int AddColumns(std::span<const Column> columns);

  // Solves the LP. Throws RmpError if a customer is uncovered or the engine
  // fails to reach optimality.
  void Solve();

  const std::vector<Column>& columns() const { return columns_; }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  bool solved() const { return solved_; }
  double objective() const { return objective_; }
  // Per node, duals()[0] == 0; nonnegative.
  const std::vector<double>& duals() const { return duals_; }
  // One value per column.
  const std::vector<double>& primal() const { return primal_; }
  const LpSolution& last_solution() const { return last_; }

  // Writes the current LP in CPLEX LP text format.
  void WriteLp(std::ostream& out) const;

 private:
  LpProblem BuildProblem() const;

  const VrptwInstance* instance_;
  std::unique_ptr<LpEngine> engine_;
  std::vector<Column> columns_;
  std::set<std::vector<int>> sequences_;
  std::vector<int> coverage_count_;
  std::vector<int> warm_basis_;
  bool solved_ = false;
  double objective_ = 0.0;
  std::vector<double> duals_;
  std::vector<double> primal_;
  LpSolution last_;
};

}  // namespace cgr

#endif  // CGR_RMP_H_
