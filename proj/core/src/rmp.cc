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

#include "cgr/rmp.h"

#include <string>

namespace cgr {

RmpState::RmpState(const VrptwInstance& instance, std::unique_ptr<LpEngine> engine)
    : instance_(&instance),
      engine_(engine ? std::move(engine) : std::make_unique<RevisedSimplex>()),
      coverage_count_(static_cast<std::size_t>(instance.num_nodes()), 0),
      duals_(static_cast<std::size_t>(instance.num_nodes()), 0.0) {}

int RmpState::AddColumns(std::span<const Column> columns) {
  int added = 0;
  for (const Column& column : columns) {
    if (!sequences_.insert(column.sequence).second) continue;
    columns_.push_back(column);
    for (int c : column.customers()) ++coverage_count_[static_cast<std::size_t>(c)];
    ++added;
  }
  if (added > 0) solved_ = false;
  return added;
}

LpProblem RmpState::BuildProblem() const {
  const int n = instance_->num_customers();
  LpProblem lp;
  lp.num_rows = n;
  lp.rhs.assign(static_cast<std::size_t>(n), 1.0);
  // Surplus columns first so that route column indices stay stable as
  // routes are appended (the warm basis refers to them by index).
  for (int i = 0; i < n; ++i) {
    lp.columns.push_back({{i}, {-1.0}});
    lp.cost.push_back(0.0);
  }
  for (const Column& column : columns_) {
    SparseColumn sc;
    for (int c : column.customers()) {
      sc.rows.push_back(c - 1);
      sc.values.push_back(1.0);
    }
    lp.columns.push_back(std::move(sc));
    lp.cost.push_back(column.cost);
  }
  return lp;
}

void RmpState::Solve() {
  for (int i = 1; i < instance_->num_nodes(); ++i) {
    if (coverage_count_[static_cast<std::size_t>(i)] == 0) {
      throw RmpError("customer " + std::to_string(i) + " is not covered by any column");
    }
  }
  const LpProblem lp = BuildProblem();
  last_ = engine_->Solve(lp, warm_basis_);
  if (last_.status != LpStatus::kOptimal) {
    throw RmpError("master LP not solved: " + std::string(LpStatusName(last_.status)));
  }
  warm_basis_ = last_.basis;
  objective_ = last_.objective;
  const int n = instance_->num_customers();
  duals_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    // Optimality leaves the surplus reduced cost y_i >= -tolerance.
    duals_[static_cast<std::size_t>(i) + 1] = std::max(0.0, last_.duals[i]);
  }
  primal_.assign(last_.x.begin() + n, last_.x.end());
  solved_ = true;
}

void RmpState::WriteLp(std::ostream& out) const {
  const int n = instance_->num_customers();
  out << "\\ restricted master problem: " << columns_.size() << " routes, " << n
      << " customers\nMinimize\n obj:";
  out.precision(17);
  for (std::size_t r = 0; r < columns_.size(); ++r) {
    out << (r == 0 ? " " : " + ") << columns_[r].cost << " x" << r;
    if (r % 4 == 3) out << "\n";
  }
  out << "\nSubject To\n";
  for (int i = 1; i <= n; ++i) {
    out << " cover_" << i << ":";
    bool first = true;
    for (std::size_t r = 0; r < columns_.size(); ++r) {
      if (!columns_[r].Covers(i)) continue;
      out << (first ? " " : " + ") << "x" << r;
      first = false;
    }
    if (first) out << " 0 x0";
    out << " >= 1\n";
  }
  out << "End\n";
}

}  // namespace cgr
