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

#include "cgr/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cgr {

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

namespace {

enum class PhaseResult { kOptimal, kUnbounded, kIterationLimit };

// One solve. Variables 0..N-1 are structural, N..N+m-1 are the artificials
// (unit columns). Rows with negative rhs are negated up front.
class SimplexRun {
 public:
  SimplexRun(const LpProblem& problem, const SimplexOptions& options)
      : problem_(problem),
        options_(options),
        m_(problem.num_rows),
        n_(problem.num_columns()),
        row_sign_(static_cast<std::size_t>(m_), 1.0),
        rhs_(problem.rhs) {
    if (static_cast<int>(problem.rhs.size()) != m_ || static_cast<int>(problem.cost.size()) != n_) {
      throw std::invalid_argument("LpProblem dimensions disagree");
    }
    for (int r = 0; r < m_; ++r) {
      if (rhs_[r] < 0.0) {
        row_sign_[r] = -1.0;
        rhs_[r] = -rhs_[r];
      }
    }
    max_iterations_ = options_.max_iterations > 0
                          ? options_.max_iterations
                          : 100 * static_cast<std::int64_t>(m_ + n_) + 10000;
    degenerate_limit_ = static_cast<std::int64_t>(options_.degenerate_factor) * (m_ + n_);
    basic_.assign(static_cast<std::size_t>(n_ + m_), 0);
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    xb_.assign(static_cast<std::size_t>(m_), 0.0);
    y_.assign(static_cast<std::size_t>(m_), 0.0);
    alpha_.assign(static_cast<std::size_t>(m_), 0.0);
  }

  LpSolution Run(std::span<const int> warm_basis) {
    LpSolution sol;
    bool need_phase1 = true;
    if (!warm_basis.empty() && TryWarmStart(warm_basis)) {
      need_phase1 = false;
      sol.warm_started = true;
    }
    if (need_phase1) {
      ColdStart();
      std::vector<double> phase1_cost(static_cast<std::size_t>(n_ + m_), 0.0);
      for (int r = 0; r < m_; ++r) phase1_cost[n_ + r] = 1.0;
      const PhaseResult p1 = RunPhase(phase1_cost, /*allow_artificial=*/true);
      if (p1 == PhaseResult::kIterationLimit) return Finish(sol, LpStatus::kIterationLimit);
      double infeasibility = 0.0;
      for (int r = 0; r < m_; ++r) {
        if (basis_[r] >= n_) infeasibility += std::max(0.0, xb_[r]);
      }
      double scale = 1.0;
      for (double b : rhs_) scale = std::max(scale, std::abs(b));
      if (infeasibility > options_.tolerance * scale * std::max(1, m_)) {
        return Finish(sol, LpStatus::kInfeasible);
      }
      DriveOutArtificials();
    }
    std::vector<double> phase2_cost(static_cast<std::size_t>(n_ + m_), 0.0);
    std::copy(problem_.cost.begin(), problem_.cost.end(), phase2_cost.begin());
    const PhaseResult p2 = RunPhase(phase2_cost, /*allow_artificial=*/false);
    switch (p2) {
      case PhaseResult::kOptimal:
        return Finish(sol, LpStatus::kOptimal);
      case PhaseResult::kUnbounded:
        return Finish(sol, LpStatus::kUnbounded);
      case PhaseResult::kIterationLimit:
        return Finish(sol, LpStatus::kIterationLimit);
    }
    return Finish(sol, LpStatus::kIterationLimit);
  }

 private:
  double& Binv(int r, int c) { return binv_[static_cast<std::size_t>(r) * m_ + c]; }

  // Structural entries carry the row sign; artificials are unit columns.
  template <typename Fn>
  void ForEachEntry(int var, Fn&& fn) const {
    if (var >= n_) {
      fn(var - n_, 1.0);
      return;
    }
    const SparseColumn& col = problem_.columns[static_cast<std::size_t>(var)];
    for (std::size_t k = 0; k < col.rows.size(); ++k) {
      const int r = col.rows[k];
      fn(r, col.values[k] * row_sign_[r]);
    }
  }

  void ColdStart() {
    basis_.resize(static_cast<std::size_t>(m_));
    std::fill(basic_.begin(), basic_.end(), 0);
    for (int r = 0; r < m_; ++r) {
      basis_[r] = n_ + r;
      basic_[n_ + r] = 1;
    }
    std::fill(binv_.begin(), binv_.end(), 0.0);
    for (int r = 0; r < m_; ++r) Binv(r, r) = 1.0;
    xb_ = rhs_;
    pivots_since_refactor_ = 0;
  }

  bool TryWarmStart(std::span<const int> warm) {
    if (static_cast<int>(warm.size()) != m_) return false;
    basis_.resize(static_cast<std::size_t>(m_));
    std::fill(basic_.begin(), basic_.end(), 0);
    for (int r = 0; r < m_; ++r) {
      int var = warm[r];
      if (var < 0) var = n_ + (-1 - var);
      if (var < 0 || var >= n_ + m_ || basic_[var]) return false;
      basis_[r] = var;
      basic_[var] = 1;
    }
    if (!Refactor()) return false;
    for (int r = 0; r < m_; ++r) {
      if (xb_[r] < -options_.tolerance) return false;
      if (basis_[r] >= n_ && xb_[r] > options_.tolerance) return false;
    }
    return true;
  }

  // Gauss-Jordan inversion of the current basis with partial pivoting.
  bool Refactor() {
    std::vector<double> b(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int c = 0; c < m_; ++c) {
      ForEachEntry(basis_[c],
                   [&](int r, double v) { b[static_cast<std::size_t>(r) * m_ + c] = v; });
    }
    std::fill(binv_.begin(), binv_.end(), 0.0);
    for (int r = 0; r < m_; ++r) Binv(r, r) = 1.0;
    auto B = [&](int r, int c) -> double& { return b[static_cast<std::size_t>(r) * m_ + c]; };
    for (int c = 0; c < m_; ++c) {
      int pivot = c;
      for (int r = c + 1; r < m_; ++r) {
        if (std::abs(B(r, c)) > std::abs(B(pivot, c))) pivot = r;
      }
      if (std::abs(B(pivot, c)) < 1e-12) return false;
      if (pivot != c) {
        for (int k = 0; k < m_; ++k) {
          std::swap(B(pivot, k), B(c, k));
          std::swap(Binv(pivot, k), Binv(c, k));
        }
      }
      const double inv = 1.0 / B(c, c);
      for (int k = 0; k < m_; ++k) {
        B(c, k) *= inv;
        Binv(c, k) *= inv;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == c) continue;
        const double f = B(r, c);
        if (f == 0.0) continue;
        for (int k = 0; k < m_; ++k) {
          B(r, k) -= f * B(c, k);
          Binv(r, k) -= f * Binv(c, k);
        }
      }
    }
    for (int r = 0; r < m_; ++r) {
      double v = 0.0;
      for (int k = 0; k < m_; ++k) v += Binv(r, k) * rhs_[k];
      xb_[r] = v;
    }
    pivots_since_refactor_ = 0;
    return true;
  }

  void ComputeDuals(const std::vector<double>& cost) {
    std::fill(y_.begin(), y_.end(), 0.0);
    for (int r = 0; r < m_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (int k = 0; k < m_; ++k) y_[k] += cb * Binv(r, k);
    }
  }

  double ReducedCost(int var, const std::vector<double>& cost) const {
    double d = cost[var];
    ForEachEntry(var, [&](int r, double v) { d -= y_[r] * v; });
    return d;
  }

  void Ftran(int var) {
    std::fill(alpha_.begin(), alpha_.end(), 0.0);
    ForEachEntry(var, [&](int c, double v) {
      for (int r = 0; r < m_; ++r) alpha_[r] += binv_[static_cast<std::size_t>(r) * m_ + c] * v;
    });
  }

  void Pivot(int row, int entering, double step) {
    for (int r = 0; r < m_; ++r) xb_[r] -= step * alpha_[r];
    xb_[row] = step;
    const double inv = 1.0 / alpha_[row];
    for (int k = 0; k < m_; ++k) Binv(row, k) *= inv;
    for (int r = 0; r < m_; ++r) {
      if (r == row || alpha_[r] == 0.0) continue;
      const double f = alpha_[r];
      for (int k = 0; k < m_; ++k) Binv(r, k) -= f * Binv(row, k);
    }
    basic_[basis_[row]] = 0;
    basis_[row] = entering;
    basic_[entering] = 1;
    ++iterations_;
    if (++pivots_since_refactor_ >= options_.refactor_interval) {
      if (!Refactor()) throw std::runtime_error("simplex basis became singular");
    }
  }

  PhaseResult RunPhase(const std::vector<double>& cost, bool allow_artificial) {
    const int num_vars = allow_artificial ? n_ + m_ : n_;
    std::int64_t degenerate_run = 0;
    bool bland = false;
    while (true) {
      if (iterations_ >= max_iterations_) return PhaseResult::kIterationLimit;
      ComputeDuals(cost);
      int entering = -1;
      double best = -options_.tolerance;
      for (int j = 0; j < num_vars; ++j) {
        if (basic_[j]) continue;
        const double d = ReducedCost(j, cost);
        if (d < best) {
          entering = j;
          if (bland) break;
          best = d;
        }
      }
      if (entering < 0) return PhaseResult::kOptimal;

      Ftran(entering);
      int leaving = -1;
      double step = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        if (alpha_[r] <= options_.pivot_tolerance) continue;
        const double ratio = std::max(0.0, xb_[r]) / alpha_[r];
        bool take = false;
        if (leaving < 0 || ratio < step - options_.tolerance) {
          take = true;
        } else if (ratio <= step + options_.tolerance) {
          take = bland ? basis_[r] < basis_[leaving] : alpha_[r] > alpha_[leaving];
        }
        if (take) {
          leaving = r;
          step = ratio;
        }
      }
      if (leaving < 0) return PhaseResult::kUnbounded;
      step = std::max(0.0, xb_[leaving]) / alpha_[leaving];

      if (bland) ++bland_pivots_;
      Pivot(leaving, entering, step);
      if (step <= options_.tolerance) {
        if (++degenerate_run > degenerate_limit_) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
    }
  }

  // After phase 1, pivot zero-valued artificials out of the basis where a
  // structural column can replace them. Rows where none can are redundant.
  void DriveOutArtificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      int replacement = -1;
      double best = 1e-7;
      for (int j = 0; j < n_; ++j) {
        if (basic_[j]) continue;
        double v = 0.0;
        ForEachEntry(j, [&](int c, double a) { v += Binv(r, c) * a; });
        if (std::abs(v) > best) {
          best = std::abs(v);
          replacement = j;
        }
      }
      if (replacement < 0) continue;
      Ftran(replacement);
      Pivot(r, replacement, 0.0);
    }
  }

  LpSolution& Finish(LpSolution& sol, LpStatus status) {
    sol.status = status;
    sol.iterations = iterations_;
    sol.bland_pivots = bland_pivots_;
    if (status != LpStatus::kOptimal) return sol;
    Refactor();
    ComputeDuals([&] {
      std::vector<double> c(static_cast<std::size_t>(n_ + m_), 0.0);
      std::copy(problem_.cost.begin(), problem_.cost.end(), c.begin());
      return c;
    }());
    sol.x.assign(static_cast<std::size_t>(n_), 0.0);
    sol.basis.resize(static_cast<std::size_t>(m_));
    for (int r = 0; r < m_; ++r) {
      const int var = basis_[r];
      if (var < n_) {
        sol.x[var] = std::abs(xb_[r]) <= options_.tolerance ? 0.0 : xb_[r];
        sol.basis[r] = var;
      } else {
        sol.basis[r] = -1 - (var - n_);
      }
    }
    sol.duals.resize(static_cast<std::size_t>(m_));
    for (int r = 0; r < m_; ++r) sol.duals[r] = y_[r] * row_sign_[r];
    sol.objective = 0.0;
    for (int j = 0; j < n_; ++j) sol.objective += problem_.cost[j] * sol.x[j];
    return sol;
  }

  const LpProblem& problem_;
  const SimplexOptions& options_;
  const int m_;
  const int n_;
  std::vector<double> row_sign_;
  std::vector<double> rhs_;
  std::vector<int> basis_;
  std::vector<unsigned char> basic_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  std::vector<double> y_;
  std::vector<double> alpha_;
  std::int64_t iterations_ = 0;
  std::int64_t bland_pivots_ = 0;
  std::int64_t max_iterations_ = 0;
  std::int64_t degenerate_limit_ = 0;
  int pivots_since_refactor_ = 0;
};

}  // namespace

LpSolution RevisedSimplex::Solve(const LpProblem& problem, std::span<const int> warm_basis) {
  if (problem.num_rows == 0) {
    LpSolution sol;
    sol.status = LpStatus::kOptimal;
    sol.x.assign(problem.columns.size(), 0.0);
    for (double c : problem.cost) {
      if (c < 0.0) {
        sol.status = LpStatus::kUnbounded;
        break;
      }
    }
    return sol;
  }
  SimplexRun run(problem, options_);
  return run.Run(warm_basis);
}

}  // namespace cgr
