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

#include "cgr/instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cgr {

VrptwInstance::VrptwInstance(std::vector<Node> nodes, double capacity)
    : nodes_(std::move(nodes)), capacity_(capacity) {
  if (nodes_.size() < 2) {
    throw InstanceError("instance needs a depot and at least one customer");
  }
  if (!(capacity_ > 0.0) || !std::isfinite(capacity_)) {
    throw InstanceError("capacity must be positive and finite");
  }
  const Node& depot = nodes_.front();
  if (depot.ready != 0.0) throw InstanceError("depot window must start at 0");
  if (depot.demand != 0.0) throw InstanceError("depot demand must be 0");
  if (depot.service != 0.0) throw InstanceError("depot service must be 0");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    const std::string where = "node " + std::to_string(i) + ": ";
    for (double v : {node.x, node.y, node.demand, node.service, node.ready, node.due}) {
      if (!std::isfinite(v)) throw InstanceError(where + "non-finite field");
    }
    if (node.ready > node.due) throw InstanceError(where + "ready > due");
    if (node.demand < 0.0 || node.demand > capacity_) {
      throw InstanceError(where + "demand outside [0, capacity]");
    }
    if (node.service < 0.0) throw InstanceError(where + "negative service");
  }

  const std::size_t n = nodes_.size();
  travel_ = DoubleMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(nodes_[i].x - nodes_[j].x, nodes_[i].y - nodes_[j].y);
      travel_(i, j) = d;
      travel_(j, i) = d;
    }
  }
}

ScaledInstance ScaledInstance::From(const VrptwInstance& instance) {
  ScaledInstance s;
  s.time_scale = instance.horizon() > 0.0 ? instance.horizon() : 1.0;
  s.demand_scale = instance.capacity();
  s.nodes.assign(instance.nodes().begin(), instance.nodes().end());
  for (Node& node : s.nodes) {
    node.demand /= s.demand_scale;
    node.service /= s.time_scale;
    node.ready /= s.time_scale;
    node.due /= s.time_scale;
  }
  s.travel = instance.travel_matrix();
  for (double& t : s.travel.data()) t /= s.time_scale;
  return s;
}

double ArcWeight(double p, double min_time, double scaled_demand) {
  if (p < 0.0) return p * std::exp(-min_time - scaled_demand);
  if (p > 0.0) return p * std::exp(min_time + scaled_demand);
  return 0.0;
}

PricingInstance BuildPricing(const VrptwInstance& instance, std::span<const double> duals) {
  const std::size_t n = static_cast<std::size_t>(instance.num_nodes());
  if (duals.size() != n) {
    throw InstanceError("expected " + std::to_string(n) + " duals, got " +
                        std::to_string(duals.size()));
  }
  if (duals[0] != 0.0) throw InstanceError("depot dual must be 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(duals[i] >= 0.0) || !std::isfinite(duals[i])) {
      throw InstanceError("dual " + std::to_string(i) + " must be finite and >= 0");
    }
  }

  PricingInstance out;
  out.instance = &instance;
  out.scaled = ScaledInstance::From(instance);
  out.duals.assign(duals.begin(), duals.end());
  out.p = DoubleMatrix(n);
  out.feasible = ArcMask(n, 0);
  out.min_time = DoubleMatrix(n);
  out.q = DoubleMatrix(n, kInfeasibleArcWeight);

  const ScaledInstance& s = out.scaled;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Node& from = s.nodes[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Node& to = s.nodes[j];
      const double earliest_arrival = from.ready + from.service + s.travel(i, j);
      out.p(i, j) = instance.travel(static_cast<int>(i), static_cast<int>(j)) - duals[j];
      out.min_time(i, j) = std::max(0.0, std::max(to.ready, earliest_arrival) - from.ready);
      if (earliest_arrival <= to.due + kFeasibilityTolerance / s.time_scale) {
        out.feasible(i, j) = 1;
        lo = std::min(lo, out.p(i, j));
        hi = std::max(hi, out.p(i, j));
      }
    }
  }

  double scale = 0.0;
  if (std::isfinite(lo)) scale = std::max(std::abs(lo), std::abs(hi));
  if (scale > 0.0) {
    out.p_scale = scale;
  } else {
    out.p_scale = 1.0;
    out.degenerate_scale = true;
  }
  for (double& v : out.p.data()) v /= out.p_scale;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!out.feasible(i, j)) continue;
      out.q(i, j) = ArcWeight(out.p(i, j), out.min_time(i, j), s.nodes[j].demand);
    }
  }
  return out;
}

std::string_view ViolationName(Violation v) {
  switch (v) {
    case Violation::kNone:
      return "none";
    case Violation::kMalformed:
      return "malformed";
    case Violation::kElementarity:
      return "elementarity";
    case Violation::kCapacity:
      return "capacity";
    case Violation::kTimeWindow:
      return "time-window";
  }
  return "unknown";
}

FeasibilityReport CheckFeasible(std::span<const int> sequence, const VrptwInstance& instance) {
  const int n = instance.num_nodes();
  if (sequence.size() < 2) return {Violation::kMalformed, 0};
  if (sequence.front() != 0) return {Violation::kMalformed, 0};
  const int last = static_cast<int>(sequence.size()) - 1;
  if (sequence.back() != 0) return {Violation::kMalformed, last};

  std::vector<unsigned char> seen(static_cast<std::size_t>(n), 0);
  double departure = instance.node(0).ready;
  double load = 0.0;
  int prev = 0;
  for (int pos = 1; pos <= last; ++pos) {
    const int id = sequence[static_cast<std::size_t>(pos)];
    if (id < 0 || id >= n) return {Violation::kMalformed, pos};
    if (id == 0 && pos != last) return {Violation::kMalformed, pos};
    if (id != 0) {
      if (seen[static_cast<std::size_t>(id)]) {
        return {Violation::kElementarity, pos};
      }
      seen[static_cast<std::size_t>(id)] = 1;
    }
    const Node& node = instance.node(id);
    load += node.demand;
    if (load > instance.capacity() + kFeasibilityTolerance) {
      return {Violation::kCapacity, pos};
    }
    const double arrival = departure + instance.travel(prev, id);
    if (arrival > node.due + kFeasibilityTolerance) {
      return {Violation::kTimeWindow, pos};
    }
    departure = std::max(node.ready, arrival) + node.service;
    prev = id;
  }
  return {};
}

bool Column::Covers(int customer) const {
  const auto c = customers();
  return std::find(c.begin(), c.end(), customer) != c.end();
}

double RouteCost(std::span<const int> sequence, const VrptwInstance& instance) {
  double cost = 0.0;
  for (std::size_t k = 1; k < sequence.size(); ++k) {
    cost += instance.travel(sequence[k - 1], sequence[k]);
  }
  return cost;
}

double ReducedCost(const Column& column, std::span<const double> duals) {
  double dual_sum = 0.0;
  for (int c : column.customers()) dual_sum += duals[static_cast<std::size_t>(c)];
  return column.cost - dual_sum;
}

std::optional<Column> MakeColumn(std::span<const int> sequence, const VrptwInstance& instance,
                                 std::span<const double> duals) {
  if (!CheckFeasible(sequence, instance)) return std::nullopt;
  Column column;
  column.sequence.assign(sequence.begin(), sequence.end());
  column.cost = RouteCost(sequence, instance);
  column.reduced_cost = ReducedCost(column, duals);
  return column;
}

}  // namespace cgr
