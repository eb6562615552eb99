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

#ifndef CGR_INSTANCE_H_
#define CGR_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgr/matrix.h"

namespace cgr {

// Slack used for all time-window and capacity comparisons. Windows are
// closed: arriving exactly at the due time is feasible.
inline constexpr double kFeasibilityTolerance = 1e-9;

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Node {
  double x = 0.0;
  double y = 0.0;
  double demand = 0.0;
  double service = 0.0;
  double ready = 0.0;  // a_i
  double due = 0.0;    // b_i
};

// A C-VRPTW instance. Node 0 is the depot; nodes 1..n are customers. Travel
// times are Euclidean distances at full precision.
class VrptwInstance {
 public:
  VrptwInstance() = default;
  // Throws InstanceError when an invariant is violated.
  VrptwInstance(std::vector<Node> nodes, double capacity);

  int num_customers() const { return static_cast<int>(nodes_.size()) - 1; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::span<const Node> nodes() const { return nodes_; }
  double capacity() const { return capacity_; }
  double horizon() const { return nodes_.front().due; }

  double travel(int i, int j) const {
    return travel_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  const DoubleMatrix& travel_matrix() const { return travel_; }

 private:
  std::vector<Node> nodes_;
  double capacity_ = 0.0;
  DoubleMatrix travel_;
};

// Times divided by the depot horizon b_0 and demands divided by the capacity.
// Coordinates are left as given.
struct ScaledInstance {
  double time_scale = 1.0;
  double demand_scale = 1.0;
  std::vector<Node> nodes;
  DoubleMatrix travel;

  static ScaledInstance From(const VrptwInstance& instance);
};

// Derived pricing graph for one set of duals. Immutable once built; the
// referenced VrptwInstance must outlive it.
struct PricingInstance {
  const VrptwInstance* instance = nullptr;
  ScaledInstance scaled;
  // Unscaled duals indexed by node; duals[0] == 0.
  std::vector<double> duals;
  // Arc lengths t_ij - d_j divided by p_scale. Diagonal entries are 0.
  DoubleMatrix p;
  double p_scale = 1.0;
  // Set when every feasible arc had p == 0; p_scale is then 1.
  bool degenerate_scale = false;
  // a_i + s_i + t_ij <= b_j in scaled units; diagonal is infeasible.
  ArcMask feasible;
  // Minimum scaled elapsed time from the earliest start at i to the
  // earliest start at j.
  DoubleMatrix min_time;
  // Guidance weights; exactly 2 on infeasible arcs.
  DoubleMatrix q;

  int num_customers() const { return instance->num_customers(); }
  int num_nodes() const { return instance->num_nodes(); }
};

inline constexpr double kInfeasibleArcWeight = 2.0;

// Builds the pricing graph for per-node duals (size n + 1, duals[0] == 0,
// all entries >= 0). Throws InstanceError on malformed duals.
PricingInstance BuildPricing(const VrptwInstance& instance, std::span<const double> duals);

// Loss / guidance weight of a single feasible arc.
double ArcWeight(double p, double min_time, double scaled_demand);

enum class Violation {
  kNone,
  kMalformed,     // does not start/end at the depot, depot mid-route, bad id
  kElementarity,  // customer visited twice
  kCapacity,
  kTimeWindow,
};

std::string_view ViolationName(Violation v);

struct FeasibilityReport {
  Violation violation = Violation::kNone;
  // Index into the sequence of the node at which the violation occurred.
  int position = -1;

  bool feasible() const { return violation == Violation::kNone; }
  explicit operator bool() const { return feasible(); }
};

// Simulates the route: arrival = departure + travel, service starts at
// max(ready, arrival), load accumulates; the first violation is reported.
FeasibilityReport CheckFeasible(std::span<const int> sequence, const VrptwInstance& instance);

// An elementary depot-to-depot route.
struct Column {
  std::vector<int> sequence;
  double cost = 0.0;
  double reduced_cost = 0.0;

  bool Covers(int customer) const;
  // Visited customers in route order.
  std::span<const int> customers() const {
    if (sequence.size() < 2) return {};
    return std::span<const int>(sequence).subspan(1, sequence.size() - 2);
  }

  friend bool operator==(const Column&, const Column&) = default;
};

double RouteCost(std::span<const int> sequence, const VrptwInstance& instance);

// cost - sum of duals of the visited customers.
double ReducedCost(const Column& column, std::span<const double> duals);

// Returns a Column when the sequence passes CheckFeasible, nullopt otherwise.
std::optional<Column> MakeColumn(std::span<const int> sequence, const VrptwInstance& instance,
                                 std::span<const double> duals);

}  // namespace cgr

#endif  // CGR_INSTANCE_H_
