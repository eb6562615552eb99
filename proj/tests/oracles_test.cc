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

// Sanity checks for the independent test oracles themselves.
#include "support/oracles.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace cgr::testing {
namespace {

TEST(SimulateRouteTest, HandComputedRoute) {
  const VrptwInstance inst({{0, 0, 0, 0, 0, 20}, {3, 4, 1, 1, 6, 9}, {3, 0, 1, 0, 0, 15}}, 5.0);
  // 0 -> 1 arrive 5, wait to 6, leave 7; -> 2 arrive 11; -> 0 arrive 14.
  const SimResult r = SimulateRoute({0, 1, 2, 0}, inst);
  EXPECT_TRUE(r.feasible);
  EXPECT_DOUBLE_EQ(r.cost, 12.0);
  EXPECT_FALSE(SimulateRoute({0, 2, 1, 2, 0}, inst).feasible);
  EXPECT_FALSE(SimulateRoute({0, 1}, inst).feasible);
}

TEST(EnumerateRoutesTest, CountsSmallCompleteCase) {
  // Everything feasible: ordered selections of 1..3 customers from 3 = 15.
  const VrptwInstance inst(
      {{0, 0, 0, 0, 0, 100}, {1, 0, 1, 0, 0, 100}, {0, 1, 1, 0, 0, 100}, {1, 1, 1, 0, 0, 100}},
      10.0);
  EXPECT_EQ(EnumerateRoutes(inst).size(), 15u);
  // Capacity 2 allows at most two customers: 3 + 6.
  const VrptwInstance tight(std::vector<Node>(inst.nodes().begin(), inst.nodes().end()), 2.0);
  EXPECT_EQ(EnumerateRoutes(tight).size(), 9u);
}

TEST(TableauSolveTest, KnownLp) {
  const auto r = TableauSolve({{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {-1, -1, 0, 0});
  ASSERT_EQ(r.status, TableauStatus::kOptimal);
  EXPECT_NEAR(r.objective, -2.8, 1e-12);
  EXPECT_EQ(TableauSolve({{1, 1}, {1, 1}}, {1, 2}, {1, 1}).status, TableauStatus::kInfeasible);
  EXPECT_EQ(TableauSolve({{1, -1}}, {1}, {-1, 0}).status, TableauStatus::kUnbounded);
}

TEST(TableauCoverTest, TwoCustomerCover) {
  // Routes {1}, {2}, {1,2} with costs 3, 3, 4: the pair route wins.
  const auto r = TableauCover({{1, 0, 1}, {0, 1, 1}}, {3, 3, 4});
  ASSERT_EQ(r.status, TableauStatus::kOptimal);
  EXPECT_NEAR(r.objective, 4.0, 1e-12);
}

TEST(FullMasterOptimumTest, NeverAboveSingletonCover) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const VrptwInstance inst = LooseInstance(6, seed);
    double singletons = 0.0;
    for (int i = 1; i <= 6; ++i) singletons += 2.0 * Distance(inst.node(0), inst.node(i));
    const double lp = FullMasterOptimum(inst);
    EXPECT_LE(lp, singletons + 1e-9);
    EXPECT_GT(lp, 0.0);
  }
}

TEST(NaiveHeatTest, TwoByTwo) {
  DoubleMatrix t(2, 0.0);
  t(0, 0) = 0.25;
  t(0, 1) = 0.75;
  t(1, 0) = 0.5;
  t(1, 1) = 0.5;
  // H(i, j) = T(i,0) T(j,1) + T(i,1) T(j,0).
  const DoubleMatrix h = NaiveHeat(t);
  EXPECT_DOUBLE_EQ(h(0, 0), 0.25 * 0.75 + 0.75 * 0.25);
  EXPECT_DOUBLE_EQ(h(0, 1), 0.25 * 0.5 + 0.75 * 0.5);
  EXPECT_DOUBLE_EQ(h(1, 0), 0.5 * 0.75 + 0.5 * 0.25);
}

TEST(RandomRowStochasticTest, RowsSumToOne) {
  Rng rng(1);
  const DoubleMatrix t = RandomRowStochastic(20, rng, 0.9);
  for (std::size_t i = 0; i < 20; ++i) {
    double sum = 0.0;
    for (double v : t.row(i)) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace cgr::testing
