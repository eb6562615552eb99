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

#include "cgr/local_search.h"

#include <set>
#include <vector>

#include "cgr/heatmap.h"
#include "cgr/pricing_dp.h"
#include "cgr/reduction.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace cgr {
namespace {

using ::cgr::testing::EnumerateRoutes;
using ::cgr::testing::GeneratedInstance;
using ::cgr::testing::LooseInstance;
using ::cgr::testing::MinReducedCost;
using ::cgr::testing::SampledDuals;
using ::cgr::testing::SimulateRoute;

using Seq = std::vector<int>;

TEST(MakeExchangeTest, FourCases) {
  const Seq route = {0, 4, 2, 7, 5, 0};
  // Anchor u = 2 (position 2), successor o = 7.
  auto move = MakeExchange(route, 2, 0);
  EXPECT_EQ(move.kind, MoveKind::kTruncate);
  EXPECT_EQ(move.sequence, (Seq{0, 4, 2, 0}));

  move = MakeExchange(route, 2, 9);
  EXPECT_EQ(move.kind, MoveKind::kInsert);
  EXPECT_EQ(move.sequence, (Seq{0, 4, 2, 9, 7, 5, 0}));

  move = MakeExchange(route, 2, 5);
  EXPECT_EQ(move.kind, MoveKind::kRemove);
  EXPECT_EQ(move.sequence, (Seq{0, 4, 2, 5, 0}));

  move = MakeExchange(route, 2, 4);
  EXPECT_EQ(move.kind, MoveKind::kSwap);
  EXPECT_EQ(move.sequence, (Seq{0, 7, 2, 4, 5, 0}));

  // v == o: swapping o with itself leaves the route unchanged.
  move = MakeExchange(route, 2, 7);
  EXPECT_EQ(move.kind, MoveKind::kSwap);
  EXPECT_EQ(move.sequence, route);
}

TEST(MakeExchangeTest, DepotAnchor) {
  const Seq route = {0, 3, 1, 0};
  auto move = MakeExchange(route, 0, 6);
  EXPECT_EQ(move.kind, MoveKind::kInsert);
  EXPECT_EQ(move.sequence, (Seq{0, 6, 3, 1, 0}));
  move = MakeExchange(route, 0, 1);
  EXPECT_EQ(move.kind, MoveKind::kRemove);
  EXPECT_EQ(move.sequence, (Seq{0, 1, 0}));
  // Anchor on the last customer: o is the closing depot.
  move = MakeExchange(route, 2, 8);
  EXPECT_EQ(move.kind, MoveKind::kInsert);
  EXPECT_EQ(move.sequence, (Seq{0, 3, 1, 8, 0}));
  move = MakeExchange(route, 2, 3);
  EXPECT_EQ(move.kind, MoveKind::kSwap);
  EXPECT_EQ(move.sequence, (Seq{0, 0, 1, 3, 0}));
}

TEST(MakeExchangeTest, RejectsInvalidArguments) {
  const Seq route = {0, 3, 1, 0};
  EXPECT_THROW(MakeExchange(route, 3, 2), std::invalid_argument);
  EXPECT_THROW(MakeExchange(route, 1, 3), std::invalid_argument);
  EXPECT_THROW(MakeExchange(Seq{0}, 0, 1), std::invalid_argument);
}

TEST(MakeExchangeTest, MovesPreserveMultisetOrChangeItByOne) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Seq route{0};
    std::vector<int> pool = {1, 2, 3, 4, 5, 6, 7, 8};
    const std::size_t len = 1 + rng.Index(6);
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t pick = rng.Index(pool.size());
      route.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    route.push_back(0);
    const std::size_t pos = rng.Index(route.size() - 1);
    int v = static_cast<int>(rng.UniformInt(0, 8));
    if (v == route[pos]) continue;
    const auto move = MakeExchange(route, pos, v);
    EXPECT_EQ(move.sequence.front(), 0);
    EXPECT_EQ(move.sequence.back(), 0);
    const std::multiset<int> before(route.begin() + 1, route.end() - 1);
    const std::multiset<int> after(move.sequence.begin() + 1, move.sequence.end() - 1);
    switch (move.kind) {
      case MoveKind::kTruncate:
        EXPECT_EQ(move.sequence.size(), pos + 2);
        break;
      case MoveKind::kInsert:
        EXPECT_EQ(after.size(), before.size() + 1);
        EXPECT_EQ(after.count(v), 1u);
        break;
      case MoveKind::kRemove:
        EXPECT_EQ(after.size(), before.size() - 1);
        EXPECT_EQ(after.count(route[pos + 1]), 0u);
        break;
      case MoveKind::kSwap:
        if (route[pos + 1] != 0) {
          EXPECT_EQ(after, before);
        }
        break;
    }
  }
}

TEST(LsImproveTest, FeasibleNonWorseningAndBoundedByOracle) {
  int improved = 0;
  for (int pair = 0; pair < 200; ++pair) {
    const int n = 4 + pair % 9;
    const VrptwInstance inst = LooseInstance(n, static_cast<std::uint64_t>(pair));
    const PricingInstance pricing =
        BuildPricing(inst, SampledDuals(inst, static_cast<std::uint64_t>(pair)));
    const HeatMapAdjusted hmap = Adjust(HeatFromT(SurrogateT(pricing, 0.1)), 10);
    const auto routes = EnumerateRoutes(inst);
    ASSERT_FALSE(routes.empty());
    Rng pick(static_cast<std::uint64_t>(pair));
    const auto start = *MakeColumn(routes[pick.Index(routes.size())], inst, pricing.duals);
    Rng rng(static_cast<std::uint64_t>(pair) + 1000);
    LsParams params;
    params.c_e = 30;
    const Column out = LsImprove(start, pricing, hmap, params, rng);
    EXPECT_TRUE(SimulateRoute(out.sequence, inst).feasible);
    EXPECT_LE(out.reduced_cost, start.reduced_cost);
    const double best_route = MinReducedCost(inst, pricing.duals);
    EXPECT_GE(out.reduced_cost, std::min(0.0, best_route) - 1e-9);
    improved += out.reduced_cost < start.reduced_cost ? 1 : 0;
  }
  EXPECT_GT(improved, 20);
}

TEST(LsImproveTest, DeterministicForAGivenStream) {
  const VrptwInstance inst = GeneratedInstance(30, 4);
  const PricingInstance pricing = BuildPricing(inst, SampledDuals(inst, 4));
  const HeatMapAdjusted hmap = Adjust(HeatFromT(SurrogateT(pricing, 0.1)), 10);
  const PricingResult seeds = ConstructInitial(pricing, NoReduction(pricing), 4);
  ASSERT_FALSE(seeds.columns.empty());
  Rng a(77);
  Rng b(77);
  const LsParams params;
  EXPECT_EQ(LsImprove(seeds.columns[0], pricing, hmap, params, a),
            LsImprove(seeds.columns[0], pricing, hmap, params, b));
  LsParams bad;
  bad.c_e = 0;
  EXPECT_THROW(LsImprove(seeds.columns[0], pricing, hmap, bad, a), std::invalid_argument);
}

TEST(LsPriceTest, OutputIsNegativeSortedUniqueAndThreadIndependent) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const VrptwInstance inst = GeneratedInstance(40, seed);
    const PricingInstance pricing = BuildPricing(inst, SampledDuals(inst, seed));
    const HeatMapAdjusted hmap = Adjust(HeatFromT(SurrogateT(pricing, 0.1)), 10);
    const ReducedGraph mask = UlgrMask(hmap);
    DpParams construction = DpParams::Construction();
    construction.time_limit_s = 0.0;
    construction.expansion_limit = 2000;
    LsParams params;
    params.threads = 1;
    const PricingResult single = LsPrice(pricing, mask, hmap, params, construction, seed);
    params.threads = 3;
    const PricingResult multi = LsPrice(pricing, mask, hmap, params, construction, seed);
    EXPECT_EQ(single.columns, multi.columns);
    std::set<Seq> seen;
    for (std::size_t k = 0; k < single.columns.size(); ++k) {
      const Column& c = single.columns[k];
      EXPECT_LT(c.reduced_cost, 0.0);
      EXPECT_TRUE(SimulateRoute(c.sequence, inst).feasible);
      EXPECT_TRUE(seen.insert(c.sequence).second);
      if (k > 0) {
        EXPECT_LE(single.columns[k - 1].reduced_cost, c.reduced_cost);
      }
    }
    // Never worse than the construction alone.
    const PricingResult seeds = ConstructInitial(pricing, mask, seed, construction);
    if (!seeds.columns.empty() && seeds.columns.front().reduced_cost < 0.0) {
      ASSERT_FALSE(single.columns.empty());
      EXPECT_LE(single.best_reduced_cost(), seeds.best_reduced_cost());
    }
  }
}

}  // namespace
}  // namespace cgr
