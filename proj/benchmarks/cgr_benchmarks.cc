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

// Micro benchmarks for the per-iteration building blocks of column
// generation: heat map construction, top-M adjustment, DP pricing on the
// three pricing graphs, and warm and cold master solves.

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "cgr/cg_driver.h"
#include "cgr/heatmap.h"
#include "cgr/instance.h"
#include "cgr/instance_gen.h"
#include "cgr/pricing_dp.h"
#include "cgr/reduction.h"
#include "cgr/rmp.h"

namespace cgr {
namespace {

constexpr std::uint64_t kSeed = 7;

GenConfig FixtureConfig(int n) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = kSeed;
  cfg.capacity = DefaultCapacity(n);
  return cfg;
}

// Built in place: the pricing instance points at `instance`.
struct Fixture {
  explicit Fixture(int n)
      : instance(GenerateInstance(FixtureConfig(n))),
        pricing(BuildPricing(instance, SampleDuals(instance, kSeed).duals)),
        t(SurrogateT(pricing, 0.1)) {}
  Fixture(const Fixture&) = delete;
  Fixture& operator=(const Fixture&) = delete;

  VrptwInstance instance;
  PricingInstance pricing;
  DoubleMatrix t;
};

void BM_HeatFromT(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(HeatFromT(f.t));
}
BENCHMARK(BM_HeatFromT)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Adjust(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  const DoubleMatrix h = HeatFromT(f.t);
  for (auto _ : state) benchmark::DoNotOptimize(Adjust(h, 10));
}
BENCHMARK(BM_Adjust)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

// range(1): 0 = full graph, 1 = BE2, 2 = ULGR.
void BM_DpPrice(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  ReducedGraph mask = NoReduction(f.pricing);
  if (state.range(1) == 1) mask = Be2(f.pricing);
  if (state.range(1) == 2) mask = UlgrMask(Adjust(HeatFromT(f.t), 10));
  DpParams params = DpParams::Baseline();
  params.time_limit_s = 0.0;
  params.expansion_limit = 20000;
  params.threads = 1;
  std::int64_t columns = 0;
  for (auto _ : state) {
    const PricingResult r = DpPrice(f.pricing, mask, params, kSeed);
    columns += static_cast<std::int64_t>(r.columns.size());
  }
  state.counters["arcs"] = static_cast<double>(mask.retained);
  state.counters["columns/call"] =
      benchmark::Counter(static_cast<double>(columns), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_DpPrice)
    ->ArgsProduct({{50, 100, 200}, {0, 1, 2}})
    ->ArgNames({"n", "graph"})
    ->Unit(benchmark::kMillisecond);

// Master with singleton routes plus one round of priced columns; measures a
// cold solve followed by a warm re-solve after adding more columns.
void BM_RmpSolve(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  DpParams params = DpParams::Baseline();
  params.time_limit_s = 0.0;
  params.expansion_limit = 20000;
  params.threads = 1;
  const std::vector<Column> extra =
      DpPrice(f.pricing, NoReduction(f.pricing), params, kSeed).columns;
  const std::vector<Column> initial = InitColumns(f.instance);
  for (auto _ : state) {
    RmpState rmp(f.instance);
    rmp.AddColumns(initial);
    rmp.Solve();
    rmp.AddColumns(extra);
    rmp.Solve();
    benchmark::DoNotOptimize(rmp.objective());
  }
  state.counters["columns"] = static_cast<double>(initial.size() + extra.size());
}
BENCHMARK(BM_RmpSolve)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cgr

BENCHMARK_MAIN();
