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

#include "cgr/instance_gen.h"

#include <algorithm>
#include <cstdio>

#include "cgr/heatmap.h"
#include "cgr/instance_io.h"
#include "cgr/rng.h"

namespace cgr {

namespace {

constexpr int kMinDemand = 1;
constexpr int kMaxDemand = 10;
constexpr double kMinService = 0.2;
constexpr double kMaxService = 0.5;
constexpr int kLatestWindowStart = 16;
constexpr double kMinTheta = 0.2;
constexpr double kMaxTheta = 1.1;

}  // namespace

double DefaultCapacity(int n) { return n >= 1000 ? 80.0 : 50.0; }

VrptwInstance GenerateInstance(const GenConfig& cfg) {
  if (cfg.n < 1) throw InstanceError("generator needs n >= 1");
  if (cfg.capacity < kMaxDemand) {
    throw InstanceError("generator capacity must be >= max demand (10)");
  }
  Rng coords = Rng::ForStream(cfg.seed, Stream::kCoordinates);
  Rng demands = Rng::ForStream(cfg.seed, Stream::kDemands);
  Rng service = Rng::ForStream(cfg.seed, Stream::kServiceTimes);
  Rng lengths = Rng::ForStream(cfg.seed, Stream::kWindowLengths);
  Rng starts = Rng::ForStream(cfg.seed, Stream::kWindowStarts);

  std::vector<Node> nodes(static_cast<std::size_t>(cfg.n) + 1);
  for (Node& node : nodes) {
    node.x = coords.Uniform01();
    node.y = coords.Uniform01();
  }
  nodes[0].due = cfg.depot_horizon;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    Node& node = nodes[i];
    node.demand = static_cast<double>(demands.UniformInt(kMinDemand, kMaxDemand));
    node.service = service.Uniform(kMinService, kMaxService);
    const auto length = lengths.UniformInt(1, 2);
    node.ready = static_cast<double>(starts.UniformInt(0, kLatestWindowStart));
    node.due = node.ready + static_cast<double>(length);
  }
  return VrptwInstance(std::move(nodes), cfg.capacity);
}

std::vector<double> MaxIncomingTravel(const VrptwInstance& instance) {
  const int n = instance.num_nodes();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) out[i] = std::max(out[i], instance.travel(j, i));
    }
  }
  return out;
}

DualSample SampleDuals(const VrptwInstance& instance, std::uint64_t seed) {
  Rng theta_rng = Rng::ForStream(seed, Stream::kDualTheta);
  Rng value_rng = Rng::ForStream(seed, Stream::kDualValues);
  DualSample sample;
  sample.theta = theta_rng.Uniform(kMinTheta, kMaxTheta);
  const std::vector<double> t_max = MaxIncomingTravel(instance);
  sample.duals.assign(t_max.size(), 0.0);
  for (std::size_t i = 1; i < t_max.size(); ++i) {
    sample.duals[i] = value_rng.Uniform(0.0, sample.theta * t_max[i]);
  }
  return sample;
}

std::vector<std::filesystem::path> ExportTrainingSet(int count, const GenConfig& cfg,
                                                     const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> dirs;
  dirs.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    GenConfig sample_cfg = cfg;
    sample_cfg.seed = DeriveSeed(cfg.seed, static_cast<std::uint64_t>(Stream::kTrainingInstance),
                                 static_cast<std::uint64_t>(k));
    const VrptwInstance instance = GenerateInstance(sample_cfg);
    const DualSample duals = SampleDuals(
        instance, DeriveSeed(cfg.seed, static_cast<std::uint64_t>(Stream::kTrainingDuals),
                             static_cast<std::uint64_t>(k)));
    const PricingInstance pricing = BuildPricing(instance, duals.duals);

    char name[32];
    std::snprintf(name, sizeof(name), "sample_%05d", k);
    const std::filesystem::path dir = out_dir / name;
    std::filesystem::create_directories(dir);
    WriteInstance(instance, dir / "instance.json");
    WriteTextFile(dir / "duals.json", DualsToJson(duals.duals, duals.theta));
    SaveMatrix(pricing.q, dir / "q.bin");
    dirs.push_back(dir);
  }
  return dirs;
}

}  // namespace cgr
