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
#include <cmath>
#include <filesystem>

#include "cgr/heatmap.h"
#include "cgr/instance_io.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace cgr {
namespace {

using ::cgr::testing::TempDir;

TEST(GenerateInstanceTest, RespectsDocumentedRanges) {
  GenConfig cfg;
  cfg.n = 300;
  cfg.seed = 17;
  const VrptwInstance inst = GenerateInstance(cfg);
  ASSERT_EQ(inst.num_customers(), 300);
  EXPECT_EQ(inst.capacity(), 50.0);
  EXPECT_EQ(inst.node(0).ready, 0.0);
  EXPECT_EQ(inst.node(0).due, 18.0);
  for (int i = 0; i < inst.num_nodes(); ++i) {
    const Node& node = inst.node(i);
    EXPECT_GE(node.x, 0.0);
    EXPECT_LT(node.x, 1.0);
    EXPECT_GE(node.y, 0.0);
    EXPECT_LT(node.y, 1.0);
    if (i == 0) continue;
    EXPECT_GE(node.demand, 1.0);
    EXPECT_LE(node.demand, 10.0);
    EXPECT_EQ(node.demand, std::floor(node.demand));
    EXPECT_GE(node.service, 0.2);
    EXPECT_LT(node.service, 0.5);
    EXPECT_EQ(node.ready, std::floor(node.ready));
    EXPECT_LE(node.ready, 16.0);
    const double length = node.due - node.ready;
    EXPECT_TRUE(length == 1.0 || length == 2.0);
  }
}

TEST(GenerateInstanceTest, DeterministicAndSeedSensitive) {
  GenConfig cfg;
  cfg.n = 20;
  cfg.seed = 5;
  const VrptwInstance a = GenerateInstance(cfg);
  const VrptwInstance b = GenerateInstance(cfg);
  cfg.seed = 6;
  const VrptwInstance c = GenerateInstance(cfg);
  EXPECT_EQ(InstanceToJson(a), InstanceToJson(b));
  EXPECT_NE(InstanceToJson(a), InstanceToJson(c));
}

TEST(GenerateInstanceTest, PrefixStableInN) {
  // Independent streams: growing n never changes earlier customers' demands.
  GenConfig small;
  small.n = 10;
  small.seed = 3;
  GenConfig large = small;
  large.n = 40;
  const VrptwInstance a = GenerateInstance(small);
  const VrptwInstance b = GenerateInstance(large);
  for (int i = 1; i <= 10; ++i) {
    EXPECT_EQ(a.node(i).demand, b.node(i).demand);
    EXPECT_EQ(a.node(i).ready, b.node(i).ready);
  }
}

TEST(GenerateInstanceTest, RejectsBadConfig) {
  GenConfig cfg;
  cfg.n = 0;
  EXPECT_THROW(GenerateInstance(cfg), InstanceError);
  cfg.n = 5;
  cfg.capacity = 9.0;
  EXPECT_THROW(GenerateInstance(cfg), InstanceError);
}

TEST(DefaultCapacityTest, Thresholds) {
  EXPECT_EQ(DefaultCapacity(200), 50.0);
  EXPECT_EQ(DefaultCapacity(500), 50.0);
  EXPECT_EQ(DefaultCapacity(1000), 80.0);
}

TEST(SampleDualsTest, WithinThetaScaledIncomingTravel) {
  GenConfig cfg;
  cfg.n = 50;
  cfg.seed = 8;
  const VrptwInstance inst = GenerateInstance(cfg);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DualSample s = SampleDuals(inst, seed);
    EXPECT_GE(s.theta, 0.2);
    EXPECT_LT(s.theta, 1.1);
    ASSERT_EQ(s.duals.size(), 51u);
    EXPECT_EQ(s.duals[0], 0.0);
    for (int i = 1; i <= 50; ++i) {
      double t_max = 0.0;
      for (int j = 0; j <= 50; ++j) {
        if (j != i) t_max = std::max(t_max, inst.travel(j, i));
      }
      EXPECT_GE(s.duals[static_cast<std::size_t>(i)], 0.0);
      EXPECT_LT(s.duals[static_cast<std::size_t>(i)], s.theta * t_max);
    }
  }
}

TEST(ExportTrainingSetTest, WritesConsistentSamples) {
  const auto dir = TempDir("training_set");
  GenConfig cfg;
  cfg.n = 12;
  cfg.seed = 21;
  const auto samples = ExportTrainingSet(3, cfg, dir);
  ASSERT_EQ(samples.size(), 3u);
  EXPECT_EQ(samples[1].filename(), "sample_00001");
  for (const auto& sample : samples) {
    const VrptwInstance inst = ReadInstance(sample / "instance.json");
    EXPECT_EQ(inst.num_customers(), 12);
    const std::vector<double> duals = DualsFromJson(ReadTextFile(sample / "duals.json"));
    const DoubleMatrix q = LoadMatrix(sample / "q.bin");
    // The stored q must be exactly what the pricing graph yields.
    EXPECT_EQ(q, BuildPricing(inst, duals).q);
  }
  // Samples differ from each other.
  EXPECT_NE(ReadTextFile(samples[0] / "instance.json"), ReadTextFile(samples[1] / "instance.json"));
  // Deterministic in the config.
  const auto again = ExportTrainingSet(3, cfg, TempDir("training_set_again"));
  EXPECT_EQ(ReadTextFile(samples[2] / "q.bin"), ReadTextFile(again[2] / "q.bin"));
}

}  // namespace
}  // namespace cgr
