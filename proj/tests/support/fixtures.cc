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

#include "support/fixtures.h"

#include "cgr/instance_gen.h"
#include "cgr/rng.h"

namespace cgr::testing {

VrptwInstance GeneratedInstance(int n, std::uint64_t seed) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.capacity = DefaultCapacity(n);
  return GenerateInstance(cfg);
}

VrptwInstance LooseInstance(int n, std::uint64_t seed, double capacity) {
  Rng rng(seed);
  std::vector<Node> nodes;
  nodes.push_back(Node{0.5, 0.5, 0.0, 0.0, 0.0, 10.0});
  for (int i = 1; i <= n; ++i) {
    Node node;
    node.x = rng.Uniform01();
    node.y = rng.Uniform01();
    node.demand = static_cast<double>(rng.UniformInt(1, 6));
    node.service = rng.Uniform(0.1, 0.4);
    node.ready = rng.Uniform(0.0, 5.0);
    node.due = node.ready + rng.Uniform(1.5, 4.0);
    nodes.push_back(node);
  }
  return VrptwInstance(std::move(nodes), capacity);
}

std::vector<double> SampledDuals(const VrptwInstance& instance, std::uint64_t seed) {
  return SampleDuals(instance, seed).duals;
}

VrptwInstance MakeInstance(const std::vector<Node>& nodes, double capacity) {
  return VrptwInstance(nodes, capacity);
}

std::filesystem::path TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("cgr_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path TestDataPath(const std::string& name) {
  return std::filesystem::path(CGR_TEST_DATA_DIR) / name;
}

}  // namespace cgr::testing
