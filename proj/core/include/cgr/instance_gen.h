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

#ifndef CGR_INSTANCE_GEN_H_
#define CGR_INSTANCE_GEN_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cgr/instance.h"

namespace cgr {

struct GenConfig {
  int n = 200;
  double capacity = 50.0;
  std::uint64_t seed = 0;
  double depot_horizon = 18.0;
};

// 50 for up to 500 customers, 80 beyond.
double DefaultCapacity(int n);

// Uniform coordinates on the unit square, integer demands on [1, 10],
// service times on [0.2, 0.5], integer window starts on [0, 16] with window
// length 1 or 2, depot window [0, depot_horizon]. Pure in cfg.
VrptwInstance GenerateInstance(const GenConfig& cfg);

struct DualSample {
  std::vector<double> duals;  // per node, duals[0] == 0
  double theta = 0.0;
};

// theta ~ U[0.2, 1.1] once per call, then d_i ~ U[0, theta * t_i^max] where
// t_i^max is the longest travel time into node i.
DualSample SampleDuals(const VrptwInstance& instance, std::uint64_t seed);

// Max travel time into node i over all other nodes.
std::vector<double> MaxIncomingTravel(const VrptwInstance& instance);

// Writes count sample directories "sample_00000", ... under out_dir, each
// holding instance.json, duals.json and q.bin (HMAP layout). Returns the
// directories in order.
std::vector<std::filesystem::path> ExportTrainingSet(int count, const GenConfig& cfg,
                                                     const std::filesystem::path& out_dir);

}  // namespace cgr

#endif  // CGR_INSTANCE_GEN_H_
