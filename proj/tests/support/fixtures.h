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

#ifndef CGR_TESTS_SUPPORT_FIXTURES_H_
#define CGR_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cgr/instance.h"

namespace cgr::testing {

// Generator instance (tight one- or two-hour windows).
VrptwInstance GeneratedInstance(int n, std::uint64_t seed);

// Wide windows and a small capacity: many short routes, so pricing and
// local search have real choices while enumeration stays cheap.
VrptwInstance LooseInstance(int n, std::uint64_t seed, double capacity = 15.0);

// Generator duals for the instance, per node.
std::vector<double> SampledDuals(const VrptwInstance& instance, std::uint64_t seed);

// Builds an instance from (x, y, demand, service, ready, due) rows, depot
// first.
VrptwInstance MakeInstance(const std::vector<Node>& nodes, double capacity);

// Fresh empty directory under the system temp dir.
std::filesystem::path TempDir(const std::string& name);

std::filesystem::path TestDataPath(const std::string& name);

}  // namespace cgr::testing

#endif  // CGR_TESTS_SUPPORT_FIXTURES_H_
