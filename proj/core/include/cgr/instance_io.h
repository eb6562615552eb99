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

#ifndef CGR_INSTANCE_IO_H_
#define CGR_INSTANCE_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cgr/instance.h"

namespace cgr {

// Instance JSON:
//   { "n": int, "capacity": number, "depot_tw": [0, b0],
//     "nodes": [ {"x", "y", "demand", "service", "tw": [a, b]}, ... ] }
// with nodes[0] the depot. Parse failures throw InstanceError.
std::string InstanceToJson(const VrptwInstance& instance);
VrptwInstance InstanceFromJson(const std::string& text);

void WriteInstance(const VrptwInstance& instance, const std::filesystem::path& path);
VrptwInstance ReadInstance(const std::filesystem::path& path);

// Dual vector JSON: { "duals": [d_0, ..., d_n], "theta": number }.
std::string DualsToJson(std::span<const double> duals, double theta);
std::vector<double> DualsFromJson(const std::string& text);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace cgr

#endif  // CGR_INSTANCE_IO_H_
