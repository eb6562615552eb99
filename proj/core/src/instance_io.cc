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

#include "cgr/instance_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cgr {

using nlohmann::json;

std::string InstanceToJson(const VrptwInstance& instance) {
  json nodes = json::array();
  for (const Node& node : instance.nodes()) {
    nodes.push_back({{"x", node.x},
                     {"y", node.y},
                     {"demand", node.demand},
                     {"service", node.service},
                     {"tw", {node.ready, node.due}}});
  }
  json doc = {{"n", instance.num_customers()},
              {"capacity", instance.capacity()},
              {"depot_tw", {instance.node(0).ready, instance.horizon()}},
              {"nodes", std::move(nodes)}};
  return doc.dump(2) + "\n";
}

VrptwInstance InstanceFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("instance json: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const double capacity = doc.at("capacity").get<double>();
    const auto& rows = doc.at("nodes");
    if (static_cast<int>(rows.size()) != n + 1) {
      throw InstanceError("instance json: expected " + std::to_string(n + 1) + " nodes, got " +
                          std::to_string(rows.size()));
    }
    std::vector<Node> nodes;
    nodes.reserve(rows.size());
    for (const auto& row : rows) {
      Node node;
      node.x = row.at("x").get<double>();
      node.y = row.at("y").get<double>();
      node.demand = row.at("demand").get<double>();
      node.service = row.at("service").get<double>();
      const auto& tw = row.at("tw");
      if (tw.size() != 2) throw InstanceError("instance json: tw needs [a, b]");
      node.ready = tw[0].get<double>();
      node.due = tw[1].get<double>();
      nodes.push_back(node);
    }
    if (doc.contains("depot_tw")) {
      const auto& dtw = doc.at("depot_tw");
      if (dtw.size() != 2 || dtw[0].get<double>() != nodes[0].ready ||
          dtw[1].get<double>() != nodes[0].due) {
        throw InstanceError("instance json: depot_tw disagrees with node 0");
      }
    }
    return VrptwInstance(std::move(nodes), capacity);
  } catch (const json::exception& e) {
    throw InstanceError(std::string("instance json: ") + e.what());
  }
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void WriteInstance(const VrptwInstance& instance, const std::filesystem::path& path) {
  WriteTextFile(path, InstanceToJson(instance));
}

VrptwInstance ReadInstance(const std::filesystem::path& path) {
  return InstanceFromJson(ReadTextFile(path));
}

std::string DualsToJson(std::span<const double> duals, double theta) {
  json doc = {{"theta", theta}, {"duals", std::vector<double>(duals.begin(), duals.end())}};
  return doc.dump(2) + "\n";
}

std::vector<double> DualsFromJson(const std::string& text) {
  try {
    return json::parse(text).at("duals").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw InstanceError(std::string("duals json: ") + e.what());
  }
}

}  // namespace cgr
