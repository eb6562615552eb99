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

#include "cgr/reduction.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgr {

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kNone:
      return "none";
    case Strategy::kBe2:
      return "be2";
    case Strategy::kUlgr:
      return "ulgr";
  }
  return "unknown";
}

Strategy ParseStrategy(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "none") return Strategy::kNone;
  if (lower == "be2") return Strategy::kBe2;
  if (lower == "ulgr") return Strategy::kUlgr;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::size_t ArcCount(std::size_t num_nodes) {
  return num_nodes == 0 ? 0 : num_nodes * (num_nodes - 1);
}

std::size_t Be2KeepCount(std::size_t num_arcs, double beta) {
  // 0.2 * 40200 evaluates to 8040.000000000001 in binary64; shave the
  // representation error before rounding up.
  const double raw = beta * static_cast<double>(num_arcs);
  const double k = std::ceil(raw - 1e-9 * std::max(1.0, raw));
  return std::min(num_arcs, static_cast<std::size_t>(std::max(0.0, k)));
}

ReducedGraph Be2(const PricingInstance& pricing, double beta) {
  if (!(beta > 0.0) || beta > 1.0) {
    throw std::invalid_argument("BE2 beta must lie in (0, 1]");
  }
  const std::size_t n = pricing.p.size();
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  arcs.reserve(ArcCount(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) arcs.emplace_back(i, j);
    }
  }
  const std::size_t keep = Be2KeepCount(arcs.size(), beta);
  std::nth_element(arcs.begin(), arcs.begin() + static_cast<std::ptrdiff_t>(keep), arcs.end(),
                   [&](const auto& a, const auto& b) {
                     const double pa = pricing.p(a.first, a.second);
                     const double pb = pricing.p(b.first, b.second);
                     if (pa != pb) return pa < pb;
                     return a < b;
                   });
  ReducedGraph g{ArcMask(n, 0), Strategy::kBe2, keep};
  for (std::size_t k = 0; k < keep; ++k) g.keep(arcs[k].first, arcs[k].second) = 1;
  return g;
}

ReducedGraph NoReduction(const PricingInstance& pricing) {
  const std::size_t n = pricing.p.size();
  ReducedGraph g{ArcMask(n, 1), Strategy::kNone, ArcCount(n)};
  for (std::size_t i = 0; i < n; ++i) g.keep(i, i) = 0;
  return g;
}

ReducedGraph UlgrMask(const HeatMapAdjusted& adjusted) {
  const std::size_t n = adjusted.size();
  ReducedGraph g{ArcMask(n, 0), Strategy::kUlgr, 0};
  const DoubleMatrix& bar = adjusted.retained();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (bar(i, j) > 0.0 || i == 0 || j == 0) {
        g.keep(i, j) = 1;
        ++g.retained;
      }
    }
  }
  return g;
}

}  // namespace cgr
