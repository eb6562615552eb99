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

#ifndef CGR_REDUCTION_H_
#define CGR_REDUCTION_H_

#include <cstddef>
#include <string_view>

#include "cgr/heatmap.h"
#include "cgr/instance.h"
#include "cgr/matrix.h"

namespace cgr {

enum class Strategy { kNone, kBe2, kUlgr };

std::string_view StrategyName(Strategy s);
// Accepts "none", "be2", "ulgr" (case-insensitive). Throws
// std::invalid_argument otherwise.
Strategy ParseStrategy(std::string_view name);

// Arc mask over the pricing graph. The diagonal is never kept.
struct ReducedGraph {
  ArcMask keep;
  Strategy strategy = Strategy::kNone;
  std::size_t retained = 0;

  bool Keeps(int i, int j) const {
    return keep(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0;
  }
};

// Number of off-diagonal arcs n(n+1) for n customers plus the depot.
std::size_t ArcCount(std::size_t num_nodes);

// ceil(beta * |A|), robust to the representation error of beta.
std::size_t Be2KeepCount(std::size_t num_arcs, double beta);

// Keeps the ceil(beta * |A|) arcs with the smallest p over all off-diagonal
// arcs, feasible or not; ties go to the lexicographically smaller (i, j).
// Throws std::invalid_argument unless 0 < beta <= 1.
ReducedGraph Be2(const PricingInstance& pricing, double beta = 0.2);

ReducedGraph NoReduction(const PricingInstance& pricing);

// Support of the retained heat map Hbar plus every depot arc.
ReducedGraph UlgrMask(const HeatMapAdjusted& adjusted);

}  // namespace cgr

#endif  // CGR_REDUCTION_H_
