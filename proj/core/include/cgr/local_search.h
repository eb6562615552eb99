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

#ifndef CGR_LOCAL_SEARCH_H_
#define CGR_LOCAL_SEARCH_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cgr/heatmap.h"
#include "cgr/instance.h"
#include "cgr/pricing_dp.h"
#include "cgr/reduction.h"
#include "cgr/rng.h"

namespace cgr {

struct LsParams {
  // Exchange iterations per worker; must be >= 1.
  int c_e = 20;
  // Multi-start count: each worker improves one construction column.
  int workers = 20;
  // OS threads running the workers; 0 selects hardware concurrency.
  int threads = 0;
  // Redraws when the sampled node equals the anchor before the iteration is
  // skipped.
  int max_redraws = 8;
};

// The four exchange cases for an anchor u (with successor o) and a sampled
// node v != u.
enum class MoveKind {
  kTruncate,  // v is the depot: close the route right after u
  kInsert,    // v is off the path: insert v between u and o
  kRemove,    // v follows o: drop o
  kSwap,      // otherwise: exchange the positions of v and o
};

std::string_view MoveKindName(MoveKind kind);

struct ExchangeMove {
  MoveKind kind;
  std::vector<int> sequence;
};

// Builds the candidate for anchor position `pos` (0 <= pos < size - 1) and
// node v != sequence[pos]. The candidate is not checked for feasibility.
// Throws std::invalid_argument on a bad position or v == sequence[pos].
ExchangeMove MakeExchange(std::span<const int> sequence, std::size_t pos, int v);

// Heat-map-guided exchange search from a feasible column. Each iteration
// draws one anchor uniformly and one node from row u of H'; the candidate
// replaces the current path only when feasible and strictly better. The
// result is never worse than `initial`.
Column LsImprove(const Column& initial, const PricingInstance& pricing, const HeatMapAdjusted& hmap,
                 const LsParams& params, Rng& rng);

// Multi-start local search: construction columns from ConstructInitial seed
// the workers (at most params.workers of them, in construction order).
// Worker w draws from its own stream derived from (seed, w). Returns the
// improved and construction columns with negative reduced cost, deduplicated
// and sorted by (reduced cost, sequence).
PricingResult LsPrice(const PricingInstance& pricing, const ReducedGraph& mask,
                      const HeatMapAdjusted& hmap, const LsParams& params,
                      const DpParams& construction, std::uint64_t seed);

}  // namespace cgr

#endif  // CGR_LOCAL_SEARCH_H_
