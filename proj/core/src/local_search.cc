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

#include "cgr/local_search.h"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "parallel.h"

namespace cgr {

std::string_view MoveKindName(MoveKind kind) {
  switch (kind) {
    case MoveKind::kTruncate:
      return "truncate";
    case MoveKind::kInsert:
      return "insert";
    case MoveKind::kRemove:
      return "remove";
    case MoveKind::kSwap:
      return "swap";
  }
  return "unknown";
}

ExchangeMove MakeExchange(std::span<const int> sequence, std::size_t pos, int v) {
  if (sequence.size() < 2 || pos + 1 >= sequence.size()) {
    throw std::invalid_argument("exchange anchor must have a successor");
  }
  if (sequence[pos] == v) {
    throw std::invalid_argument("exchange node equals the anchor");
  }
  std::vector<int> seq(sequence.begin(), sequence.end());
  if (v == 0) {
    seq.resize(pos + 1);
    seq.push_back(0);
    return {MoveKind::kTruncate, std::move(seq)};
  }
  // Only customer positions can hold v; the end depots are never customers.
  std::optional<std::size_t> at;
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (seq[k] == v) {
      at = k;
      break;
    }
  }
  const std::size_t o = pos + 1;
  if (!at) {
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(o), v);
    return {MoveKind::kInsert, std::move(seq)};
  }
  if (*at == o + 1) {
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(o));
    return {MoveKind::kRemove, std::move(seq)};
  }
  std::swap(seq[*at], seq[o]);
  // When o is the closing depot, v now ends the path; close it again so every
  // move yields a depot-to-depot sequence (rejected later as malformed).
  if (seq.back() != 0) seq.push_back(0);
  return {MoveKind::kSwap, std::move(seq)};
}

Column LsImprove(const Column& initial, const PricingInstance& pricing, const HeatMapAdjusted& hmap,
                 const LsParams& params, Rng& rng) {
  if (params.c_e < 1) throw std::invalid_argument("c_e must be at least 1");
  const VrptwInstance& instance = *pricing.instance;
  Column current = initial;
  for (int iter = 0; iter < params.c_e; ++iter) {
    const std::size_t pos = rng.Index(current.sequence.size() - 1);
    const int u = current.sequence[pos];
    int v = hmap.Sample(u, rng);
    for (int redraw = 0; v == u && redraw < params.max_redraws; ++redraw) {
      v = hmap.Sample(u, rng);
    }
    if (v < 0 || v == u) continue;
    ExchangeMove move = MakeExchange(current.sequence, pos, v);
    if (move.sequence.size() < 3) continue;  // empty route
    std::optional<Column> candidate = MakeColumn(move.sequence, instance, pricing.duals);
    if (candidate && candidate->reduced_cost < current.reduced_cost) {
      current = std::move(*candidate);
    }
  }
  return current;
}

PricingResult LsPrice(const PricingInstance& pricing, const ReducedGraph& mask,
                      const HeatMapAdjusted& hmap, const LsParams& params,
                      const DpParams& construction, std::uint64_t seed) {
  const auto started = std::chrono::steady_clock::now();
  PricingResult seeds = ConstructInitial(pricing, mask, seed, construction);
  const std::size_t workers =
      std::min(seeds.columns.size(), static_cast<std::size_t>(std::max(params.workers, 0)));
  std::vector<Column> improved(workers);
  internal::ParallelFor(workers, internal::ResolveThreads(params.threads, workers),
                        [&](std::size_t w) {
                          Rng rng = Rng::ForStream(seed, Stream::kLocalSearchWorker, w);
                          improved[w] = LsImprove(seeds.columns[w], pricing, hmap, params, rng);
                        });
  // Construction columns that already price negatively are kept alongside
  // the improved ones.
  improved.insert(improved.end(), seeds.columns.begin(), seeds.columns.end());
  std::sort(improved.begin(), improved.end(), [](const Column& a, const Column& b) {
    if (a.reduced_cost != b.reduced_cost) return a.reduced_cost < b.reduced_cost;
    return a.sequence < b.sequence;
  });
  PricingResult result;
  result.stats = seeds.stats;
  std::set<std::vector<int>> seen;
  for (Column& c : improved) {
    if (c.reduced_cost < 0.0 && seen.insert(c.sequence).second) {
      result.columns.push_back(std::move(c));
    }
  }
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace cgr
