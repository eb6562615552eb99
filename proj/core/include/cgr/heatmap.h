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

#ifndef CGR_HEATMAP_H_
#define CGR_HEATMAP_H_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cgr/instance.h"
#include "cgr/matrix.h"
#include "cgr/rng.h"

namespace cgr {

// Row-stochastic arc probability matrix T over nodes 0..n (0 = depot).
inline constexpr double kProbRowTolerance = 1e-6;

// Throws std::invalid_argument unless every entry is finite and >= 0 and
// every row sums to 1 within kProbRowTolerance.
void ValidateProbMatrix(const DoubleMatrix& t);

// H = sum_t h_t h_{t+1}^T + h_N h_1^T over the N columns h_t of T (cyclic).
DoubleMatrix HeatFromT(const DoubleMatrix& t);

// Adjusted heat map: top-M retention per customer row, forced depot arcs,
// symmetrization H' = Hbar + Hbar^T, row normalization, per-row samplers.
class HeatMapAdjusted {
 public:
  HeatMapAdjusted() = default;

  // Samplers over arbitrary nonnegative row weights, used as-is (no top-M,
  // no symmetrization). Diagonal weights are ignored.
  static HeatMapAdjusted FromRowWeights(const DoubleMatrix& weights);

  std::size_t size() const { return probabilities_.size(); }
  int top_m() const { return top_m_; }

  // Hbar: retained weights before symmetrization (defines the reduced graph).
  const DoubleMatrix& retained() const { return retained_; }
  // H' with rows normalized to 1.
  const DoubleMatrix& probabilities() const { return probabilities_; }

  bool InSupport(int i, int j) const {
    return probabilities_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) > 0.0;
  }
  bool IsZeroRow(int i) const { return support_[static_cast<std::size_t>(i)].empty(); }
  std::span<const int> Support(int i) const { return support_[static_cast<std::size_t>(i)]; }

  // Inverse-CDF draw from row i with u in [0, 1). Returns -1 for a zero row.
  int Sample(int i, double u) const;
  int Sample(int i, Rng& rng) const { return Sample(i, rng.Uniform01()); }

 private:
  friend HeatMapAdjusted Adjust(const DoubleMatrix& h, int top_m);
  void BuildSamplers();

  int top_m_ = 0;
  DoubleMatrix retained_;
  DoubleMatrix probabilities_;
  std::vector<std::vector<int>> support_;
  std::vector<std::vector<double>> cumulative_;
};

// Customer rows keep their top_m largest customer entries (ties to the lower
// column index); every (0, j) and (i, 0) entry is kept, and a kept depot
// entry that is zero takes the row's largest retained value. The diagonal
// is never retained.
HeatMapAdjusted Adjust(const DoubleMatrix& h, int top_m = 10);

// Model-free stand-in for a trained network: row i is softmax_j(-q_ij / tau).
// Throws std::invalid_argument for tau <= 0.
DoubleMatrix SurrogateT(const PricingInstance& pricing, double temperature);

// HMAP files: "HMAP", version byte 0x01, uint32 LE size N, then N*N IEEE-754
// binary64 LE values, row-major.
class HmapError : public std::runtime_error {
 public:
  enum class Kind { kIo, kBadMagic, kBadVersion, kSizeMismatch, kNaN, kNegative, kRowSum };
  HmapError(Kind kind, const std::string& detail);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view HmapErrorKindName(HmapError::Kind kind);

// Rows within this distance of 1 are renormalized on load; farther rows are
// rejected.
inline constexpr double kLoadRowTolerance = 1e-3;

void SaveMatrix(const DoubleMatrix& m, const std::filesystem::path& path);
// Reads any HMAP matrix without probability checks.
DoubleMatrix LoadMatrix(const std::filesystem::path& path);
// Reads and validates a probability matrix of the given size.
DoubleMatrix LoadT(const std::filesystem::path& path, std::size_t expected_size);

std::vector<unsigned char> EncodeHmap(const DoubleMatrix& m);
DoubleMatrix DecodeHmap(std::span<const unsigned char> bytes);

}  // namespace cgr

#endif  // CGR_HEATMAP_H_
