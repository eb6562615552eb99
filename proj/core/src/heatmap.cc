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

#include "cgr/heatmap.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>
#include <string>

namespace cgr {

void ValidateProbMatrix(const DoubleMatrix& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    double sum = 0.0;
    for (double v : t.row(i)) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("probability matrix row " + std::to_string(i) +
                                    " has a negative or non-finite entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kProbRowTolerance) {
      throw std::invalid_argument("probability matrix row " + std::to_string(i) + " sums to " +
                                  std::to_string(sum));
    }
  }
}

DoubleMatrix HeatFromT(const DoubleMatrix& t) {
  const std::size_t n = t.size();
  // shifted(j, k) = T(j, k + 1 mod n), so H(i, j) = <T row i, shifted row j>.
  DoubleMatrix shifted(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) shifted(j, k) = t(j, (k + 1) % n);
  }
  DoubleMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ti = t.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto sj = shifted.row(j);
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += ti[k] * sj[k];
      h(i, j) = acc;
    }
  }
  return h;
}

int HeatMapAdjusted::Sample(int i, double u) const {
  const auto& cdf = cumulative_[static_cast<std::size_t>(i)];
  if (cdf.empty()) return -1;
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
  const std::size_t k = std::min<std::size_t>(
      static_cast<std::size_t>(std::distance(cdf.begin(), it)), cdf.size() - 1);
  return support_[static_cast<std::size_t>(i)][k];
}

void HeatMapAdjusted::BuildSamplers() {
  const std::size_t n = probabilities_.size();
  support_.assign(n, {});
  cumulative_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    auto row = probabilities_.row(i);
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    if (!(sum > 0.0)) {
      std::fill(row.begin(), row.end(), 0.0);
      continue;
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] /= sum;
      if (row[j] > 0.0) {
        acc += row[j];
        support_[i].push_back(static_cast<int>(j));
        cumulative_[i].push_back(acc);
      }
    }
  }
}

HeatMapAdjusted HeatMapAdjusted::FromRowWeights(const DoubleMatrix& weights) {
  HeatMapAdjusted out;
  out.top_m_ = static_cast<int>(weights.size());
  out.retained_ = weights;
  out.probabilities_ = weights;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out.retained_(i, i) = 0.0;
    out.probabilities_(i, i) = 0.0;
    for (double& v : out.probabilities_.row(i)) {
      if (!(v > 0.0)) v = 0.0;
    }
  }
  out.BuildSamplers();
  return out;
}

HeatMapAdjusted Adjust(const DoubleMatrix& h, int top_m) {
  if (top_m < 0) throw std::invalid_argument("top_m must be >= 0");
  const std::size_t n = h.size();
  HeatMapAdjusted out;
  out.top_m_ = top_m;
  DoubleMatrix& bar = out.retained_;
  bar = DoubleMatrix(n);

  std::vector<std::size_t> order;
  for (std::size_t i = 1; i < n; ++i) {
    order.clear();
    for (std::size_t j = 1; j < n; ++j) {
      if (j != i && h(i, j) > 0.0) order.push_back(j);
    }
    const std::size_t keep = std::min(order.size(), static_cast<std::size_t>(top_m));
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        if (h(i, a) != h(i, b)) return h(i, a) > h(i, b);
                        return a < b;
                      });
    for (std::size_t k = 0; k < keep; ++k) bar(i, order[k]) = h(i, order[k]);
  }
  for (std::size_t j = 1; j < n; ++j) bar(0, j) = std::max(0.0, h(0, j));
  for (std::size_t i = 1; i < n; ++i) bar(i, 0) = std::max(0.0, h(i, 0));

  // Forced depot entries must be sampleable.
  for (std::size_t i = 0; i < n; ++i) {
    double row_max = 0.0;
    for (double v : bar.row(i)) row_max = std::max(row_max, v);
    if (!(row_max > 0.0)) row_max = 1.0;
    if (i == 0) {
      for (std::size_t j = 1; j < n; ++j) {
        if (!(bar(0, j) > 0.0)) bar(0, j) = row_max;
      }
    } else if (!(bar(i, 0) > 0.0)) {
      bar(i, 0) = row_max;
    }
  }

  out.probabilities_ = DoubleMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.probabilities_(i, j) = bar(i, j) + bar(j, i);
    }
  }
  out.BuildSamplers();
  return out;
}

DoubleMatrix SurrogateT(const PricingInstance& pricing, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw std::invalid_argument("surrogate temperature must be positive");
  }
  const std::size_t n = pricing.q.size();
  DoubleMatrix t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto q = pricing.q.row(i);
    double lowest = q[0];
    for (double v : q) lowest = std::min(lowest, v);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = std::exp(-(q[j] - lowest) / temperature);
      sum += t(i, j);
    }
    for (double& v : t.row(i)) v /= sum;
  }
  return t;
}

// HMAP encoding.

namespace {

constexpr unsigned char kMagic[4] = {'H', 'M', 'A', 'P'};
constexpr unsigned char kVersion = 0x01;
constexpr std::size_t kHeaderSize = 4 + 1 + 4;

template <typename T>
void PutLittleEndian(std::vector<unsigned char>& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(std::begin(bytes), std::end(bytes));
  }
  out.insert(out.end(), std::begin(bytes), std::end(bytes));
}

template <typename T>
T GetLittleEndian(const unsigned char* p) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(std::begin(bytes), std::end(bytes));
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

}  // namespace

HmapError::HmapError(Kind kind, const std::string& detail)
    : std::runtime_error("hmap " + std::string(HmapErrorKindName(kind)) + ": " + detail),
      kind_(kind) {}

std::string_view HmapErrorKindName(HmapError::Kind kind) {
  switch (kind) {
    case HmapError::Kind::kIo:
      return "i/o error";
    case HmapError::Kind::kBadMagic:
      return "magic mismatch";
    case HmapError::Kind::kBadVersion:
      return "unsupported version";
    case HmapError::Kind::kSizeMismatch:
      return "size mismatch";
    case HmapError::Kind::kNaN:
      return "non-finite entry";
    case HmapError::Kind::kNegative:
      return "negative entry";
    case HmapError::Kind::kRowSum:
      return "row-sum violation";
  }
  return "error";
}

std::vector<unsigned char> EncodeHmap(const DoubleMatrix& m) {
  std::vector<unsigned char> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kVersion);
  PutLittleEndian<std::uint32_t>(out, static_cast<std::uint32_t>(m.size()));
  out.reserve(kHeaderSize + m.data().size() * sizeof(double));
  for (double v : m.data()) PutLittleEndian<double>(out, v);
  return out;
}

DoubleMatrix DecodeHmap(std::span<const unsigned char> bytes) {
  if (bytes.size() < 4 || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw HmapError(HmapError::Kind::kBadMagic, "expected 'HMAP'");
  }
  if (bytes.size() < kHeaderSize) {
    throw HmapError(HmapError::Kind::kSizeMismatch, "truncated header");
  }
  if (bytes[4] != kVersion) {
    throw HmapError(HmapError::Kind::kBadVersion,
                    "version " + std::to_string(static_cast<int>(bytes[4])));
  }
  const auto n = GetLittleEndian<std::uint32_t>(bytes.data() + 5);
  const std::size_t expected = kHeaderSize + static_cast<std::size_t>(n) * n * sizeof(double);
  if (bytes.size() != expected) {
    throw HmapError(HmapError::Kind::kSizeMismatch,
                    "header says " + std::to_string(n) + "x" + std::to_string(n) + " (" +
                        std::to_string(expected) + " bytes), file has " +
                        std::to_string(bytes.size()));
  }
  DoubleMatrix m(n);
  const unsigned char* p = bytes.data() + kHeaderSize;
  for (double& v : m.data()) {
    v = GetLittleEndian<double>(p);
    p += sizeof(double);
  }
  return m;
}

void SaveMatrix(const DoubleMatrix& m, const std::filesystem::path& path) {
  const auto bytes = EncodeHmap(m);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw HmapError(HmapError::Kind::kIo, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw HmapError(HmapError::Kind::kIo, "write failed: " + path.string());
}

DoubleMatrix LoadMatrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HmapError(HmapError::Kind::kIo, "cannot open " + path.string());
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  return DecodeHmap(bytes);
}

DoubleMatrix LoadT(const std::filesystem::path& path, std::size_t expected_size) {
  DoubleMatrix t = LoadMatrix(path);
  if (t.size() != expected_size) {
    throw HmapError(HmapError::Kind::kSizeMismatch,
                    "matrix is " + std::to_string(t.size()) + "x" + std::to_string(t.size()) +
                        ", instance needs " + std::to_string(expected_size));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    double sum = 0.0;
    for (double v : t.row(i)) {
      if (!std::isfinite(v)) {
        throw HmapError(HmapError::Kind::kNaN, "row " + std::to_string(i));
      }
      if (v < 0.0) throw HmapError(HmapError::Kind::kNegative, "row " + std::to_string(i));
      sum += v;
    }
    const double off = std::abs(sum - 1.0);
    if (off > kLoadRowTolerance) {
      throw HmapError(HmapError::Kind::kRowSum,
                      "row " + std::to_string(i) + " sums to " + std::to_string(sum));
    }
    if (off > 1e-12) {
      for (double& v : t.row(i)) v /= sum;
    }
  }
  return t;
}

}  // namespace cgr
