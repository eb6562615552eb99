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

#ifndef CGR_RNG_H_
#define CGR_RNG_H_

#include <cstdint>
#include <random>

namespace cgr {

// Named streams used by the generators. Each stream is seeded independently
// from (seed, stream id), so adding a stream never shifts the draws of an
// existing one. Values are part of the fixture format: do not renumber.
enum class Stream : std::uint64_t {
  kCoordinates = 1,
  kDemands = 2,
  kServiceTimes = 3,
  kWindowLengths = 4,
  kWindowStarts = 5,
  kDualTheta = 16,
  kDualValues = 17,
  kTrainingInstance = 32,
  kTrainingDuals = 33,
  kPricingWorker = 64,
  kLocalSearchWorker = 65,
  kCgIteration = 66,
};

// SplitMix64 finalizer; used for seed derivation only.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t index = 0) {
  return SplitMix64(SplitMix64(seed ^ SplitMix64(stream)) + index);
}

// Portable random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the distribution helpers below are
// implemented here because the std:: distributions are implementation
// defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng ForStream(std::uint64_t seed, Stream stream, std::uint64_t index = 0) {
    return Rng(DeriveSeed(seed, static_cast<std::uint64_t>(stream), index));
  }

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of precision.
  double Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Uniform integer on the closed range [lo, hi], unbiased by rejection.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // Uniform index on [0, n).
  std::size_t Index(std::size_t n) {
    return static_cast<std::size_t>(UniformInt(0, static_cast<std::int64_t>(n) - 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cgr

#endif  // CGR_RNG_H_
