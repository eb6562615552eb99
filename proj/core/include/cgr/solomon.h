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

#ifndef CGR_SOLOMON_H_
#define CGR_SOLOMON_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgr/instance.h"

namespace cgr {

// Solomon / Gehring-Homberger tabular benchmark files.

struct BenchmarkRow {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double demand = 0.0;
  double ready = 0.0;
  double due = 0.0;
  double service = 0.0;

  friend bool operator==(const BenchmarkRow&, const BenchmarkRow&) = default;
};

struct RawBenchmark {
  std::string name;
  int vehicles = 0;  // parsed, unused by the root-node LP
  double capacity = 0.0;
  std::vector<BenchmarkRow> rows;  // rows[i].id == i, rows[0] is the depot

  int num_customers() const { return static_cast<int>(rows.size()) - 1; }
  friend bool operator==(const RawBenchmark&, const RawBenchmark&) = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kEmpty,
    kMalformedHeader,
    kMissingField,
    kExtraField,
    kNonNumeric,
    kDuplicateId,
    kNonContiguousIds,
  };

  // line is 1-based; column is a field label such as "DUE DATE" (may be
  // empty for header-level errors).
  ParseError(Kind kind, int line, std::string column, const std::string& detail);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  std::string column_;
};

std::string_view ParseErrorKindName(ParseError::Kind kind);

RawBenchmark ParseSolomon(std::string_view text);
RawBenchmark ReadSolomonFile(const std::filesystem::path& path);
std::string SerializeSolomon(const RawBenchmark& raw);

// Scaling applied to model inputs only; the LP side keeps native units.
struct ModelInputScaling {
  double coord_divisor = 1.0;  // max coordinate rounded up to a multiple of 100
  double dual_divisor = 1.0;   // depot horizon / 2
  std::vector<double> x;       // coordinates / coord_divisor
  std::vector<double> y;
};

struct NormalizedBenchmark {
  VrptwInstance instance;
  ModelInputScaling scaling;
};

// Throws InstanceError when every coordinate is zero.
NormalizedBenchmark NormalizeBenchmark(const RawBenchmark& raw);

double CoordinateDivisor(double max_coordinate);

}  // namespace cgr

#endif  // CGR_SOLOMON_H_
