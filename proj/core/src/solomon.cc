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

#include "cgr/solomon.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "cgr/format.h"
#include "cgr/instance_io.h"

namespace cgr {

namespace {

constexpr std::array<std::string_view, 7> kColumnLabels = {
    "CUST NO.", "XCOORD.", "YCOORD.", "DEMAND", "READY TIME", "DUE DATE", "SERVICE TIME"};
// Substrings that identify each column in the table header.
constexpr std::array<std::string_view, 7> kColumnKeys = {"CUST",  "XCOORD", "YCOORD", "DEMAND",
                                                         "READY", "DUE",    "SERVICE"};

struct Line {
  int number;
  std::string text;
};

std::vector<std::string> Tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string Upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

bool IsBlank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

double ParseNumber(const std::string& token, int line, std::string_view column) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(ParseError::Kind::kNonNumeric, line, std::string(column),
                     "not a number: '" + token + "'");
  }
  return value;
}

class LineCursor {
 public:
  explicit LineCursor(std::string_view text) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      ++number;
      if (!IsBlank(line)) lines_.push_back({number, std::move(line)});
      start = end + 1;
    }
  }

  bool done() const { return next_ >= lines_.size(); }
  const Line* Next() { return done() ? nullptr : &lines_[next_++]; }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

const Line& Expect(LineCursor& cursor, std::string_view what) {
  const Line* line = cursor.Next();
  if (line == nullptr) {
    throw ParseError(ParseError::Kind::kMalformedHeader, cursor.last_line(), "",
                     "unexpected end of file, expected " + std::string(what));
  }
  return *line;
}

}  // namespace

ParseError::ParseError(Kind kind, int line, std::string column, const std::string& detail)
    : std::runtime_error(std::string(ParseErrorKindName(kind)) + " at line " +
                         std::to_string(line) +
                         (column.empty() ? "" : ", column '" + column + "'") + ": " + detail),
      kind_(kind),
      line_(line),
      column_(std::move(column)) {}

std::string_view ParseErrorKindName(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kEmpty:
      return "empty file";
    case ParseError::Kind::kMalformedHeader:
      return "malformed header";
    case ParseError::Kind::kMissingField:
      return "missing field";
    case ParseError::Kind::kExtraField:
      return "extra field";
    case ParseError::Kind::kNonNumeric:
      return "non-numeric field";
    case ParseError::Kind::kDuplicateId:
      return "duplicate id";
    case ParseError::Kind::kNonContiguousIds:
      return "non-contiguous ids";
  }
  return "parse error";
}

RawBenchmark ParseSolomon(std::string_view text) {
  LineCursor cursor(text);
  if (cursor.done()) {
    throw ParseError(ParseError::Kind::kEmpty, 0, "", "no content");
  }
  RawBenchmark raw;
  {
    const auto tokens = Tokens(cursor.Next()->text);
    raw.name = tokens.front();
  }

  const Line& vehicle = Expect(cursor, "VEHICLE");
  if (Upper(vehicle.text).find("VEHICLE") == std::string::npos) {
    throw ParseError(ParseError::Kind::kMalformedHeader, vehicle.number, "",
                     "expected VEHICLE section");
  }
  const Line& fleet_header = Expect(cursor, "NUMBER CAPACITY");
  {
    const std::string upper = Upper(fleet_header.text);
    if (upper.find("NUMBER") == std::string::npos || upper.find("CAPACITY") == std::string::npos) {
      throw ParseError(ParseError::Kind::kMalformedHeader, fleet_header.number, "",
                       "expected NUMBER / CAPACITY header");
    }
  }
  const Line& fleet = Expect(cursor, "fleet size and capacity");
  {
    const auto tokens = Tokens(fleet.text);
    if (tokens.size() < 2) {
      throw ParseError(ParseError::Kind::kMissingField, fleet.number,
                       tokens.empty() ? "NUMBER" : "CAPACITY",
                       "expected vehicle count and capacity");
    }
    if (tokens.size() > 2) {
      throw ParseError(ParseError::Kind::kExtraField, fleet.number, "",
                       "expected exactly two fleet fields");
    }
    const double vehicles = ParseNumber(tokens[0], fleet.number, "NUMBER");
    if (vehicles != std::floor(vehicles)) {
      throw ParseError(ParseError::Kind::kNonNumeric, fleet.number, "NUMBER",
                       "vehicle count must be an integer");
    }
    raw.vehicles = static_cast<int>(vehicles);
    raw.capacity = ParseNumber(tokens[1], fleet.number, "CAPACITY");
  }

  const Line& customer = Expect(cursor, "CUSTOMER");
  if (Upper(customer.text).find("CUSTOMER") == std::string::npos) {
    throw ParseError(ParseError::Kind::kMalformedHeader, customer.number, "",
                     "expected CUSTOMER section");
  }
  const Line& columns = Expect(cursor, "column header");
  {
    const std::string upper = Upper(columns.text);
    for (std::size_t c = 0; c < kColumnKeys.size(); ++c) {
      if (upper.find(kColumnKeys[c]) == std::string::npos) {
        throw ParseError(ParseError::Kind::kMissingField, columns.number,
                         std::string(kColumnLabels[c]), "column missing from table header");
      }
    }
  }

  std::set<int> seen;
  while (const Line* line = cursor.Next()) {
    const auto tokens = Tokens(line->text);
    if (tokens.size() < kColumnLabels.size()) {
      throw ParseError(ParseError::Kind::kMissingField, line->number,
                       std::string(kColumnLabels[tokens.size()]),
                       "row has " + std::to_string(tokens.size()) + " of 7 fields");
    }
    if (tokens.size() > kColumnLabels.size()) {
      throw ParseError(ParseError::Kind::kExtraField, line->number, "",
                       "row has " + std::to_string(tokens.size()) + " fields");
    }
    std::array<double, 7> v{};
    for (std::size_t c = 0; c < v.size(); ++c) {
      v[c] = ParseNumber(tokens[c], line->number, kColumnLabels[c]);
    }
    if (v[0] != std::floor(v[0]) || v[0] < 0) {
      throw ParseError(ParseError::Kind::kNonNumeric, line->number, std::string(kColumnLabels[0]),
                       "id must be a non-negative integer");
    }
    const int id = static_cast<int>(v[0]);
    if (!seen.insert(id).second) {
      throw ParseError(ParseError::Kind::kDuplicateId, line->number, std::string(kColumnLabels[0]),
                       "id " + std::to_string(id) + " repeated");
    }
    raw.rows.push_back({id, v[1], v[2], v[3], v[4], v[5], v[6]});
  }
  if (raw.rows.size() < 2) {
    throw ParseError(ParseError::Kind::kMalformedHeader, cursor.last_line(), "",
                     "need a depot row and at least one customer row");
  }
  std::sort(raw.rows.begin(), raw.rows.end(),
            [](const BenchmarkRow& a, const BenchmarkRow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < raw.rows.size(); ++i) {
    if (raw.rows[i].id != static_cast<int>(i)) {
      throw ParseError(
          ParseError::Kind::kNonContiguousIds, cursor.last_line(), std::string(kColumnLabels[0]),
          "expected id " + std::to_string(i) + ", found " + std::to_string(raw.rows[i].id));
    }
  }
  return raw;
}

RawBenchmark ReadSolomonFile(const std::filesystem::path& path) {
  return ParseSolomon(ReadTextFile(path));
}

std::string SerializeSolomon(const RawBenchmark& raw) {
  std::ostringstream out;
  out << raw.name << "\n\nVEHICLE\nNUMBER     CAPACITY\n"
      << "  " << raw.vehicles << "          " << FormatDouble(raw.capacity) << "\n\nCUSTOMER\n"
      << "CUST NO.  XCOORD.   YCOORD.    DEMAND   READY TIME  DUE DATE   "
         "SERVICE TIME\n\n";
  for (const BenchmarkRow& row : raw.rows) {
    out << "  " << row.id;
    for (double v : {row.x, row.y, row.demand, row.ready, row.due, row.service}) {
      out << "  " << FormatDouble(v);
    }
    out << "\n";
  }
  return out.str();
}

double CoordinateDivisor(double max_coordinate) {
  if (!(max_coordinate > 0.0)) {
    throw InstanceError("coordinate scaling needs a positive maximum coordinate");
  }
  return std::ceil(max_coordinate / 100.0) * 100.0;
}

NormalizedBenchmark NormalizeBenchmark(const RawBenchmark& raw) {
  std::vector<Node> nodes;
  nodes.reserve(raw.rows.size());
  double max_coord = 0.0;
  for (const BenchmarkRow& row : raw.rows) {
    nodes.push_back({row.x, row.y, row.demand, row.service, row.ready, row.due});
    max_coord = std::max({max_coord, row.x, row.y});
  }
  NormalizedBenchmark out{VrptwInstance(std::move(nodes), raw.capacity), {}};
  out.scaling.coord_divisor = CoordinateDivisor(max_coord);
  out.scaling.dual_divisor = out.instance.horizon() / 2.0;
  for (const BenchmarkRow& row : raw.rows) {
    out.scaling.x.push_back(row.x / out.scaling.coord_divisor);
    out.scaling.y.push_back(row.y / out.scaling.coord_divisor);
  }
  return out;
}

}  // namespace cgr
