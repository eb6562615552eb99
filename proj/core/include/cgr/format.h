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

#ifndef CGR_FORMAT_H_
#define CGR_FORMAT_H_

#include <charconv>
#include <string>

namespace cgr {

// Shortest decimal text that parses back to the same double; "inf", "-inf"
// and "nan" for non-finite values.
inline std::string FormatDouble(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

}  // namespace cgr

#endif  // CGR_FORMAT_H_
