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

#ifndef CGR_MATRIX_H_
#define CGR_MATRIX_H_

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace cgr {

// Dense row-major square matrix indexed by node id (0 = depot).
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size, T fill = T{}) : size_(size), data_(size * size, fill) {}

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < size_ && j < size_);
    return data_[i * size_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < size_ && j < size_);
    return data_[i * size_ + j];
  }

  std::span<T> row(std::size_t i) { return std::span<T>(data_.data() + i * size_, size_); }
  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_.data() + i * size_, size_);
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<T> data_;
};

using DoubleMatrix = SquareMatrix<double>;
// uint8_t instead of bool so rows are addressable as spans.
using ArcMask = SquareMatrix<unsigned char>;

}  // namespace cgr

#endif  // CGR_MATRIX_H_
