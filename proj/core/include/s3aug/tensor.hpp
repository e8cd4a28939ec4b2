// Copyright 2026 The S3Aug Authors.
//
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

#ifndef S3AUG_TENSOR_HPP_
#define S3AUG_TENSOR_HPP_

#include <array>
#include <cassert>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace s3aug {

// Dense row-major array with a fixed rank. The last index varies fastest.
template <typename T, std::size_t Rank>
class Tensor {
 public:
  using value_type = T;
  using Shape = std::array<std::size_t, Rank>;

  Tensor() { shape_.fill(0); }
  explicit Tensor(const Shape& shape, T fill = T{})
      : shape_(shape), data_(element_count(shape), fill) {}

  const Shape& shape() const noexcept { return shape_; }
  std::size_t dim(std::size_t axis) const { return shape_[axis]; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }
  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }

  template <typename... Index>
  T& operator()(Index... index) {
    return data_[offset({static_cast<std::size_t>(index)...})];
  }
  template <typename... Index>
  const T& operator()(Index... index) const {
    return data_[offset({static_cast<std::size_t>(index)...})];
  }

  std::size_t offset(const std::array<std::size_t, Rank>& index) const {
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < Rank; ++axis) {
      assert(index[axis] < shape_[axis]);
      flat = flat * shape_[axis] + index[axis];
    }
    return flat;
  }

  // Number of elements spanned by one step along `axis`.
  std::size_t stride(std::size_t axis) const {
    std::size_t s = 1;
    for (std::size_t a = axis + 1; a < Rank; ++a) s *= shape_[a];
    return s;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

  static std::size_t element_count(const Shape& shape) {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                           std::multiplies<>());
  }

 protected:
  Shape shape_;
  std::vector<T> data_;
};

template <typename T, std::size_t Rank>
std::string shape_string(const std::array<T, Rank>& shape) {
  std::string out;
  for (std::size_t i = 0; i < Rank; ++i) {
    if (i) out += "x";
    out += std::to_string(shape[i]);
  }
  return out;
}

}  // namespace s3aug

#endif  // S3AUG_TENSOR_HPP_
