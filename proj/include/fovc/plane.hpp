// Copyright 2026 The fovcodec Authors.
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

#pragma once

#include <algorithm>
#include <cstdint>

#include <Eigen/Core>

#include "fovc/error.hpp"

namespace fovc {

template <typename T>
using PlaneArray = Eigen::Array<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A dense, row-major 2-D grid of samples with strictly positive dimensions.
/// Indexing follows Eigen: (row, col).
template <typename T>
class Plane {
 public:
  using Scalar = T;
  using Array = PlaneArray<T>;

  Plane(int width, int height, T fill = T{}) {
    FOVC_REQUIRE(width > 0 && height > 0, "plane dimensions must be positive");
    data_.setConstant(height, width, fill);
  }

  explicit Plane(Array samples) : data_(std::move(samples)) {
    FOVC_REQUIRE(data_.rows() > 0 && data_.cols() > 0, "plane dimensions must be positive");
  }

  int width() const noexcept { return static_cast<int>(data_.cols()); }
  int height() const noexcept { return static_cast<int>(data_.rows()); }
  Eigen::Index size() const noexcept { return data_.size(); }

  T operator()(int row, int col) const { return data_(row, col); }
  T& operator()(int row, int col) { return data_(row, col); }

  /// Read with clamp-to-edge addressing.
  T clamped(int row, int col) const {
    return data_(std::clamp(row, 0, height() - 1), std::clamp(col, 0, width() - 1));
  }

  const Array& array() const noexcept { return data_; }
  Array& array() noexcept { return data_; }

  bool same_shape(const Plane& other) const noexcept {
    return width() == other.width() && height() == other.height();
  }
  template <typename U>
  bool same_shape(const Plane<U>& other) const noexcept {
    return width() == other.width() && height() == other.height();
  }

  friend bool operator==(const Plane& a, const Plane& b) {
    return a.same_shape(b) && (a.data_ == b.data_).all();
  }

 private:
  Array data_;
};

using FramePlane = Plane<std::uint8_t>;

/// Signed temporal residuals; samples lie in [-255, 255].
using ResidualPlane = Plane<std::int16_t>;

inline std::uint8_t clamp_pixel(int v) noexcept {
  return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

/// Integer ceil(a / b) for positive operands.
constexpr int ceil_div(int a, int b) noexcept { return (a + b - 1) / b; }

}  // namespace fovc
