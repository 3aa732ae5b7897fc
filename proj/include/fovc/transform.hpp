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

#include <cstdint>

#include <Eigen/Core>

namespace fovc {

inline constexpr int kTransformSize = 8;

using Block8 = Eigen::Matrix<std::int32_t, kTransformSize, kTransformSize, Eigen::RowMajor>;

/// Integer-to-integer approximation of the orthonormal 8x8 DCT-II, applied to
/// rows then columns. Built from fixed-point lifting rotations, so
/// inverse_transform(forward_transform(b)) == b for every integer block whose
/// samples lie in [-255, 255]. Output is on the orthonormal scale (DC of a
/// constant block v is 8 v) and deviates from the exact DCT by a few units.
Block8 forward_transform(const Block8& block);

/// Exact inverse of forward_transform.
Block8 inverse_transform(const Block8& coeffs);

/// One-dimensional building blocks, exposed for tests.
void forward_dct8(std::int32_t* x);
void inverse_dct8(std::int32_t* x);

}  // namespace fovc
