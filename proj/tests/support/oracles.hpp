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

// Independent reference computations. These deliberately avoid the library's
// implementation paths (separable filters, lifting, closed forms).

#include <array>
#include <cstdint>

#include "fovc/csf.hpp"
#include "fovc/displacement.hpp"
#include "fovc/plane.hpp"

namespace fovc::testing {

/// Per-pixel SSIM evaluated straight from the definition: for each pixel, a
/// two-pass weighted mean/variance/covariance over the truncated 11x11 window.
Plane<double> ssim_map_direct(const FramePlane& ref, const FramePlane& test);

/// Root of CT(f, e) = 1 in f by bisection on the threshold formula.
double cutoff_by_bisection(double e, const CsfParams<double>& p = {});

/// Active channel count of the mask expansion by checking all c thresholds.
int active_channels_by_enumeration(double p, int channels, int levels);

/// Floating-point orthonormal 8x8 DCT-II by the defining cosine sum.
std::array<double, 64> dct8x8_reference(const std::array<double, 64>& block);

/// Brute-force block choice: computes each candidate's SSE from the raw frames
/// and applies the tie-break order explicitly.
Displacement best_displacement_brute_force(const FramePlane& cur, const FramePlane& prev,
                                           int block_row, int block_col, int block_size);

/// Block SSE of cur - shifted prev computed from scratch.
std::int64_t block_sse_direct(const FramePlane& cur, const FramePlane& prev, Displacement d,
                              int block_row, int block_col, int block_size);

}  // namespace fovc::testing
