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

#include "fovc/quant.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fovc/error.hpp"

namespace fovc {

namespace {

std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = 0;
  for (std::int64_t bit = std::int64_t{1} << 62; bit != 0; bit >>= 2) {
    if (v >= r + bit) {
      v -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
  }
  return r;
}

// Nearest integer to b * sqrt(2) for b >= 1. The product is irrational, so no ties.
std::int64_t round_times_sqrt2(std::int64_t b) {
  const std::int64_t m = isqrt(2 * b * b);
  return (4 * m * m + 4 * m + 1 < 8 * b * b) ? m + 1 : m;
}

}  // namespace

QuantSchedule::QuantSchedule(int q_base, int n) : q_base_(q_base) {
  FOVC_REQUIRE(q_base >= 1 && q_base <= 4096, "q_base must be in [1, 4096]");
  FOVC_REQUIRE(n >= 2 && n <= 16, "level count must be in [2, 16]");
  steps_.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const int e = n - 1 - l;
    const std::int64_t base = std::int64_t{q_base} << (e / 2);
    const std::int64_t step = (e % 2 == 0) ? base : round_times_sqrt2(base);
    steps_[static_cast<std::size_t>(l)] = static_cast<std::int32_t>(std::max<std::int64_t>(1, step));
  }
}

std::int32_t QuantSchedule::step(int level) const {
  if (level < 0 || level >= levels()) {
    throw ContractViolation("quantizer level " + std::to_string(level) + " out of range");
  }
  return steps_[static_cast<std::size_t>(level)];
}

Block8 quantize_coeffs(const Block8& coeffs, int level, const QuantSchedule& sched) {
  const std::int32_t step = sched.step(level);
  return coeffs.unaryExpr([step](std::int32_t c) { return quantize_value(c, step); });
}

Block8 dequantize_coeffs(const Block8& q, int level, const QuantSchedule& sched) {
  return q * sched.step(level);
}

}  // namespace fovc
