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
#include <vector>

#include "fovc/transform.hpp"

namespace fovc {

/// Quantizer step per foveation level: steps[l] = max(1, round(q_base * 2^((n-1-l)/2))).
/// Computed in integer arithmetic so every platform derives identical steps.
class QuantSchedule {
 public:
  explicit QuantSchedule(int q_base = 4, int n = 16);

  int levels() const noexcept { return static_cast<int>(steps_.size()); }
  int q_base() const noexcept { return q_base_; }
  std::int32_t step(int level) const;
  const std::vector<std::int32_t>& steps() const noexcept { return steps_; }

 private:
  int q_base_;
  std::vector<std::int32_t> steps_;
};

/// round_half_away_from_zero(coef / step).
constexpr std::int32_t quantize_value(std::int32_t coef, std::int32_t step) noexcept {
  const std::int64_t mag = coef < 0 ? -std::int64_t{coef} : std::int64_t{coef};
  const auto q = static_cast<std::int32_t>((2 * mag + step) / (2 * std::int64_t{step}));
  return coef < 0 ? -q : q;
}

Block8 quantize_coeffs(const Block8& coeffs, int level, const QuantSchedule& sched);
Block8 dequantize_coeffs(const Block8& q, int level, const QuantSchedule& sched);

}  // namespace fovc
