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

#include "fovc/transform.hpp"

#include <array>

namespace fovc {

namespace {

// Lifting constants in Q16. A plane rotation by theta,
//   (a, b) -> (a cos - b sin, a sin + b cos),
// factors into three shears: a += p b; b += s a; a += p b, with
// p = (cos - 1) / sin and s = sin. Rounding each shear keeps it invertible.
constexpr int kFracBits = 16;

struct Rotation {
  std::int32_t p;
  std::int32_t s;
};

constexpr Rotation kButterfly{27146, -46341};  // theta = -pi/4
constexpr Rotation kEven{13036, -25080};       // theta = -pi/8

// 4-point DCT-IV as Givens rotations on (i, j), applied in order after the
// input sign flips kOddSigns.
struct PlaneRotation {
  int i;
  int j;
  Rotation r;
};
constexpr std::array<PlaneRotation, 6> kOdd = {{
    {2, 3, {51777, -63757}},
    {1, 2, {-36410, 55645}},
    {1, 3, {-46890, 62027}},
    {0, 1, {-21301, 38531}},
    {0, 2, {-16982, 31828}},
    {0, 3, {-6455, 12785}},
}};
constexpr std::array<std::int32_t, 4> kOddSigns = {1, -1, -1, 1};

inline std::int32_t shear(std::int32_t k, std::int32_t v) {
  const std::int64_t prod = std::int64_t{k} * v + (std::int64_t{1} << (kFracBits - 1));
  return static_cast<std::int32_t>(prod >> kFracBits);
}

inline void rotate(std::int32_t& a, std::int32_t& b, Rotation r) {
  a += shear(r.p, b);
  b += shear(r.s, a);
  a += shear(r.p, b);
}

inline void unrotate(std::int32_t& a, std::int32_t& b, Rotation r) {
  a -= shear(r.p, b);
  b -= shear(r.s, a);
  a -= shear(r.p, b);
}

}  // namespace

void forward_dct8(std::int32_t* x) {
  // Normalized butterflies: x[i] = (x_i + x_{7-i}) / sqrt2, x[7-i] = -(x_i - x_{7-i}) / sqrt2.
  for (int i = 0; i < 4; ++i) rotate(x[i], x[7 - i], kButterfly);

  // Even half: orthonormal 4-point DCT-II of x[0..3].
  std::int32_t p0 = x[0], q0 = x[3], p1 = x[1], q1 = x[2];
  rotate(p0, q0, kButterfly);
  rotate(p1, q1, kButterfly);
  q0 = -q0;
  q1 = -q1;
  rotate(p0, p1, kButterfly);
  rotate(q0, q1, kEven);

  // Odd half: orthonormal 4-point DCT-IV of the differences.
  std::array<std::int32_t, 4> o = {-x[7] * kOddSigns[0], -x[6] * kOddSigns[1],
                                   -x[5] * kOddSigns[2], -x[4] * kOddSigns[3]};
  for (const auto& g : kOdd) rotate(o[g.i], o[g.j], g.r);

  x[0] = p0;
  x[4] = -p1;
  x[2] = q0;
  x[6] = -q1;
  x[1] = o[0];
  x[3] = o[1];
  x[5] = o[2];
  x[7] = o[3];
}

void inverse_dct8(std::int32_t* x) {
  std::array<std::int32_t, 4> o = {x[1], x[3], x[5], x[7]};
  for (auto it = kOdd.rbegin(); it != kOdd.rend(); ++it) unrotate(o[it->i], o[it->j], it->r);

  std::int32_t p0 = x[0], p1 = -x[4], q0 = x[2], q1 = -x[6];
  unrotate(q0, q1, kEven);
  unrotate(p0, p1, kButterfly);
  q0 = -q0;
  q1 = -q1;
  unrotate(p1, q1, kButterfly);
  unrotate(p0, q0, kButterfly);

  x[0] = p0;
  x[1] = p1;
  x[2] = q1;
  x[3] = q0;
  x[7] = -o[0] * kOddSigns[0];
  x[6] = -o[1] * kOddSigns[1];
  x[5] = -o[2] * kOddSigns[2];
  x[4] = -o[3] * kOddSigns[3];
  for (int i = 3; i >= 0; --i) unrotate(x[i], x[7 - i], kButterfly);
}

Block8 forward_transform(const Block8& block) {
  Block8 out = block;
  for (int r = 0; r < kTransformSize; ++r) forward_dct8(out.row(r).data());
  Block8 t = out.transpose();
  for (int r = 0; r < kTransformSize; ++r) forward_dct8(t.row(r).data());
  return t.transpose();
}

Block8 inverse_transform(const Block8& coeffs) {
  Block8 t = coeffs.transpose();
  for (int r = 0; r < kTransformSize; ++r) inverse_dct8(t.row(r).data());
  Block8 out = t.transpose();
  for (int r = 0; r < kTransformSize; ++r) inverse_dct8(out.row(r).data());
  return out;
}

}  // namespace fovc
