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

#include <array>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fovc/transform.hpp"
#include "oracles.hpp"

namespace fovc {
namespace {

Block8 random_block(std::mt19937& rng, int lo = -255, int hi = 255) {
  Block8 b;
  for (int i = 0; i < 64; ++i) b.data()[i] = lo + int(rng() % unsigned(hi - lo + 1));
  return b;
}

TEST(TransformTest, ZeroBlock) {
  EXPECT_EQ(forward_transform(Block8::Zero()), Block8::Zero());
  EXPECT_EQ(inverse_transform(Block8::Zero()), Block8::Zero());
}

TEST(TransformTest, ConstantBlockHasOnlyDc) {
  for (int v = -255; v <= 255; ++v) {
    const Block8 c = forward_transform(Block8::Constant(v));
    Block8 ac = c;
    ac(0, 0) = 0;
    EXPECT_EQ(ac, Block8::Zero()) << v;
    EXPECT_NEAR(c(0, 0), 8 * v, 8) << v;  // rounding from both passes
  }
}

TEST(TransformTest, ExactRoundTripOnRandomBlocks) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const Block8 b = random_block(rng);
    ASSERT_EQ(inverse_transform(forward_transform(b)), b) << "block " << i;
  }
}

TEST(TransformTest, ExactRoundTripOnExtremes) {
  for (int pattern = 0; pattern < 64; ++pattern) {
    Block8 b;
    for (int i = 0; i < 64; ++i) b.data()[i] = ((i * 7 + pattern) % 3 == 0) ? 255 : -255;
    EXPECT_EQ(inverse_transform(forward_transform(b)), b);
  }
}

// The integer transform tracks the orthonormal DCT-II to within a few units.
TEST(TransformTest, ApproximatesFloatingPointDct) {
  std::mt19937 rng(11);
  double worst = 0;
  double mean_abs = 0;
  constexpr int kTrials = 500;
  for (int t = 0; t < kTrials; ++t) {
    const Block8 b = random_block(rng);
    std::array<double, 64> x{};
    for (int i = 0; i < 64; ++i) x[i] = b.data()[i];
    const auto ref = testing::dct8x8_reference(x);
    const Block8 c = forward_transform(b);
    for (int i = 0; i < 64; ++i) {
      const double err = std::abs(c.data()[i] - ref[i]);
      worst = std::max(worst, err);
      mean_abs += err;
    }
  }
  mean_abs /= 64.0 * kTrials;
  EXPECT_LT(worst, 8.0);
  EXPECT_LT(mean_abs, 1.5);
}

TEST(TransformTest, OneDimensionalRoundTrip) {
  std::mt19937 rng(3);
  for (int t = 0; t < 5000; ++t) {
    std::array<std::int32_t, 8> x{};
    for (auto& v : x) v = int(rng() % 4097) - 2048;
    auto y = x;
    forward_dct8(y.data());
    inverse_dct8(y.data());
    ASSERT_EQ(y, x);
  }
}

}  // namespace
}  // namespace fovc
