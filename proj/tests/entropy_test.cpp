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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fovc/entropy.hpp"
#include "fovc/error.hpp"

namespace fovc {
namespace {

TEST(BitstreamTest, ExpGolombCodewords) {
  BitWriter w;
  w.put_ue(0);  // 1
  w.put_ue(1);  // 010
  w.put_ue(2);  // 011
  w.put_ue(3);  // 00100
  EXPECT_EQ(w.bit_count(), 12u);
  ASSERT_EQ(w.bytes().size(), 2u);
  EXPECT_EQ(w.bytes()[0], 0b10100110);
  EXPECT_EQ(w.bytes()[1], 0b01000000);
  EXPECT_EQ(ue_length(0), 1);
  EXPECT_EQ(ue_length(3), 5);
}

TEST(BitstreamTest, SignedMapping) {
  EXPECT_EQ(signed_to_symbol(0), 0u);
  EXPECT_EQ(signed_to_symbol(1), 1u);
  EXPECT_EQ(signed_to_symbol(-1), 2u);
  EXPECT_EQ(signed_to_symbol(2), 3u);
  EXPECT_EQ(signed_to_symbol(-2), 4u);
  for (int v = -5000; v <= 5000; ++v) EXPECT_EQ(symbol_to_signed(signed_to_symbol(v)), v);
}

TEST(BitstreamTest, ReaderReportsOffsetOnOverrun) {
  const std::vector<std::uint8_t> data = {0x00, 0x00};
  BitReader r(data);
  try {
    r.get_ue();
    FAIL() << "expected BitstreamError";
  } catch (const BitstreamError& e) {
    EXPECT_EQ(e.byte_offset(), 2u);
  }
}

TEST(EntropyTest, ZigzagIsAPermutationStartingAtDc) {
  std::set<int> s(kZigzag.begin(), kZigzag.end());
  EXPECT_EQ(s.size(), 64u);
  EXPECT_EQ(kZigzag[0], 0);
  EXPECT_EQ(kZigzag[1], 1);
  EXPECT_EQ(kZigzag[2], 8);
  EXPECT_EQ(kZigzag[3], 16);
  EXPECT_EQ(kZigzag[63], 63);
}

TEST(EntropyTest, AllZeroBlockIsSingleEobBit) {
  BitWriter w;
  entropy_encode(Block8::Zero(), w);
  EXPECT_EQ(w.bit_count(), 1u);
  BitReader r(w.bytes());
  EXPECT_EQ(entropy_decode(r), Block8::Zero());
}

TEST(EntropyTest, PlusAndMinusOneCodewords) {
  Block8 b = Block8::Zero();
  b(0, 0) = 1;
  BitWriter w;
  entropy_encode(b, w);
  // ue(1 + 1) = 011, then EOB = 1
  EXPECT_EQ(w.bit_count(), 4u);
  EXPECT_EQ(w.bytes()[0] >> 4, 0b0111);

  b(0, 0) = -1;
  BitWriter w2;
  entropy_encode(b, w2);
  // ue(2 + 1) = 00100, then EOB
  EXPECT_EQ(w2.bit_count(), 6u);
  EXPECT_EQ(w2.bytes()[0] >> 2, 0b001001);
}

TEST(EntropyTest, RandomBlocksRoundTrip) {
  std::mt19937 rng(77);
  BitWriter w;
  std::vector<Block8> blocks;
  for (int i = 0; i < 100000; ++i) {
    Block8 b = Block8::Zero();
    const int nonzero = int(rng() % 65);
    for (int k = 0; k < nonzero; ++k) {
      const int mag = (rng() % 8 == 0) ? 3000 : 12;
      b.data()[rng() % 64] = int(rng() % unsigned(2 * mag + 1)) - mag;
    }
    entropy_encode(b, w);
    blocks.push_back(b);
  }
  w.align();
  BitReader r(w.bytes());
  for (std::size_t i = 0; i < blocks.size(); ++i) ASSERT_EQ(entropy_decode(r), blocks[i]) << i;
  EXPECT_LT(r.bits_left(), 8u);
}

TEST(EntropyTest, MissingEobIsBitstreamError) {
  BitWriter w;
  for (int i = 0; i < 65; ++i) w.put_ue(2);  // 65 coefficients, no EOB
  BitReader r(w.bytes());
  EXPECT_THROW(entropy_decode(r), BitstreamError);
}

TEST(EntropyTest, TruncatedBlockIsBitstreamError) {
  Block8 b = Block8::Constant(100);
  BitWriter w;
  entropy_encode(b, w);
  std::vector<std::uint8_t> cut(w.bytes().begin(), w.bytes().begin() + 10);
  BitReader r(cut);
  EXPECT_THROW(entropy_decode(r), BitstreamError);
}

}  // namespace
}  // namespace fovc
