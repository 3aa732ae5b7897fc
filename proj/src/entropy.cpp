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

#include "fovc/entropy.hpp"

#include "fovc/error.hpp"

namespace fovc {

namespace {

constexpr std::uint32_t kEndOfBlock = 0;

constexpr std::array<int, 64> make_zigzag() {
  std::array<int, 64> order{};
  int n = 0;
  for (int s = 0; s < 2 * kTransformSize - 1; ++s) {
    for (int i = 0; i < kTransformSize; ++i) {
      const int r = (s % 2 == 0) ? s - i : i;
      const int c = s - r;
      if (r < 0 || r >= kTransformSize || c < 0 || c >= kTransformSize) continue;
      order[n++] = r * kTransformSize + c;
    }
  }
  return order;
}

}  // namespace

const std::array<int, 64> kZigzag = make_zigzag();

void entropy_encode(const Block8& qcoeffs, BitWriter& out) {
  const std::int32_t* q = qcoeffs.data();
  int last = -1;
  for (int n = 0; n < 64; ++n) {
    if (q[kZigzag[n]] != 0) last = n;
  }
  for (int n = 0; n <= last; ++n) out.put_ue(signed_to_symbol(q[kZigzag[n]]) + 1);
  out.put_ue(kEndOfBlock);
}

Block8 entropy_decode(BitReader& in) {
  Block8 q = Block8::Zero();
  std::int32_t* dst = q.data();
  const std::size_t start = in.byte_offset();
  for (int n = 0;; ++n) {
    const std::uint32_t sym = in.get_ue();
    if (sym == kEndOfBlock) break;
    if (n >= 64) throw BitstreamError("block has more than 64 coefficients", start);
    dst[kZigzag[n]] = symbol_to_signed(sym - 1);
  }
  return q;
}

}  // namespace fovc
