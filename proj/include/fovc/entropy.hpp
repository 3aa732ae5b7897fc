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

#include <array>

#include "fovc/bitstream.hpp"
#include "fovc/transform.hpp"

namespace fovc {

/// Raster position of the n-th coefficient in zigzag scan order.
extern const std::array<int, 64> kZigzag;

/// Codes one quantized block: for each zigzag position up to the last nonzero
/// coefficient, ue(signed_to_symbol(v) + 1); then ue(0) as end-of-block.
/// An all-zero block is the single bit "1".
void entropy_encode(const Block8& qcoeffs, BitWriter& out);

/// Inverse of entropy_encode. Throws BitstreamError on malformed input.
Block8 entropy_decode(BitReader& in);

}  // namespace fovc
