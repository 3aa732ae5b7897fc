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
#include <span>
#include <vector>

#include "fovc/displacement.hpp"
#include "fovc/foveation.hpp"
#include "fovc/quant.hpp"
#include "fovc/video_io.hpp"

namespace fovc {

/// Sample value of the synthetic reference used for the first frame.
inline constexpr std::uint8_t kFirstFrameReference = 128;

struct CodecConfig {
  /// When false every block is coded against the undisplaced reference.
  bool select_displacement = true;
};

/// Byte-aligned coded frame. Layout:
///   ue(q_base), u4(n - 1),
///   per luma 8x8 block in raster order: u4 displacement index, u4 level, coefficients,
///   per Cb 8x8 block, then per Cr 8x8 block: coefficients,
///   zero padding to the byte boundary.
struct FrameBitstream {
  std::vector<std::uint8_t> payload;

  std::size_t byte_length() const noexcept { return payload.size(); }
  std::uint64_t bit_length() const noexcept { return std::uint64_t{payload.size()} * 8; }

  friend bool operator==(const FrameBitstream&, const FrameBitstream&) = default;
};

/// Everything the encoder knows about one coded frame.
struct EncodedFrame {
  FrameBitstream bits;
  Frame recon;
  DisplacementField field;
  /// Coding level of each luma block.
  PlaneArray<std::uint8_t> block_levels;
  /// Payload bits attributed to each luma block. Chroma bits are split over the
  /// luma blocks a chroma block covers; alignment padding goes to the last block.
  /// Sums to bits.bit_length() exactly.
  PlaneArray<std::int64_t> block_bits;
};

/// Codes `cur` against `prev_recon`. The returned reconstruction is bit-identical
/// to decode_frame(result.bits, prev_recon).
EncodedFrame encode_frame(const Frame& cur, const Frame& prev_recon, const LevelMap& level_map,
                          const QuantSchedule& sched, const CodecConfig& cfg = {});

/// Throws BitstreamError on malformed or truncated payloads and ContractViolation
/// on an empty payload.
Frame decode_frame(const FrameBitstream& bits, const Frame& prev_recon);

}  // namespace fovc
