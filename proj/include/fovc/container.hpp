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
#include <string>
#include <vector>

#include "fovc/codec.hpp"
#include "fovc/csf.hpp"

namespace fovc {

inline constexpr std::uint16_t kBitstreamVersion = 1;

/// Fixed-size stream header. On disk: "FMVC", u16 version, u16 W, u16 H,
/// u16 fps_num, u16 fps_den, u32 frame_count, f64 screen_width,
/// f64 viewing_distance, f64 reserved; all little-endian.
struct SequenceHeader {
  std::uint16_t version = kBitstreamVersion;
  std::uint16_t width = 0;
  std::uint16_t height = 0;
  std::uint16_t fps_num = 30;
  std::uint16_t fps_den = 1;
  std::uint32_t frame_count = 0;
  double screen_width = 0.02;
  double viewing_distance = 0.012;
  double reserved = 0.0;

  friend bool operator==(const SequenceHeader&, const SequenceHeader&) = default;
};

inline constexpr std::size_t kSequenceHeaderBytes = 4 + 2 * 5 + 4 + 8 * 3;

/// Per-frame record: u16 gaze_x, u16 gaze_y, u8 fmsc_code, u32 payload length, payload.
struct FrameRecord {
  Gaze gaze;
  /// k when the frame used a gaussian map with FMSC = H/k; 0 otherwise.
  std::uint8_t fmsc_code = 0;
  FrameBitstream bits;

  friend bool operator==(const FrameRecord&, const FrameRecord&) = default;
};

struct SequenceBitstream {
  SequenceHeader header;
  std::vector<FrameRecord> frames;

  std::vector<std::uint8_t> serialize() const;

  /// Throws BitstreamError (UnsupportedVersion for version != 1) on malformed input.
  static SequenceBitstream parse(std::span<const std::uint8_t> bytes);

  /// Sum of frame payload bits (container framing excluded).
  std::uint64_t payload_bits() const;

  /// payload_bits / (W * H * frame_count).
  double bits_per_pixel() const;

  friend bool operator==(const SequenceBitstream&, const SequenceBitstream&) = default;
};

/// Foveation input for one frame.
struct FrameFoveation {
  FoveationMap map;
  std::uint8_t fmsc_code = 0;
};

struct EncodedSequence {
  SequenceBitstream stream;
  std::vector<EncodedFrame> frames;

  /// Encoder-side reconstruction chain.
  VideoSequence reconstruction(FrameRate rate) const;
};

/// Codes every frame against the previous reconstruction; the first frame is
/// coded against a mid-gray reference. One map per frame.
EncodedSequence encode_sequence(const VideoSequence& seq, std::span<const FrameFoveation> maps,
                                const QuantSchedule& sched, const CodecConfig& cfg = {},
                                const DisplayGeometry<double>& geom = {});

VideoSequence decode_sequence(const SequenceBitstream& stream);
VideoSequence decode_sequence(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace fovc
