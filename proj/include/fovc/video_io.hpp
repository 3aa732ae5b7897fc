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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fovc/plane.hpp"

namespace fovc {

struct FrameRate {
  std::uint32_t num = 30;
  std::uint32_t den = 1;

  friend bool operator==(const FrameRate&, const FrameRate&) = default;
};

/// One 4:2:0 picture: full-resolution luma and two half-resolution chroma planes.
struct Frame {
  FramePlane y;
  FramePlane cb;
  FramePlane cr;

  /// Mid-gray picture of the given luma size with matching chroma planes.
  static Frame filled(int width, int height, std::uint8_t value);

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Chroma dimension for a 4:2:0 luma dimension.
constexpr int chroma_extent(int luma_extent) noexcept { return (luma_extent + 1) / 2; }

/// An immutable, non-empty list of 4:2:0 frames sharing one geometry.
class VideoSequence {
 public:
  VideoSequence(std::vector<Frame> frames, FrameRate rate);

  int width() const noexcept { return frames_.front().y.width(); }
  int height() const noexcept { return frames_.front().y.height(); }
  std::size_t frame_count() const noexcept { return frames_.size(); }
  FrameRate frame_rate() const noexcept { return rate_; }

  const Frame& frame(std::size_t i) const { return frames_.at(i); }
  std::span<const Frame> frames() const noexcept { return frames_; }

  friend bool operator==(const VideoSequence&, const VideoSequence&) = default;

 private:
  std::vector<Frame> frames_;
  FrameRate rate_;
};

/// Parses a YUV4MPEG2 stream. Only progressive 8-bit 4:2:0 is accepted.
/// Throws ParseError, UnsupportedFormat or TruncatedStream.
VideoSequence read_y4m(std::istream& in);
VideoSequence read_y4m(std::span<const std::uint8_t> bytes);

/// Writes a YUV4MPEG2 stream and returns the number of bytes emitted.
/// Throws IoError if the sink fails.
std::size_t write_y4m(const VideoSequence& seq, std::ostream& out);

/// Stream header line (including the trailing newline) that write_y4m emits.
std::string y4m_header(const VideoSequence& seq);

VideoSequence load_y4m(const std::string& path);
void save_y4m(const VideoSequence& seq, const std::string& path);

}  // namespace fovc
