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

#include "fovc/foveation.hpp"

namespace fovc {

/// Binary channel masks m(i, j, k) for c channels split into L groups of c/L.
class MaskStack {
 public:
  MaskStack(int channels, int levels, int width, int height);

  int channels() const noexcept { return channels_; }
  int levels() const noexcept { return levels_; }
  int group_size() const noexcept { return channels_ / levels_; }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool operator()(int row, int col, int channel) const {
    return bits_[index(row, col, channel)] != 0;
  }
  void set(int row, int col, int channel, bool on) { bits_[index(row, col, channel)] = on; }

  /// Number of channels switched on at (row, col).
  int active_channels(int row, int col) const;

 private:
  std::size_t index(int row, int col, int channel) const {
    return (static_cast<std::size_t>(channel) * height_ + row) * width_ + col;
  }

  int channels_;
  int levels_;
  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

/// m(i, j, k) = 1 iff p(i, j) >= floor(k / (c / L)) / L, channels zero-based.
MaskStack expand_masks(const FoveationMap& p, int channels = 128, int levels = 16);

/// Sum of the map; a continuous proxy for coded rate.
double rate_estimate(const FoveationMap& p);

/// Pixel rectangle [x, x + width) x [y, y + height).
struct BlockRect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
};

/// Highest level found inside the block.
int level_for_block(const LevelMap& levels, const BlockRect& block);

/// level_for_block over every block_size x block_size tile, clipped at frame edges.
PlaneArray<std::uint8_t> block_levels(const LevelMap& levels, int block_size);

}  // namespace fovc
