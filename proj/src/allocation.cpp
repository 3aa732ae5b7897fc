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

#include "fovc/allocation.hpp"

#include <algorithm>

namespace fovc {

MaskStack::MaskStack(int channels, int levels, int width, int height)
    : channels_(channels), levels_(levels), width_(width), height_(height) {
  FOVC_REQUIRE(levels > 0 && channels > 0, "mask stack needs positive channel and level counts");
  FOVC_REQUIRE(channels % levels == 0, "channel count must be divisible by the level count");
  FOVC_REQUIRE(width > 0 && height > 0, "mask stack dimensions must be positive");
  bits_.assign(static_cast<std::size_t>(channels) * width * height, 0);
}

int MaskStack::active_channels(int row, int col) const {
  int n = 0;
  for (int k = 0; k < channels_; ++k) n += (*this)(row, col, k) ? 1 : 0;
  return n;
}

MaskStack expand_masks(const FoveationMap& p, int channels, int levels) {
  MaskStack masks(channels, levels, p.width(), p.height());
  const int group = channels / levels;
  const auto& v = p.values.array();
  FOVC_REQUIRE((v >= 0.0).all() && (v <= 1.0).all(), "expand_masks: map values must be in [0, 1]");
  for (int k = 0; k < channels; ++k) {
    const double threshold = double(k / group) / double(levels);
    for (int r = 0; r < p.height(); ++r) {
      for (int c = 0; c < p.width(); ++c) masks.set(r, c, k, v(r, c) >= threshold);
    }
  }
  return masks;
}

double rate_estimate(const FoveationMap& p) { return p.values.array().sum(); }

int level_for_block(const LevelMap& levels, const BlockRect& b) {
  FOVC_REQUIRE(b.width > 0 && b.height > 0 && b.x >= 0 && b.y >= 0 &&
                   b.x + b.width <= levels.width() && b.y + b.height <= levels.height(),
               "level_for_block: block outside the level map");
  return levels.levels.array().block(b.y, b.x, b.height, b.width).maxCoeff();
}

PlaneArray<std::uint8_t> block_levels(const LevelMap& levels, int block_size) {
  FOVC_REQUIRE(block_size >= 1, "block size must be at least 1");
  const int rows = ceil_div(levels.height(), block_size);
  const int cols = ceil_div(levels.width(), block_size);
  PlaneArray<std::uint8_t> out(rows, cols);
  for (int br = 0; br < rows; ++br) {
    for (int bc = 0; bc < cols; ++bc) {
      const BlockRect rect{bc * block_size, br * block_size,
                           std::min(block_size, levels.width() - bc * block_size),
                           std::min(block_size, levels.height() - br * block_size)};
      out(br, bc) = static_cast<std::uint8_t>(level_for_block(levels, rect));
    }
  }
  return out;
}

}  // namespace fovc
