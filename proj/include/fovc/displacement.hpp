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
#include <cstdint>

#include "fovc/plane.hpp"

namespace fovc {

enum class Axis : std::uint8_t { None, Horizontal, Vertical };

/// A whole-pixel shift of the previous reconstruction along one axis.
struct Displacement {
  Axis axis = Axis::None;
  int offset = 0;

  friend constexpr bool operator==(const Displacement&, const Displacement&) = default;
};

inline constexpr std::size_t kCatalogueSize = 13;

/// The fixed candidate set: zero, then each axis with s ascending over {-7,-5,-3,3,5,7}.
/// Position in this array is the 4-bit index written to the bitstream.
inline constexpr std::array<Displacement, kCatalogueSize> kDisplacementCatalogue = {{
    {Axis::None, 0},
    {Axis::Horizontal, -7}, {Axis::Horizontal, -5}, {Axis::Horizontal, -3},
    {Axis::Horizontal, 3},  {Axis::Horizontal, 5},  {Axis::Horizontal, 7},
    {Axis::Vertical, -7},   {Axis::Vertical, -5},   {Axis::Vertical, -3},
    {Axis::Vertical, 3},    {Axis::Vertical, 5},    {Axis::Vertical, 7},
}};

/// Index of d in kDisplacementCatalogue; throws ContractViolation if absent.
int catalogue_index(Displacement d);

/// Priority used to break equal-energy ties: zero first, horizontal before
/// vertical, smaller |s| first, positive before negative. Lower wins.
int tie_break_rank(Displacement d);

/// Displacement used on half-resolution chroma: s halved, truncated toward zero.
constexpr Displacement chroma_displacement(Displacement d) noexcept {
  return {d.axis, d.offset / 2};
}

/// Source sample of prev for output (row, col) under d, clamp-to-edge.
inline std::uint8_t displaced_sample(const FramePlane& prev, int row, int col, Displacement d) {
  switch (d.axis) {
    case Axis::Horizontal: return prev.clamped(row, col - d.offset);
    case Axis::Vertical: return prev.clamped(row - d.offset, col);
    case Axis::None: break;
  }
  return prev(row, col);
}

/// cur - prev shifted by d (horizontal reads prev(i, j - s), vertical prev(i - s, j)).
ResidualPlane displaced_difference(const FramePlane& cur, const FramePlane& prev_recon,
                                   Displacement d);

/// All 13 displaced residuals of one frame pair, stored in catalogue order.
class DisplacedResidualSet {
 public:
  explicit DisplacedResidualSet(std::array<ResidualPlane, kCatalogueSize> planes);

  const ResidualPlane& operator[](Displacement d) const { return planes_[catalogue_index(d)]; }
  const ResidualPlane& at_index(std::size_t i) const { return planes_.at(i); }
  int width() const noexcept { return planes_[0].width(); }
  int height() const noexcept { return planes_[0].height(); }

 private:
  std::array<ResidualPlane, kCatalogueSize> planes_;
};

DisplacedResidualSet residual_set(const FramePlane& cur, const FramePlane& prev_recon);

/// One catalogue displacement per block_size x block_size block.
class DisplacementField {
 public:
  DisplacementField(int frame_width, int frame_height, int block_size,
                    Displacement fill = {});

  int block_size() const noexcept { return block_size_; }
  int frame_width() const noexcept { return frame_width_; }
  int frame_height() const noexcept { return frame_height_; }
  int block_rows() const noexcept { return static_cast<int>(index_.rows()); }
  int block_cols() const noexcept { return static_cast<int>(index_.cols()); }

  Displacement at(int block_row, int block_col) const {
    return kDisplacementCatalogue[index_(block_row, block_col)];
  }
  int index_at(int block_row, int block_col) const { return index_(block_row, block_col); }
  void set(int block_row, int block_col, Displacement d);
  void set_index(int block_row, int block_col, int catalogue_idx);

  /// Displacement governing pixel (row, col) of a plane subsampled by `subsampling`
  /// relative to the field's frame, with the offset scaled to that plane.
  Displacement for_pixel(int row, int col, int subsampling = 1) const;

  friend bool operator==(const DisplacementField& a, const DisplacementField& b) {
    return a.block_size_ == b.block_size_ && a.frame_width_ == b.frame_width_ &&
           a.frame_height_ == b.frame_height_ && (a.index_ == b.index_).all();
  }

 private:
  int frame_width_;
  int frame_height_;
  int block_size_;
  PlaneArray<std::uint8_t> index_;
};

/// Per-block argmin of residual energy (SSE) over the catalogue.
DisplacementField select_displacement_per_block(const DisplacedResidualSet& set, int block_size);

/// Sum of squared residuals of `plane` inside block (block_row, block_col).
std::int64_t block_sse(const ResidualPlane& plane, int block_row, int block_col, int block_size);

/// prev_recon warped by the field. Chroma planes pass subsampling = 2.
FramePlane predict_frame(const FramePlane& prev_recon, const DisplacementField& field,
                         int subsampling = 1);

/// clamp(prediction + residual, 0, 255) with the prediction taken from predict_frame.
FramePlane reconstruct_frame(const FramePlane& prev_recon, const DisplacementField& field,
                             const ResidualPlane& decoded_residual, int subsampling = 1);

}  // namespace fovc
