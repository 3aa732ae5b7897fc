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

#include "fovc/displacement.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

namespace fovc {

int catalogue_index(Displacement d) {
  for (std::size_t i = 0; i < kDisplacementCatalogue.size(); ++i) {
    if (kDisplacementCatalogue[i] == d) return static_cast<int>(i);
  }
  throw ContractViolation("displacement (" + std::to_string(static_cast<int>(d.axis)) + ", " +
                          std::to_string(d.offset) + ") is not in the catalogue");
}

int tie_break_rank(Displacement d) {
  if (d.axis == Axis::None) return 0;
  const int axis_rank = d.axis == Axis::Horizontal ? 0 : 1;
  const int mag_rank = (std::abs(d.offset) - 3) / 2;  // 3,5,7 -> 0,1,2
  const int sign_rank = d.offset > 0 ? 0 : 1;
  return 1 + axis_rank * 6 + mag_rank * 2 + sign_rank;
}

ResidualPlane displaced_difference(const FramePlane& cur, const FramePlane& prev_recon,
                                   Displacement d) {
  FOVC_REQUIRE(cur.same_shape(prev_recon), "displaced_difference: frame dimensions differ");
  ResidualPlane out(cur.width(), cur.height());
  for (int r = 0; r < cur.height(); ++r) {
    for (int c = 0; c < cur.width(); ++c) {
      out(r, c) = static_cast<std::int16_t>(int{cur(r, c)} - displaced_sample(prev_recon, r, c, d));
    }
  }
  return out;
}

DisplacedResidualSet::DisplacedResidualSet(std::array<ResidualPlane, kCatalogueSize> planes)
    : planes_(std::move(planes)) {
  for (const auto& p : planes_) {
    FOVC_REQUIRE(p.same_shape(planes_[0]), "residual planes must share dimensions");
  }
}

namespace {

template <std::size_t... I>
std::array<ResidualPlane, kCatalogueSize> all_residuals(const FramePlane& cur,
                                                        const FramePlane& prev,
                                                        std::index_sequence<I...>) {
  return {displaced_difference(cur, prev, kDisplacementCatalogue[I])...};
}

}  // namespace

DisplacedResidualSet residual_set(const FramePlane& cur, const FramePlane& prev_recon) {
  FOVC_REQUIRE(cur.same_shape(prev_recon), "residual_set: frame dimensions differ");
  return DisplacedResidualSet(
      all_residuals(cur, prev_recon, std::make_index_sequence<kCatalogueSize>{}));
}

DisplacementField::DisplacementField(int frame_width, int frame_height, int block_size,
                                     Displacement fill)
    : frame_width_(frame_width), frame_height_(frame_height), block_size_(block_size) {
  FOVC_REQUIRE(block_size >= 1, "block size must be at least 1");
  FOVC_REQUIRE(frame_width > 0 && frame_height > 0, "frame dimensions must be positive");
  index_.setConstant(ceil_div(frame_height, block_size), ceil_div(frame_width, block_size),
                     static_cast<std::uint8_t>(catalogue_index(fill)));
}

void DisplacementField::set(int block_row, int block_col, Displacement d) {
  index_(block_row, block_col) = static_cast<std::uint8_t>(catalogue_index(d));
}

void DisplacementField::set_index(int block_row, int block_col, int catalogue_idx) {
  FOVC_REQUIRE(catalogue_idx >= 0 && catalogue_idx < static_cast<int>(kCatalogueSize),
               "displacement index out of range");
  index_(block_row, block_col) = static_cast<std::uint8_t>(catalogue_idx);
}

Displacement DisplacementField::for_pixel(int row, int col, int subsampling) const {
  const int br = std::min(row * subsampling / block_size_, block_rows() - 1);
  const int bc = std::min(col * subsampling / block_size_, block_cols() - 1);
  const Displacement d = at(br, bc);
  return subsampling == 1 ? d : Displacement{d.axis, d.offset / subsampling};
}

std::int64_t block_sse(const ResidualPlane& plane, int block_row, int block_col,
                       int block_size) {
  const int r0 = block_row * block_size;
  const int c0 = block_col * block_size;
  const int rows = std::min(block_size, plane.height() - r0);
  const int cols = std::min(block_size, plane.width() - c0);
  const auto blk = plane.array().block(r0, c0, rows, cols).template cast<std::int64_t>();
  return blk.square().sum();
}

DisplacementField select_displacement_per_block(const DisplacedResidualSet& set,
                                                int block_size) {
  DisplacementField field(set.width(), set.height(), block_size);
  for (int br = 0; br < field.block_rows(); ++br) {
    for (int bc = 0; bc < field.block_cols(); ++bc) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      int best_rank = std::numeric_limits<int>::max();
      Displacement choice{};
      for (std::size_t i = 0; i < kCatalogueSize; ++i) {
        const Displacement d = kDisplacementCatalogue[i];
        const std::int64_t sse = block_sse(set.at_index(i), br, bc, block_size);
        const int rank = tie_break_rank(d);
        if (sse < best || (sse == best && rank < best_rank)) {
          best = sse;
          best_rank = rank;
          choice = d;
        }
      }
      field.set(br, bc, choice);
    }
  }
  return field;
}

FramePlane predict_frame(const FramePlane& prev_recon, const DisplacementField& field,
                         int subsampling) {
  FOVC_REQUIRE(subsampling == 1 || subsampling == 2, "subsampling must be 1 or 2");
  FOVC_REQUIRE(ceil_div(field.frame_width(), subsampling) == prev_recon.width() &&
                   ceil_div(field.frame_height(), subsampling) == prev_recon.height(),
               "displacement field does not cover the plane");
  FramePlane out(prev_recon.width(), prev_recon.height());
  for (int r = 0; r < out.height(); ++r) {
    for (int c = 0; c < out.width(); ++c) {
      out(r, c) = displaced_sample(prev_recon, r, c, field.for_pixel(r, c, subsampling));
    }
  }
  return out;
}

FramePlane reconstruct_frame(const FramePlane& prev_recon, const DisplacementField& field,
                             const ResidualPlane& decoded_residual, int subsampling) {
  FOVC_REQUIRE(prev_recon.same_shape(decoded_residual),
               "reconstruct_frame: residual and reference dimensions differ");
  FramePlane out = predict_frame(prev_recon, field, subsampling);
  out.array() = (out.array().cast<int>() + decoded_residual.array().cast<int>())
                    .max(0)
                    .min(255)
                    .cast<std::uint8_t>();
  return out;
}

}  // namespace fovc
