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

#include "fovc/codec.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "fovc/allocation.hpp"
#include "fovc/entropy.hpp"
#include "fovc/error.hpp"

namespace fovc {

namespace {

constexpr int kBlock = kTransformSize;

struct BlockSpan {
  int r0;
  int c0;
  int rows;
  int cols;
};

BlockSpan block_span(const FramePlane& plane, int br, int bc) {
  const int r0 = br * kBlock;
  const int c0 = bc * kBlock;
  return {r0, c0, std::min(kBlock, plane.height() - r0), std::min(kBlock, plane.width() - c0)};
}

// Residual of one block; samples outside the plane are zero.
Block8 load_residual(const FramePlane& cur, const FramePlane& pred, const BlockSpan& s) {
  Block8 b = Block8::Zero();
  b.topLeftCorner(s.rows, s.cols) =
      cur.array().block(s.r0, s.c0, s.rows, s.cols).cast<std::int32_t>().matrix() -
      pred.array().block(s.r0, s.c0, s.rows, s.cols).cast<std::int32_t>().matrix();
  return b;
}

void store_residual(ResidualPlane& out, const Block8& decoded, const BlockSpan& s) {
  out.array().block(s.r0, s.c0, s.rows, s.cols) =
      decoded.topLeftCorner(s.rows, s.cols).array().max(-255).min(255).cast<std::int16_t>();
}

// Level of the chroma block covering luma blocks (2 cbr .. 2 cbr + 1, 2 cbc .. 2 cbc + 1).
int chroma_block_level(const PlaneArray<std::uint8_t>& luma_levels, int cbr, int cbc) {
  const int r0 = 2 * cbr;
  const int c0 = 2 * cbc;
  const int rows = std::min<int>(2, static_cast<int>(luma_levels.rows()) - r0);
  const int cols = std::min<int>(2, static_cast<int>(luma_levels.cols()) - c0);
  return luma_levels.block(r0, c0, rows, cols).maxCoeff();
}

// Splits `bits` over the luma blocks a chroma block covers, remainder to the first ones.
void attribute_chroma_bits(PlaneArray<std::int64_t>& block_bits, int cbr, int cbc,
                           std::int64_t bits) {
  const int r0 = 2 * cbr;
  const int c0 = 2 * cbc;
  const int rows = std::min<int>(2, static_cast<int>(block_bits.rows()) - r0);
  const int cols = std::min<int>(2, static_cast<int>(block_bits.cols()) - c0);
  const std::int64_t k = rows * cols;
  std::int64_t i = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c, ++i) {
      block_bits(r0 + r, c0 + c) += bits / k + (i < bits % k ? 1 : 0);
    }
  }
}

Block8 code_block(const Block8& residual, int level, const QuantSchedule& sched, BitWriter& w) {
  const Block8 q = quantize_coeffs(forward_transform(residual), level, sched);
  entropy_encode(q, w);
  return inverse_transform(dequantize_coeffs(q, level, sched));
}

Block8 decode_block(BitReader& r, int level, const QuantSchedule& sched) {
  return inverse_transform(dequantize_coeffs(entropy_decode(r), level, sched));
}

}  // namespace

EncodedFrame encode_frame(const Frame& cur, const Frame& prev_recon, const LevelMap& level_map,
                          const QuantSchedule& sched, const CodecConfig& cfg) {
  const int w = cur.y.width();
  const int h = cur.y.height();
  FOVC_REQUIRE(cur.y.same_shape(prev_recon.y) && cur.cb.same_shape(prev_recon.cb) &&
                   cur.cr.same_shape(prev_recon.cr),
               "encode_frame: current and reference frames differ in size");
  FOVC_REQUIRE(level_map.width() == w && level_map.height() == h,
               "encode_frame: level map does not match the frame");
  FOVC_REQUIRE(level_map.n == sched.levels(),
               "encode_frame: level map and quantizer schedule disagree on level count");

  DisplacementField field = cfg.select_displacement
                                ? select_displacement_per_block(residual_set(cur.y, prev_recon.y), kBlock)
                                : DisplacementField(w, h, kBlock);
  PlaneArray<std::uint8_t> levels = block_levels(level_map, kBlock);
  PlaneArray<std::int64_t> block_bits = PlaneArray<std::int64_t>::Zero(levels.rows(), levels.cols());

  BitWriter out;
  out.put_ue(static_cast<std::uint32_t>(sched.q_base()));
  out.put_bits(static_cast<std::uint32_t>(sched.levels() - 1), 4);
  block_bits(0, 0) += static_cast<std::int64_t>(out.bit_count());

  const FramePlane pred_y = predict_frame(prev_recon.y, field, 1);
  ResidualPlane res_y(w, h);
  for (int br = 0; br < field.block_rows(); ++br) {
    for (int bc = 0; bc < field.block_cols(); ++bc) {
      const std::size_t start = out.bit_count();
      const int level = levels(br, bc);
      out.put_bits(static_cast<std::uint32_t>(field.index_at(br, bc)), 4);
      out.put_bits(static_cast<std::uint32_t>(level), 4);
      const BlockSpan s = block_span(cur.y, br, bc);
      store_residual(res_y, code_block(load_residual(cur.y, pred_y, s), level, sched, out), s);
      block_bits(br, bc) += static_cast<std::int64_t>(out.bit_count() - start);
    }
  }

  Frame recon{reconstruct_frame(prev_recon.y, field, res_y, 1), cur.cb, cur.cr};
  for (auto [cur_p, prev_p, rec_p] : {std::tuple{&cur.cb, &prev_recon.cb, &recon.cb},
                                      std::tuple{&cur.cr, &prev_recon.cr, &recon.cr}}) {
    const FramePlane pred = predict_frame(*prev_p, field, 2);
    ResidualPlane res(pred.width(), pred.height());
    for (int br = 0; br < ceil_div(pred.height(), kBlock); ++br) {
      for (int bc = 0; bc < ceil_div(pred.width(), kBlock); ++bc) {
        const std::size_t start = out.bit_count();
        const BlockSpan s = block_span(pred, br, bc);
        const int level = chroma_block_level(levels, br, bc);
        store_residual(res, code_block(load_residual(*cur_p, pred, s), level, sched, out), s);
        attribute_chroma_bits(block_bits, br, bc, static_cast<std::int64_t>(out.bit_count() - start));
      }
    }
    *rec_p = reconstruct_frame(*prev_p, field, res, 2);
  }

  const std::size_t before_pad = out.bit_count();
  out.align();
  block_bits(block_bits.rows() - 1, block_bits.cols() - 1) +=
      static_cast<std::int64_t>(out.bit_count() - before_pad);

  return EncodedFrame{FrameBitstream{std::move(out).take()}, std::move(recon), std::move(field),
                      std::move(levels), std::move(block_bits)};
}

Frame decode_frame(const FrameBitstream& bits, const Frame& prev_recon) {
  FOVC_REQUIRE(!bits.payload.empty(), "decode_frame: empty frame payload");
  const int w = prev_recon.y.width();
  const int h = prev_recon.y.height();
  BitReader in(bits.payload);

  const std::uint32_t q_base = in.get_ue();
  const int n = static_cast<int>(in.get_bits(4)) + 1;
  if (q_base < 1 || q_base > 4096 || n < 2) {
    throw BitstreamError("invalid quantizer parameters", 0);
  }
  const QuantSchedule sched(static_cast<int>(q_base), n);

  DisplacementField field(w, h, kBlock);
  PlaneArray<std::uint8_t> levels(field.block_rows(), field.block_cols());
  ResidualPlane res_y(w, h);
  for (int br = 0; br < field.block_rows(); ++br) {
    for (int bc = 0; bc < field.block_cols(); ++bc) {
      const std::size_t at = in.byte_offset();
      const auto idx = in.get_bits(4);
      const auto level = static_cast<int>(in.get_bits(4));
      if (idx >= kCatalogueSize) throw BitstreamError("displacement index out of range", at);
      if (level >= n) throw BitstreamError("block level out of range", at);
      field.set_index(br, bc, static_cast<int>(idx));
      levels(br, bc) = static_cast<std::uint8_t>(level);
      store_residual(res_y, decode_block(in, level, sched), block_span(prev_recon.y, br, bc));
    }
  }

  Frame recon{reconstruct_frame(prev_recon.y, field, res_y, 1), prev_recon.cb, prev_recon.cr};
  for (auto [prev_p, rec_p] : {std::pair{&prev_recon.cb, &recon.cb},
                               std::pair{&prev_recon.cr, &recon.cr}}) {
    ResidualPlane res(prev_p->width(), prev_p->height());
    for (int br = 0; br < ceil_div(prev_p->height(), kBlock); ++br) {
      for (int bc = 0; bc < ceil_div(prev_p->width(), kBlock); ++bc) {
        const int level = chroma_block_level(levels, br, bc);
        store_residual(res, decode_block(in, level, sched), block_span(*prev_p, br, bc));
      }
    }
    *rec_p = reconstruct_frame(*prev_p, field, res, 2);
  }

  if (in.bits_left() >= 8) {
    throw BitstreamError("trailing data after last block", in.byte_offset() + 1);
  }
  while (in.bits_left() > 0) {
    if (in.get_bit()) throw BitstreamError("nonzero alignment padding", in.byte_offset());
  }
  return recon;
}

}  // namespace fovc
