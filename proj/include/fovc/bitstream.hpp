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
#include <span>
#include <vector>

namespace fovc {

/// MSB-first bit writer.
class BitWriter {
 public:
  void put_bits(std::uint32_t value, int count);
  void put_bit(bool bit) { put_bits(bit ? 1u : 0u, 1); }

  /// Unsigned Exp-Golomb (k = 0).
  void put_ue(std::uint32_t value);

  /// Pads with zero bits up to the next byte boundary.
  void align();

  std::size_t bit_count() const noexcept { return bits_; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

/// MSB-first bit reader over a byte span. Reading past the end throws
/// BitstreamError carrying the byte offset.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint32_t get_bits(int count);
  bool get_bit() { return get_bits(1) != 0; }
  std::uint32_t get_ue();

  std::size_t bit_position() const noexcept { return pos_; }
  std::size_t byte_offset() const noexcept { return pos_ / 8; }
  std::size_t bits_left() const noexcept { return data_.size() * 8 - pos_; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

/// Zigzag signed mapping 0, +1, -1, +2, -2, ... -> 0, 1, 2, 3, 4, ...
constexpr std::uint32_t signed_to_symbol(std::int32_t v) noexcept {
  return v > 0 ? 2u * static_cast<std::uint32_t>(v) - 1u : 2u * static_cast<std::uint32_t>(-v);
}

constexpr std::int32_t symbol_to_signed(std::uint32_t s) noexcept {
  return (s & 1u) ? static_cast<std::int32_t>((s + 1) / 2) : -static_cast<std::int32_t>(s / 2);
}

/// Length in bits of the Exp-Golomb codeword for `value`.
int ue_length(std::uint32_t value) noexcept;

}  // namespace fovc
