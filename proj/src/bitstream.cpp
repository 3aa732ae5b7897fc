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

#include "fovc/bitstream.hpp"

#include <bit>

#include "fovc/error.hpp"

namespace fovc {

void BitWriter::put_bits(std::uint32_t value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    if (bits_ % 8 == 0) bytes_.push_back(0);
    if ((value >> i) & 1u) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
    ++bits_;
  }
}

void BitWriter::put_ue(std::uint32_t value) {
  const std::uint64_t v = std::uint64_t{value} + 1;
  const int len = std::bit_width(v);
  put_bits(0, len - 1);
  for (int i = len - 1; i >= 0; --i) put_bit((v >> i) & 1u);
}

void BitWriter::align() {
  if (bits_ % 8 != 0) bits_ += 8 - bits_ % 8;
}

int ue_length(std::uint32_t value) noexcept {
  return 2 * std::bit_width(std::uint64_t{value} + 1) - 1;
}

std::uint32_t BitReader::get_bits(int count) {
  if (static_cast<std::size_t>(count) > bits_left()) {
    throw BitstreamError("unexpected end of payload", data_.size());
  }
  std::uint32_t v = 0;
  for (int i = 0; i < count; ++i, ++pos_) {
    v = (v << 1) | ((data_[pos_ / 8] >> (7 - pos_ % 8)) & 1u);
  }
  return v;
}

std::uint32_t BitReader::get_ue() {
  const std::size_t start = byte_offset();
  int zeros = 0;
  while (!get_bit()) {
    if (++zeros > 31) throw BitstreamError("Exp-Golomb prefix too long", start);
  }
  const std::uint64_t v = (std::uint64_t{1} << zeros) | get_bits(zeros);
  return static_cast<std::uint32_t>(v - 1);
}

}  // namespace fovc
