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

#include "fovc/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <type_traits>

#include "fovc/error.hpp"

namespace fovc {

namespace {

constexpr char kMagic[4] = {'F', 'M', 'V', 'C'};

class ByteSink {
 public:
  template <typename T>
  void put(T v) {
    using U = std::make_unsigned_t<T>;
    const U u = static_cast<U>(v);
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes_.push_back(static_cast<std::uint8_t>(u >> (8 * i)));
  }
  void put_f64(double v) { put(std::bit_cast<std::uint64_t>(v)); }
  void put_bytes(std::span<const std::uint8_t> b) { bytes_.insert(bytes_.end(), b.begin(), b.end()); }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteSource {
 public:
  explicit ByteSource(std::span<const std::uint8_t> b) : bytes_(b) {}

  template <typename T>
  T get(const char* what) {
    require(sizeof(T), what);
    std::make_unsigned_t<T> u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      u |= static_cast<std::make_unsigned_t<T>>(std::make_unsigned_t<T>{bytes_[pos_ + i]} << (8 * i));
    }
    pos_ += sizeof(T);
    return static_cast<T>(u);
  }
  double get_f64(const char* what) { return std::bit_cast<double>(get<std::uint64_t>(what)); }
  std::span<const std::uint8_t> get_bytes(std::size_t n, const char* what) {
    require(n, what);
    auto s = bytes_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  std::size_t offset() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  void require(std::size_t n, const char* what) {
    if (remaining() < n) throw BitstreamError(std::string("truncated ") + what, pos_);
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> SequenceBitstream::serialize() const {
  FOVC_REQUIRE(header.frame_count == frames.size(), "frame count does not match frame records");
  ByteSink out;
  for (char c : kMagic) out.put(static_cast<std::uint8_t>(c));
  out.put(header.version);
  out.put(header.width);
  out.put(header.height);
  out.put(header.fps_num);
  out.put(header.fps_den);
  out.put(header.frame_count);
  out.put_f64(header.screen_width);
  out.put_f64(header.viewing_distance);
  out.put_f64(header.reserved);
  for (const auto& f : frames) {
    FOVC_REQUIRE(f.bits.payload.size() <= std::numeric_limits<std::uint32_t>::max(),
                 "frame payload too large");
    out.put(static_cast<std::uint16_t>(f.gaze.x));
    out.put(static_cast<std::uint16_t>(f.gaze.y));
    out.put(f.fmsc_code);
    out.put(static_cast<std::uint32_t>(f.bits.payload.size()));
    out.put_bytes(f.bits.payload);
  }
  return std::move(out).take();
}

SequenceBitstream SequenceBitstream::parse(std::span<const std::uint8_t> bytes) {
  ByteSource in(bytes);
  const auto magic = in.get_bytes(4, "magic");
  for (std::size_t i = 0; i < 4; ++i) {
    if (magic[i] != static_cast<std::uint8_t>(kMagic[i])) throw BitstreamError("bad magic, expected FMVC", i);
  }
  SequenceBitstream s;
  const std::size_t version_at = in.offset();
  s.header.version = in.get<std::uint16_t>("version");
  if (s.header.version != kBitstreamVersion) throw UnsupportedVersion(s.header.version, version_at);
  s.header.width = in.get<std::uint16_t>("width");
  s.header.height = in.get<std::uint16_t>("height");
  s.header.fps_num = in.get<std::uint16_t>("fps numerator");
  s.header.fps_den = in.get<std::uint16_t>("fps denominator");
  const std::size_t count_at = in.offset();
  s.header.frame_count = in.get<std::uint32_t>("frame count");
  s.header.screen_width = in.get_f64("geometry");
  s.header.viewing_distance = in.get_f64("geometry");
  s.header.reserved = in.get_f64("geometry");
  if (s.header.width == 0 || s.header.height == 0) throw BitstreamError("zero frame dimension", 6);
  if (s.header.fps_num == 0 || s.header.fps_den == 0) throw BitstreamError("zero frame rate", 10);
  if (s.header.frame_count == 0) throw BitstreamError("stream declares no frames", count_at);

  for (std::uint32_t i = 0; i < s.header.frame_count; ++i) {
    FrameRecord rec;
    const std::size_t at = in.offset();
    rec.gaze.x = in.get<std::uint16_t>("gaze");
    rec.gaze.y = in.get<std::uint16_t>("gaze");
    if (rec.gaze.x >= s.header.width || rec.gaze.y >= s.header.height) {
      throw BitstreamError("gaze outside the frame", at);
    }
    rec.fmsc_code = in.get<std::uint8_t>("fmsc code");
    const auto len = in.get<std::uint32_t>("payload length");
    const auto payload = in.get_bytes(len, "frame payload");
    rec.bits.payload.assign(payload.begin(), payload.end());
    s.frames.push_back(std::move(rec));
  }
  if (in.remaining() != 0) throw BitstreamError("trailing bytes after last frame", in.offset());
  return s;
}

std::uint64_t SequenceBitstream::payload_bits() const {
  std::uint64_t bits = 0;
  for (const auto& f : frames) bits += f.bits.bit_length();
  return bits;
}

double SequenceBitstream::bits_per_pixel() const {
  return double(payload_bits()) /
         (double(header.width) * double(header.height) * double(header.frame_count));
}

VideoSequence EncodedSequence::reconstruction(FrameRate rate) const {
  std::vector<Frame> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back(f.recon);
  return VideoSequence(std::move(out), rate);
}

EncodedSequence encode_sequence(const VideoSequence& seq, std::span<const FrameFoveation> maps,
                                const QuantSchedule& sched, const CodecConfig& cfg,
                                const DisplayGeometry<double>& geom) {
  FOVC_REQUIRE(maps.size() == seq.frame_count(), "encode_sequence: need one foveation map per frame");
  FOVC_REQUIRE(seq.width() <= 0xFFFF && seq.height() <= 0xFFFF, "frame dimensions exceed 16 bits");
  FOVC_REQUIRE(seq.frame_rate().num <= 0xFFFF && seq.frame_rate().den <= 0xFFFF,
               "frame rate terms exceed 16 bits");

  EncodedSequence out;
  auto& h = out.stream.header;
  h.width = static_cast<std::uint16_t>(seq.width());
  h.height = static_cast<std::uint16_t>(seq.height());
  h.fps_num = static_cast<std::uint16_t>(seq.frame_rate().num);
  h.fps_den = static_cast<std::uint16_t>(seq.frame_rate().den);
  h.frame_count = static_cast<std::uint32_t>(seq.frame_count());
  h.screen_width = geom.screen_width;
  h.viewing_distance = geom.viewing_distance;

  Frame prev = Frame::filled(seq.width(), seq.height(), kFirstFrameReference);
  for (std::size_t t = 0; t < seq.frame_count(); ++t) {
    const FrameFoveation& fov = maps[t];
    EncodedFrame ef = encode_frame(seq.frame(t), prev, quantize_map(fov.map, sched.levels()), sched, cfg);
    out.stream.frames.push_back(FrameRecord{fov.map.gaze, fov.fmsc_code, ef.bits});
    prev = ef.recon;
    out.frames.push_back(std::move(ef));
  }
  return out;
}

VideoSequence decode_sequence(const SequenceBitstream& stream) {
  const auto& h = stream.header;
  if (stream.frames.size() != h.frame_count) {
    throw BitstreamError("frame record count disagrees with header", 14);
  }
  std::vector<Frame> frames;
  frames.reserve(stream.frames.size());
  Frame prev = Frame::filled(h.width, h.height, kFirstFrameReference);
  for (const auto& rec : stream.frames) {
    if (rec.bits.payload.empty()) throw BitstreamError("empty frame payload", 0);
    frames.push_back(decode_frame(rec.bits, prev));
    prev = frames.back();
  }
  return VideoSequence(std::move(frames), FrameRate{h.fps_num, h.fps_den});
}

VideoSequence decode_sequence(std::span<const std::uint8_t> bytes) {
  return decode_sequence(SequenceBitstream::parse(bytes));
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace fovc
