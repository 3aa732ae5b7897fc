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

#include "fovc/video_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace fovc {

namespace {

constexpr std::string_view kSignature = "YUV4MPEG2 ";
constexpr std::string_view kFrameTag = "FRAME";
// Longest header line we are willing to buffer.
constexpr std::size_t kMaxLine = 4096;

void check_frame(const Frame& f, int w, int h) {
  FOVC_REQUIRE(f.y.width() == w && f.y.height() == h, "luma planes must share dimensions");
  const int cw = chroma_extent(w);
  const int ch = chroma_extent(h);
  FOVC_REQUIRE(f.cb.width() == cw && f.cb.height() == ch && f.cr.width() == cw &&
                   f.cr.height() == ch,
               "chroma planes must be ceil(W/2) x ceil(H/2)");
}

int parse_positive(std::string_view token, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v <= 0) {
    throw ParseError("y4m: invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return v;
}

FrameRate parse_rate(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) throw ParseError("y4m: malformed frame rate");
  FrameRate r;
  r.num = static_cast<std::uint32_t>(parse_positive(token.substr(0, colon), "frame rate"));
  r.den = static_cast<std::uint32_t>(parse_positive(token.substr(colon + 1), "frame rate"));
  return r;
}

// Reads up to and including '\n'. Returns false on clean EOF before any byte.
bool read_line(std::istream& in, std::string& line) {
  line.clear();
  char c;
  while (in.get(c)) {
    if (c == '\n') return true;
    line.push_back(c);
    if (line.size() > kMaxLine) throw ParseError("y4m: header line too long");
  }
  if (line.empty()) return false;
  throw TruncatedStream("y4m: unterminated header line");
}

void read_plane(std::istream& in, FramePlane& plane, std::size_t frame_index) {
  auto& a = plane.array();
  const auto n = static_cast<std::streamsize>(a.size());
  in.read(reinterpret_cast<char*>(a.data()), n);
  if (in.gcount() != n) {
    throw TruncatedStream("y4m: frame " + std::to_string(frame_index) + " payload truncated");
  }
}

}  // namespace

Frame Frame::filled(int width, int height, std::uint8_t value) {
  return Frame{FramePlane(width, height, value),
               FramePlane(chroma_extent(width), chroma_extent(height), value),
               FramePlane(chroma_extent(width), chroma_extent(height), value)};
}

VideoSequence::VideoSequence(std::vector<Frame> frames, FrameRate rate)
    : frames_(std::move(frames)), rate_(rate) {
  FOVC_REQUIRE(!frames_.empty(), "a sequence needs at least one frame");
  FOVC_REQUIRE(rate_.num > 0 && rate_.den > 0, "frame rate must be positive");
  const int w = frames_.front().y.width();
  const int h = frames_.front().y.height();
  for (const auto& f : frames_) check_frame(f, w, h);
}

VideoSequence read_y4m(std::istream& in) {
  std::string line;
  if (!read_line(in, line) || line.compare(0, kSignature.size(), kSignature) != 0) {
    throw ParseError("y4m: missing YUV4MPEG2 signature");
  }

  int width = 0;
  int height = 0;
  FrameRate rate;
  std::istringstream tokens(line.substr(kSignature.size()));
  std::string tok;
  while (tokens >> tok) {
    const std::string_view t(tok);
    const std::string_view value = t.substr(1);
    switch (t.front()) {
      case 'W': width = parse_positive(value, "width"); break;
      case 'H': height = parse_positive(value, "height"); break;
      case 'F': rate = parse_rate(value); break;
      case 'I':
        if (value != "p" && value != "?") {
          throw UnsupportedFormat("y4m: interlaced content ('I" + std::string(value) +
                                  "') is not supported");
        }
        break;
      case 'C':
        if (value != "420" && value != "420jpeg" && value != "420paldv" && value != "420mpeg2") {
          throw UnsupportedFormat("y4m: colorspace 'C" + std::string(value) +
                                  "' is not supported; only 8-bit 4:2:0");
        }
        break;
      default:  // A (aspect), X (extensions): ignored
        break;
    }
  }
  if (width == 0 || height == 0) throw ParseError("y4m: header lacks W or H");

  std::vector<Frame> frames;
  while (read_line(in, line)) {
    if (line.compare(0, kFrameTag.size(), kFrameTag) != 0 ||
        (line.size() > kFrameTag.size() && line[kFrameTag.size()] != ' ')) {
      throw ParseError("y4m: expected FRAME marker before frame " +
                       std::to_string(frames.size()));
    }
    Frame f = Frame::filled(width, height, 0);
    read_plane(in, f.y, frames.size());
    read_plane(in, f.cb, frames.size());
    read_plane(in, f.cr, frames.size());
    frames.push_back(std::move(f));
  }
  if (frames.empty()) throw TruncatedStream("y4m: stream contains no frames");
  return VideoSequence(std::move(frames), rate);
}

VideoSequence read_y4m(std::span<const std::uint8_t> bytes) {
  std::istringstream in(std::string(bytes.begin(), bytes.end()), std::ios::binary);
  return read_y4m(in);
}

std::string y4m_header(const VideoSequence& seq) {
  std::ostringstream h;
  h << kSignature << 'W' << seq.width() << " H" << seq.height() << " F" << seq.frame_rate().num
    << ':' << seq.frame_rate().den << " Ip A1:1 C420jpeg\n";
  return h.str();
}

std::size_t write_y4m(const VideoSequence& seq, std::ostream& out) {
  const std::string header = y4m_header(seq);
  std::size_t count = 0;
  auto put = [&](const char* p, std::size_t n) {
    out.write(p, static_cast<std::streamsize>(n));
    if (!out) throw IoError("y4m: write failed");
    count += n;
  };
  put(header.data(), header.size());
  for (const auto& f : seq.frames()) {
    put("FRAME\n", 6);
    for (const FramePlane* p : {&f.y, &f.cb, &f.cr}) {
      put(reinterpret_cast<const char*>(p->array().data()),
          static_cast<std::size_t>(p->array().size()));
    }
  }
  return count;
}

VideoSequence load_y4m(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_y4m(in);
}

void save_y4m(const VideoSequence& seq, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_y4m(seq, out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace fovc
