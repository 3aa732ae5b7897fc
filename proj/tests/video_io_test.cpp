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

#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "fovc/video_io.hpp"
#include "synthetic.hpp"

namespace fovc {
namespace {

std::string y4m_bytes(const std::string& header, const std::string& payload) {
  return header + payload;
}

VideoSequence parse(const std::string& s) {
  std::istringstream in(s, std::ios::binary);
  return read_y4m(in);
}

TEST(Y4mReadTest, SingleZeroFrame) {
  const std::string payload = "FRAME\n" + std::string(16 + 8, '\0');
  const VideoSequence seq = parse(y4m_bytes("YUV4MPEG2 W4 H4 F25:1 C420jpeg\n", payload));
  ASSERT_EQ(seq.frame_count(), 1u);
  EXPECT_EQ(seq.width(), 4);
  EXPECT_EQ(seq.height(), 4);
  EXPECT_EQ(seq.frame_rate(), (FrameRate{25, 1}));
  EXPECT_EQ(seq.frame(0).y.array().size(), 16);
  EXPECT_TRUE((seq.frame(0).y.array() == 0).all());
  EXPECT_EQ(seq.frame(0).cb.width(), 2);
}

TEST(Y4mReadTest, RejectsC444) {
  EXPECT_THROW(parse("YUV4MPEG2 W4 H4 F25:1 C444\nFRAME\n" + std::string(48, '\0')),
               UnsupportedFormat);
}

TEST(Y4mReadTest, RejectsHighBitDepth) {
  EXPECT_THROW(parse("YUV4MPEG2 W4 H4 C420p10\nFRAME\n" + std::string(48, '\0')),
               UnsupportedFormat);
}

TEST(Y4mReadTest, RejectsInterlaced) {
  EXPECT_THROW(parse("YUV4MPEG2 W4 H4 It C420\nFRAME\n" + std::string(24, '\0')),
               UnsupportedFormat);
}

TEST(Y4mReadTest, MalformedSignature) {
  EXPECT_THROW(parse("YUV4MPEG W4 H4\nFRAME\n" + std::string(24, '\0')), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("YUV4MPEG2 W4\nFRAME\n"), ParseError);  // no height
}

TEST(Y4mReadTest, TruncatedPayload) {
  EXPECT_THROW(parse("YUV4MPEG2 W4 H4\nFRAME\n" + std::string(20, '\0')), TruncatedStream);
  EXPECT_THROW(parse("YUV4MPEG2 W4 H4\n"), TruncatedStream);
}

TEST(Y4mReadTest, OddDimensionsUseCeilChroma) {
  // 5x3 luma -> 3x2 chroma
  const VideoSequence seq =
      parse("YUV4MPEG2 W5 H3 F30:1\nFRAME\n" + std::string(15 + 2 * 6, '\x07'));
  EXPECT_EQ(seq.frame(0).cb.width(), 3);
  EXPECT_EQ(seq.frame(0).cb.height(), 2);
}

TEST(Y4mReadTest, FrameMarkerWithParameters) {
  const VideoSequence seq =
      parse("YUV4MPEG2 W2 H2\nFRAME Ixyz\n" + std::string(6, '\x01'));
  EXPECT_EQ(seq.frame_count(), 1u);
}

TEST(Y4mWriteTest, ByteCountMatchesFormat) {
  const VideoSequence seq({Frame::filled(4, 4, 9)}, FrameRate{30, 1});
  std::ostringstream out(std::ios::binary);
  const std::size_t n = write_y4m(seq, out);
  const std::string header = "YUV4MPEG2 W4 H4 F30:1 Ip A1:1 C420jpeg\n";
  EXPECT_EQ(n, header.size() + 6 + 16 + 2 * 4);
  EXPECT_EQ(n, 69u);
  EXPECT_EQ(out.str().size(), n);
  EXPECT_EQ(out.str().substr(0, header.size()), header);
}

TEST(Y4mWriteTest, EmptySequenceIsContractViolation) {
  EXPECT_THROW(VideoSequence({}, FrameRate{30, 1}), ContractViolation);
}

TEST(Y4mWriteTest, FailingSinkIsIoError) {
  const VideoSequence seq({Frame::filled(4, 4, 9)}, FrameRate{30, 1});
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  EXPECT_THROW(write_y4m(seq, out), IoError);
}

TEST(Y4mRoundTripTest, RampClipIsByteExact) {
  std::vector<Frame> frames;
  for (int t = 0; t < 3; ++t) {
    Frame f = Frame::filled(16, 16, 0);
    for (int r = 0; r < 16; ++r) {
      for (int c = 0; c < 16; ++c) f.y(r, c) = static_cast<std::uint8_t>(16 * r + c + t);
    }
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        f.cb(r, c) = static_cast<std::uint8_t>(r * 8 + c);
        f.cr(r, c) = static_cast<std::uint8_t>(255 - r * 8 - c);
      }
    }
    frames.push_back(f);
  }
  const VideoSequence seq(frames, FrameRate{24000, 1001});
  std::ostringstream out(std::ios::binary);
  write_y4m(seq, out);
  const std::string first = out.str();
  const VideoSequence back = parse(first);
  EXPECT_EQ(back, seq);
  std::ostringstream again(std::ios::binary);
  write_y4m(back, again);
  EXPECT_EQ(again.str(), first);
}

// Property: write then read is the identity on arbitrary 4:2:0 content.
TEST(Y4mRoundTripTest, RandomSequencesRoundTrip) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 25; ++trial) {
    const int w = 1 + int(rng() % 23);
    const int h = 1 + int(rng() % 19);
    const int n = 1 + int(rng() % 4);
    const VideoSequence seq = testing::random_clip(w, h, n, rng);
    std::ostringstream out(std::ios::binary);
    write_y4m(seq, out);
    EXPECT_EQ(parse(out.str()), seq) << w << "x" << h << " x" << n;
  }
}

// Parsing is total: every prefix of a valid stream is either a sequence or a typed error.
TEST(Y4mRoundTripTest, TruncationsYieldTypedErrors) {
  std::mt19937 rng(99);
  const VideoSequence seq = testing::random_clip(6, 4, 2, rng);
  std::ostringstream out(std::ios::binary);
  write_y4m(seq, out);
  const std::string full = out.str();
  for (std::size_t len = 0; len < full.size(); ++len) {
    try {
      const VideoSequence s = parse(full.substr(0, len));
      EXPECT_GE(s.frame_count(), 1u);
    } catch (const Error&) {
    }
  }
}

}  // namespace
}  // namespace fovc
