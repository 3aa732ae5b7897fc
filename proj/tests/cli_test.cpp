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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fovc/cli.hpp"
#include "fovc/error.hpp"
#include "synthetic.hpp"

namespace fovc::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("fovc_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_clip(const VideoSequence& seq, const std::string& name = "in.y4m") {
    save_y4m(seq, path(name));
    return path(name);
  }

  std::string write_text(const std::string& name, const std::string& text) {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  int run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "fovc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run(int(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST(FmscSpecTest, ParsesDivisorsAndPixels) {
  const FmscSpec a = FmscSpec::parse("H/4");
  EXPECT_EQ(a.kind, FmscSpec::Kind::HeightDivisor);
  EXPECT_DOUBLE_EQ(a.pixels(288), 72.0);
  EXPECT_EQ(a.code(), 4);
  EXPECT_EQ(a.label(), "H/4");
  const FmscSpec b = FmscSpec::parse("30.5");
  EXPECT_EQ(b.kind, FmscSpec::Kind::Pixels);
  EXPECT_DOUBLE_EQ(b.pixels(288), 30.5);
  EXPECT_EQ(b.code(), 0);
  EXPECT_EQ(FmscSpec::parse("H/2.5").code(), 0);
  for (const char* bad : {"", "H/", "H/0", "H/-2", "abc", "4x", "-3"}) {
    EXPECT_THROW(FmscSpec::parse(bad), ConfigError) << bad;
  }
  ASSERT_EQ(default_fmsc_sweep().size(), 6u);
  EXPECT_EQ(default_fmsc_sweep().front().label(), "H/10");
}

TEST(GazeTrackTest, EmptyTrackDefaultsToCentre) {
  std::istringstream in("");
  const GazeTrack t = read_gaze_track(in, 4, 352, 288);
  EXPECT_EQ(t.last_row_frame, -1);
  for (const auto& g : t.gaze) EXPECT_EQ(g, (Gaze{176, 144}));
}

TEST(GazeTrackTest, HoldsLastRowAndClamps) {
  std::istringstream one("0,100,100\n");
  const GazeTrack t = read_gaze_track(one, 3, 352, 288);
  for (const auto& g : t.gaze) EXPECT_EQ(g, (Gaze{100, 100}));

  std::istringstream far("frame_idx,x,y\n0,5000,-4\n2,10,20\r\n");
  const GazeTrack u = read_gaze_track(far, 4, 1920, 1080);
  EXPECT_EQ(u.gaze[0], (Gaze{1919, 0}));
  EXPECT_EQ(u.gaze[1], (Gaze{1919, 0}));
  EXPECT_EQ(u.gaze[2], (Gaze{10, 20}));
  EXPECT_EQ(u.gaze[3], (Gaze{10, 20}));
  EXPECT_EQ(u.last_row_frame, 2);
}

TEST(GazeTrackTest, LateFirstRowLeavesCentreBefore) {
  std::istringstream in("2,1,1\n");
  const GazeTrack t = read_gaze_track(in, 4, 10, 10);
  EXPECT_EQ(t.gaze[1], (Gaze{5, 5}));
  EXPECT_EQ(t.gaze[2], (Gaze{1, 1}));
}

TEST(GazeTrackTest, ParseErrorsNameTheLine) {
  for (const char* text : {"0,1,1\n1,x,2\n", "0,1,1\n1,2\n", "0,1,1\n0,2,2\n", "0,1,1\n1,2,3,4\n"}) {
    std::istringstream in(text);
    try {
      read_gaze_track(in, 4, 10, 10);
      FAIL() << "expected ParseError for " << text;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
  }
}

TEST_F(CliTest, EncodeDecodeRoundTripMatchesReconstruction) {
  const VideoSequence clip = testing::pan_clip(48, 32, 7, 3, 0, 5);
  const std::string in = write_clip(clip);
  ASSERT_EQ(run_args({"encode", "--input", in, "--output", path("a.fmvc")}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("bpp "), std::string::npos);
  EXPECT_NE(out_.str().find("frame 6 bits "), std::string::npos);
  ASSERT_EQ(run_args({"decode", "--input", path("a.fmvc"), "--output", path("a.y4m")}), kExitOk)
      << err_.str();

  const auto bytes = read_file_bytes(path("a.fmvc"));
  const auto stream = SequenceBitstream::parse(bytes);
  EXPECT_EQ(stream.frames[0].gaze, (Gaze{24, 16}));
  EXPECT_EQ(stream.frames[0].fmsc_code, 4);
  const auto maps = build_maps(clip, std::vector<Gaze>(7, Gaze{24, 16}), FmscSpec::divisor(4),
                               false, EncodeConfig{}.geometry(48, 32));
  const EncodedSequence enc = encode_sequence(clip, maps, QuantSchedule{});
  EXPECT_EQ(enc.stream.serialize(), bytes);
  EXPECT_EQ(load_y4m(path("a.y4m")), enc.reconstruction(clip.frame_rate()));
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const std::string in = write_clip(testing::pan_clip(32, 32, 3, 5, 0, 6));
  const std::string track = write_text("g.csv", "0,3,4\n1,20,20\n2,31,0\n");
  for (const char* name : {"a.fmvc", "b.fmvc"}) {
    ASSERT_EQ(run_args({"encode", "--input", in, "--output", path(name), "--gaze", track, "--fmsc",
                        "H/6", "--qbase", "6"}),
              kExitOk)
        << err_.str();
  }
  EXPECT_EQ(read_file_bytes(path("a.fmvc")), read_file_bytes(path("b.fmvc")));
  EXPECT_EQ(SequenceBitstream::parse(read_file_bytes(path("a.fmvc"))).frames[2].gaze, (Gaze{31, 0}));

  for (const char* name : {"a.csv", "b.csv"}) {
    ASSERT_EQ(run_args({"rd-sweep", "--input", in, "--out", path(name), "--fmsc-set", "H/4", "H/2"}),
              kExitOk)
        << err_.str();
  }
  EXPECT_EQ(read_file_bytes(path("a.csv")), read_file_bytes(path("b.csv")));
}

TEST_F(CliTest, WiderMapsCostMoreBits) {
  const std::string in = write_clip(testing::natural_clip(3));
  ASSERT_EQ(run_args({"encode", "--input", in, "--output", path("wide.fmvc"), "--fmsc", "H/2"}), 0);
  ASSERT_EQ(run_args({"encode", "--input", in, "--output", path("narrow.fmvc"), "--fmsc", "H/6"}), 0);
  const auto wide = SequenceBitstream::parse(read_file_bytes(path("wide.fmvc")));
  const auto narrow = SequenceBitstream::parse(read_file_bytes(path("narrow.fmvc")));
  EXPECT_GT(wide.bits_per_pixel(), narrow.bits_per_pixel());
}

TEST_F(CliTest, ShortGazeTrackIsConfigErrorWithoutOutput) {
  const std::string in = write_clip(testing::pan_clip(32, 32, 4, 3, 0, 2));
  const std::string track = write_text("g.csv", "0,1,1\n1,2,2\n");
  EXPECT_EQ(run_args({"encode", "--input", in, "--output", path("x.fmvc"), "--gaze", track}),
            kExitConfig);
  EXPECT_FALSE(fs::exists(path("x.fmvc")));
  EXPECT_NE(err_.str().find("covers 2 of 4"), std::string::npos) << err_.str();

  EXPECT_EQ(run_args({"encode", "--input", in, "--output", path("x.fmvc"), "--gaze", track,
                      "--hold-gaze"}),
            kExitOk);
  EXPECT_TRUE(fs::exists(path("x.fmvc")));

  const std::string bad = write_text("bad.csv", "0,1,1\nfoo,2,2\n");
  EXPECT_EQ(run_args({"encode", "--input", in, "--output", path("y.fmvc"), "--gaze", bad}),
            kExitConfig);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
}

TEST_F(CliTest, CorruptStreamsGiveBitstreamExit) {
  const std::string in = write_clip(testing::pan_clip(32, 32, 2, 3, 0, 2));
  ASSERT_EQ(run_args({"encode", "--input", in, "--output", path("a.fmvc")}), 0);
  auto bytes = read_file_bytes(path("a.fmvc"));

  auto magic = bytes;
  magic[1] = 'X';
  write_file_bytes(path("m.fmvc"), magic);
  EXPECT_EQ(run_args({"decode", "--input", path("m.fmvc"), "--output", path("m.y4m")}),
            kExitBitstream);
  EXPECT_NE(err_.str().find("offset 1"), std::string::npos) << err_.str();

  auto version = bytes;
  version[4] = 2;
  write_file_bytes(path("v.fmvc"), version);
  EXPECT_EQ(run_args({"decode", "--input", path("v.fmvc"), "--output", path("v.y4m")}),
            kExitBitstream);
  EXPECT_NE(err_.str().find("version 2"), std::string::npos) << err_.str();

  bytes.resize(bytes.size() - 1);
  write_file_bytes(path("t.fmvc"), bytes);
  EXPECT_EQ(run_args({"decode", "--input", path("t.fmvc"), "--output", path("t.y4m")}),
            kExitBitstream);
}

TEST_F(CliTest, ConfigAndIoExitCodes) {
  const std::string in = write_clip(testing::pan_clip(16, 16, 2, 0, 0, 2));
  EXPECT_EQ(run_args({"encode", "--input", in, "--output", path("a"), "--fmsc", "H/0"}), kExitConfig);
  EXPECT_EQ(run_args({"encode", "--input", in, "--output", path("a"), "--qbase", "0"}), kExitConfig);
  EXPECT_EQ(run_args({"encode", "--input", in, "--output", path("a"), "--distance", "-1"}),
            kExitConfig);
  EXPECT_EQ(run_args({"encode", "--output", path("a")}), kExitConfig);
  EXPECT_EQ(run_args({"bogus"}), kExitConfig);
  EXPECT_EQ(run_args({"encode", "--input", path("missing.y4m"), "--output", path("a")}), kExitIo);
  EXPECT_NE(err_.str().find("missing.y4m"), std::string::npos);
  EXPECT_EQ(run_args({"decode", "--input", path("missing.fmvc"), "--output", path("a")}), kExitIo);
  const std::string junk = write_text("junk.y4m", "not a y4m file\n");
  EXPECT_EQ(run_args({"encode", "--input", junk, "--output", path("a")}), kExitIo);
}

TEST_F(CliTest, SweepEmitsSixOrderedRows) {
  const std::string in = write_clip(testing::pan_clip(64, 48, 3, 3, 0, 8));
  ASSERT_EQ(run_args({"rd-sweep", "--input", in, "--out", path("s.csv")}), kExitOk) << err_.str();
  std::ifstream csv(path("s.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, kSweepCsvHeader);
  std::vector<std::string> labels;
  while (std::getline(csv, line)) labels.push_back(line.substr(0, line.find(',')));
  EXPECT_EQ(labels, (std::vector<std::string>{"H/10", "H/8", "H/6", "H/4", "H/3", "H/2"}));
}

TEST_F(CliTest, MetricsOnIdenticalClipsAreOne) {
  const std::string in = write_clip(testing::pan_clip(48, 32, 2, 3, 0, 8));
  ASSERT_EQ(run_args({"metrics", "--ref", in, "--test", in, "--out", path("m.csv")}), kExitOk)
      << err_.str();
  std::ifstream csv(path("m.csv"));
  std::string line;
  std::getline(csv, line);
  std::getline(csv, line);
  EXPECT_EQ(line, kReportCsvHeader);
  std::getline(csv, line);
  EXPECT_EQ(line, "0,0.000000,1.000000,1.000000,1.000000");
}

// Sweep bpp follows map dominance and foveal quality holds on natural content.
TEST(SweepTest, BppIncreasesAndFoveatedQualityHolds) {
  const VideoSequence clip = testing::natural_clip(4);
  EncodeConfig cfg;
  cfg.fmsc = default_fmsc_sweep();
  const auto rows = rd_sweep(clip, cfg);
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].bpp, rows[i - 1].bpp) << rows[i].fmsc.label();
    EXPECT_GE(rows[i].fw_ssim, rows[i - 1].fw_ssim - 0.002) << rows[i].fmsc.label();
  }
}

}  // namespace
}  // namespace fovc::cli
