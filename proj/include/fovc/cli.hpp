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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fovc/container.hpp"
#include "fovc/metrics.hpp"

namespace fovc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitBitstream = 3,
  kExitIo = 4,
};

/// Gaussian map width, either a divisor of the frame height ("H/6") or pixels ("48").
struct FmscSpec {
  enum class Kind { HeightDivisor, Pixels };
  Kind kind = Kind::HeightDivisor;
  double value = 4;

  static FmscSpec parse(const std::string& text);
  static FmscSpec divisor(double k) { return {Kind::HeightDivisor, k}; }

  double pixels(int frame_height) const;
  std::string label() const;
  /// Container code: k for an integral divisor H/k with k <= 255, else 0.
  std::uint8_t code() const;
};

/// FMSCs H/10, H/8, H/6, H/4, H/3, H/2, in increasing width.
std::vector<FmscSpec> default_fmsc_sweep();

struct EncodeConfig {
  std::vector<FmscSpec> fmsc = {FmscSpec::divisor(4)};
  /// "center" or a path to a frame_idx,x,y CSV.
  std::string gaze = "center";
  /// Allow gaze tracks that end before the last frame (last row is held).
  bool hold_gaze = false;
  /// Use the continuous error-sensitivity map instead of a gaussian.
  bool csf_map = false;
  int q_base = 4;
  int levels = 16;
  bool select_displacement = true;
  std::optional<double> screen_width;
  std::optional<double> viewing_distance;

  DisplayGeometry<double> geometry(int width, int height) const;
};

/// Parses "frame_idx,x,y" rows (optional header line, blank lines ignored).
/// frame_idx must be zero-based and strictly increasing. The result has one
/// gaze per frame: frames before the first row sit at the centre, later frames
/// hold the most recent row, coordinates are clamped into the frame.
/// Throws ParseError naming the line on malformed rows.
struct GazeTrack {
  std::vector<Gaze> gaze;
  /// Highest frame index present in the file, or -1 for an empty track.
  long last_row_frame = -1;
};
GazeTrack read_gaze_track(std::istream& csv, std::size_t frame_count, int width, int height);

/// Resolves "center" or a track file to one gaze per frame. With
/// require_coverage, a track whose last row precedes the final frame is a ConfigError.
std::vector<Gaze> resolve_gaze(const std::string& source, std::size_t frame_count, int width,
                               int height, bool require_coverage);

struct EncodeSummary {
  double bpp = 0;
  std::vector<std::uint64_t> frame_bits;
};

/// Builds the per-frame foveation inputs for a sequence.
std::vector<FrameFoveation> build_maps(const VideoSequence& seq, const std::vector<Gaze>& gaze,
                                       const FmscSpec& fmsc, bool csf_map,
                                       const DisplayGeometry<double>& geom);

EncodeSummary cmd_encode(const std::string& input, const std::string& output,
                         const EncodeConfig& cfg, std::ostream& log);

void cmd_decode(const std::string& input, const std::string& output, std::ostream& log);

struct SweepRow {
  FmscSpec fmsc;
  double bpp = 0;
  double mean_ssim = 0;
  double fw_ssim = 0;
  double fwqi_approx = 0;
};

inline constexpr const char* kSweepCsvHeader = "fmsc,bpp,mean_ssim,fw_ssim,fwqi_approx";

/// Encodes the clip once per FMSC (rows ordered by FMSC width) and reports quality of
/// the decoded output, averaged over frames.
std::vector<SweepRow> rd_sweep(const VideoSequence& seq, const EncodeConfig& cfg);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> cmd_rd_sweep(const std::string& input, const std::string& csv_out,
                                   const EncodeConfig& cfg);

/// Per-frame quality of `test` against `ref`; bpp comes from an optional bitstream.
std::vector<QualityReport> cmd_metrics(const std::string& ref, const std::string& test,
                                       const std::string& bits, const EncodeConfig& cfg,
                                       std::ostream& csv);

/// Full command-line driver. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fovc::cli
