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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "fovc/cli.hpp"

namespace fovc::cli {

namespace {

long parse_field(std::string_view s, std::size_t line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("gaze track line " + std::to_string(line) + ": '" + std::string(s) +
                     "' is not an integer");
  }
  return v;
}

}  // namespace

GazeTrack read_gaze_track(std::istream& csv, std::size_t frame_count, int width, int height) {
  GazeTrack track;
  track.gaze.assign(frame_count, Gaze::center(width, height));
  std::string text;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(csv, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    if (first && text.rfind("frame", 0) == 0) {  // header row
      first = false;
      continue;
    }
    first = false;

    std::string_view row(text);
    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError("gaze track line " + std::to_string(line_no) +
                       ": expected three fields frame_idx,x,y");
    }
    const long idx = parse_field(row.substr(0, c1), line_no);
    const long x = parse_field(row.substr(c1 + 1, c2 - c1 - 1), line_no);
    const long y = parse_field(row.substr(c2 + 1), line_no);
    if (idx < 0 || idx <= track.last_row_frame) {
      throw ParseError("gaze track line " + std::to_string(line_no) +
                       ": frame_idx must be zero-based and strictly increasing");
    }
    track.last_row_frame = idx;
    const Gaze g{static_cast<int>(std::clamp<long>(x, 0, width - 1)),
                 static_cast<int>(std::clamp<long>(y, 0, height - 1))};
    for (std::size_t t = static_cast<std::size_t>(idx); t < frame_count; ++t) track.gaze[t] = g;
  }
  return track;
}

std::vector<Gaze> resolve_gaze(const std::string& source, std::size_t frame_count, int width,
                               int height, bool require_coverage) {
  if (source == "center") return std::vector<Gaze>(frame_count, Gaze::center(width, height));
  std::ifstream in(source);
  if (!in) throw IoError("cannot open gaze track '" + source + "'");
  GazeTrack track;
  try {
    track = read_gaze_track(in, frame_count, width, height);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  if (require_coverage && track.last_row_frame + 1 < static_cast<long>(frame_count)) {
    throw ConfigError("gaze track '" + source + "' covers " +
                      std::to_string(track.last_row_frame + 1) + " of " +
                      std::to_string(frame_count) + " frames");
  }
  return track.gaze;
}

}  // namespace fovc::cli
