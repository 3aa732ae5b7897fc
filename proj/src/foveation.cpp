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

#include "fovc/foveation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace fovc {

namespace {

void check_gaze(Gaze gaze, int width, int height) {
  FOVC_REQUIRE(gaze.x >= 0 && gaze.x < width && gaze.y >= 0 && gaze.y < height,
               "gaze lies outside the frame");
}

void write_pgm_bytes(const PlaneArray<std::uint8_t>& px, std::ostream& out) {
  out << "P5\n" << px.cols() << ' ' << px.rows() << "\n255\n";
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  if (!out) throw IoError("pgm: write failed");
}

}  // namespace

FoveationMap foveation_map(const DisplayGeometry<double>& geom, Gaze gaze,
                           const CsfParams<double>& params) {
  geom.validate();
  params.validate();
  check_gaze(gaze, geom.width_px, geom.height_px);
  const double f = display_nyquist(geom);
  const Point2<double> g = gaze.point();
  Plane<double> values(geom.width_px, geom.height_px);
  for (int r = 0; r < values.height(); ++r) {
    for (int c = 0; c < values.width(); ++c) {
      const double e = eccentricity<double>({double(c), double(r)}, g, geom);
      values(r, c) = error_sensitivity(f, e, params);
    }
  }
  return {std::move(values), gaze};
}

FoveationMap gaussian_map(Gaze gaze, double fmsc, int width, int height) {
  FOVC_REQUIRE(fmsc > 0, "gaussian_map: FMSC must be positive");
  check_gaze(gaze, width, height);
  Plane<double> values(width, height);
  const double denom = 2.0 * fmsc * fmsc;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const double dx = c - gaze.x;
      const double dy = r - gaze.y;
      values(r, c) = std::exp(-(dx * dx + dy * dy) / denom);
    }
  }
  return {std::move(values), gaze};
}

LevelMap quantize_map(const FoveationMap& map, int n) {
  FOVC_REQUIRE(n >= 2 && n <= 256, "quantize_map: level count must be in [2, 256]");
  const auto& v = map.values.array();
  PlaneArray<std::uint8_t> levels =
      (v * n).floor().max(0.0).min(double(n - 1)).cast<std::uint8_t>();
  return {Plane<std::uint8_t>(std::move(levels)), n};
}

LevelMap uniform_levels(int width, int height, int level, int n) {
  FOVC_REQUIRE(level >= 0 && level < n, "uniform_levels: level out of range");
  return {Plane<std::uint8_t>(width, height, static_cast<std::uint8_t>(level)), n};
}

void write_pgm(const FoveationMap& map, std::ostream& out) {
  const PlaneArray<std::uint8_t> px =
      (map.values.array().max(0.0).min(1.0) * 255.0).round().cast<std::uint8_t>();
  write_pgm_bytes(px, out);
}

void write_pgm(const LevelMap& map, std::ostream& out) {
  const PlaneArray<std::uint8_t> px =
      (map.levels.array().cast<int>() * 255 / (map.n - 1)).cast<std::uint8_t>();
  write_pgm_bytes(px, out);
}

}  // namespace fovc
