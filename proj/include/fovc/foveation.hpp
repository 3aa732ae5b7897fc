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
#include <string>

#include "fovc/csf.hpp"
#include "fovc/plane.hpp"

namespace fovc {

/// Gaze position in pixel coordinates (x = column, y = row).
struct Gaze {
  int x = 0;
  int y = 0;

  static Gaze center(int width, int height) { return {width / 2, height / 2}; }
  Point2<double> point() const { return {double(x), double(y)}; }

  friend bool operator==(const Gaze&, const Gaze&) = default;
};

/// Per-pixel sensitivity weights in [0, 1] together with the gaze they were built for.
struct FoveationMap {
  Plane<double> values;
  Gaze gaze;

  int width() const noexcept { return values.width(); }
  int height() const noexcept { return values.height(); }
};

/// n-level quantization of a FoveationMap; every level lies in [0, n - 1].
struct LevelMap {
  Plane<std::uint8_t> levels;
  int n = 16;

  int width() const noexcept { return levels.width(); }
  int height() const noexcept { return levels.height(); }
};

/// Error-sensitivity map at the display Nyquist frequency. Equals 1 at the gaze.
FoveationMap foveation_map(const DisplayGeometry<double>& geom, Gaze gaze,
                           const CsfParams<double>& params = {});

/// Isotropic gaussian map exp(-r^2 / (2 fmsc^2)) centred on the gaze.
FoveationMap gaussian_map(Gaze gaze, double fmsc, int width, int height);

/// level = min(floor(value * n), n - 1).
LevelMap quantize_map(const FoveationMap& map, int n = 16);

/// A map whose every block carries the same level (used for fixed-quality runs).
LevelMap uniform_levels(int width, int height, int level, int n = 16);

/// Binary PGM of round(value * 255).
void write_pgm(const FoveationMap& map, std::ostream& out);
void write_pgm(const LevelMap& map, std::ostream& out);

}  // namespace fovc
