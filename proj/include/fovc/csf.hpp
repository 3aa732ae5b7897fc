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

// Eccentricity-dependent contrast sensitivity model. All functions are
// templated on the floating-point scalar so maps can be produced in float or
// double precision.

#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "fovc/error.hpp"

namespace fovc {

/// Contrast threshold model parameters: spatial-frequency decay alpha
/// (per cycle/degree), half-resolution eccentricity e2 (degrees), and minimum
/// contrast threshold ct0.
template <typename Scalar = double>
struct CsfParams {
  Scalar alpha = Scalar(0.106);
  Scalar e2 = Scalar(2.3);
  Scalar ct0 = Scalar(1) / Scalar(64);

  void validate() const {
    FOVC_REQUIRE(alpha > 0 && e2 > 0 && ct0 > 0 && ct0 < 1,
                 "CSF parameters need alpha > 0, e2 > 0, 0 < ct0 < 1");
  }
};

/// Viewing setup. Pixel pitch is screen_width / width_px.
template <typename Scalar = double>
struct DisplayGeometry {
  Scalar screen_width = Scalar(0.02);       // meters
  Scalar viewing_distance = Scalar(0.012);  // meters
  int width_px = 1920;
  int height_px = 1080;

  static DisplayGeometry for_frame(int width, int height) {
    DisplayGeometry g;
    g.width_px = width;
    g.height_px = height;
    return g;
  }

  Scalar pixel_pitch() const { return screen_width / Scalar(width_px); }

  void validate() const {
    FOVC_REQUIRE(screen_width > 0 && viewing_distance > 0 && width_px > 0 && height_px > 0,
                 "display geometry must be strictly positive");
  }
};

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

/// CT(f, e) = ct0 * exp(alpha * f * (e + e2) / e2). Not clamped to 1.
template <typename Scalar>
Scalar contrast_threshold(Scalar f, Scalar e, const CsfParams<Scalar>& p = {}) {
  FOVC_REQUIRE(f >= 0 && e >= 0, "contrast_threshold: frequency and eccentricity must be >= 0");
  return p.ct0 * std::exp(p.alpha * f * (e + p.e2) / p.e2);
}

template <typename Scalar>
Scalar contrast_sensitivity(Scalar f, Scalar e, const CsfParams<Scalar>& p = {}) {
  return Scalar(1) / contrast_threshold(f, e, p);
}

/// Frequency at which the threshold reaches full contrast (CT = 1):
/// e2 * ln(1/ct0) / (alpha * (e + e2)).
template <typename Scalar>
Scalar cutoff_frequency(Scalar e, const CsfParams<Scalar>& p = {}) {
  FOVC_REQUIRE(e >= 0, "cutoff_frequency: eccentricity must be >= 0");
  return p.e2 * std::log(Scalar(1) / p.ct0) / (p.alpha * (e + p.e2));
}

/// Sensitivity relative to the fovea, exp(-alpha f e / e2), and zero past the cutoff.
template <typename Scalar>
Scalar error_sensitivity(Scalar f, Scalar e, const CsfParams<Scalar>& p = {}) {
  FOVC_REQUIRE(f >= 0 && e >= 0, "error_sensitivity: frequency and eccentricity must be >= 0");
  if (f > cutoff_frequency(e, p)) return Scalar(0);
  return std::exp(-p.alpha * f * e / p.e2);
}

/// Visual angle in degrees between a pixel and the gaze point.
template <typename Scalar>
Scalar eccentricity(const Point2<Scalar>& pixel, const Point2<Scalar>& gaze,
                    const DisplayGeometry<Scalar>& geom) {
  const Scalar r = (pixel - gaze).norm() * geom.pixel_pitch();
  return std::atan(r / geom.viewing_distance) * Scalar(180) / std::numbers::pi_v<Scalar>;
}

/// Pixels per degree at the screen center.
template <typename Scalar>
Scalar pixels_per_degree(const DisplayGeometry<Scalar>& geom) {
  return std::numbers::pi_v<Scalar> / Scalar(180) * geom.viewing_distance / geom.pixel_pitch();
}

/// Highest frequency the display can present without aliasing, in cycles/degree.
template <typename Scalar>
Scalar display_nyquist(const DisplayGeometry<Scalar>& geom) {
  return pixels_per_degree(geom) / Scalar(2);
}

/// Pixel radius subtending `degrees` of eccentricity.
template <typename Scalar>
Scalar radius_for_eccentricity(Scalar degrees, const DisplayGeometry<Scalar>& geom) {
  return std::tan(degrees * std::numbers::pi_v<Scalar> / Scalar(180)) * geom.viewing_distance /
         geom.pixel_pitch();
}

}  // namespace fovc
