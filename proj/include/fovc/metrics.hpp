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
#include <span>
#include <vector>

#include "fovc/csf.hpp"
#include "fovc/foveation.hpp"
#include "fovc/plane.hpp"

namespace fovc {

/// Stabilizers for 8-bit SSIM.
inline constexpr double kSsimC1 = (0.01 * 255) * (0.01 * 255);
inline constexpr double kSsimC2 = (0.03 * 255) * (0.03 * 255);
inline constexpr int kSsimRadius = 5;     // 11x11 window
inline constexpr double kSsimSigma = 1.5;

/// Per-pixel SSIM using an 11x11 gaussian window (sigma 1.5). Near the border
/// the window is truncated and its weights renormalized.
template <typename Scalar = double>
Plane<Scalar> ssim_map(const FramePlane& ref, const FramePlane& test);

/// 2x2 Haar low-pass (box average, stride 1, replicate border).
template <typename Scalar>
Plane<Scalar> haar_lowpass(const Plane<Scalar>& s);

/// sum(lowpass(ssim) * p) / sum(p).
double foveation_weighted_ssim(const FramePlane& ref, const FramePlane& test,
                               const FoveationMap& p);

/// Wavelet-domain foveated quality index (approximation). Frames are cropped to
/// a multiple of 16 and decomposed over four Haar levels; each coefficient error
/// is weighted by the error sensitivity at its subband frequency (Nyquist / 2^s)
/// and the eccentricity of its support centre. Score is
/// 1 - |w (ref - test)| / |w ref|, clamped to [0, 1].
double fwqi_approx(const FramePlane& ref, const FramePlane& test, Gaze gaze,
                   const DisplayGeometry<double>& geom, const CsfParams<double>& params = {});

/// Column bit totals and column-mean SSIM, both of frame width.
struct ColumnProfile {
  std::vector<std::int64_t> bits;
  std::vector<double> ssim;
};

/// Block bits are spread evenly over the block's columns (integer split,
/// remainder to the leftmost columns), so the column totals conserve the bits.
ColumnProfile bits_ssim_profile(const PlaneArray<std::int64_t>& block_bits, int block_size,
                                const Plane<double>& ssim);

/// Mean of `values` over pixels whose distance from the gaze lies in [r_min, r_max].
double mean_in_annulus(const Plane<double>& values, Gaze gaze, double r_min, double r_max);

struct QualityReport {
  std::size_t frame_idx = 0;
  double bpp = 0;
  double mean_ssim = 0;
  double fw_ssim = 0;
  double fwqi_approx = 0;
  ColumnProfile profile;
};

/// Luma quality of one frame. fw_ssim weights come from the continuous
/// error-sensitivity map at the gaze.
QualityReport evaluate_frame(const FramePlane& ref, const FramePlane& test, Gaze gaze,
                             const DisplayGeometry<double>& geom, double bpp = 0.0,
                             const CsfParams<double>& params = {});

inline constexpr const char* kReportCsvHeader = "frame_idx,bpp,mean_ssim,fw_ssim,fwqi_approx";

/// Writes a fixed header (one comment line plus the column line) and one row per report.
void write_report_csv(std::span<const QualityReport> rows, std::ostream& out);

}  // namespace fovc
