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

#include "fovc/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace fovc {

namespace {

template <typename Scalar>
std::array<Scalar, 2 * kSsimRadius + 1> ssim_window() {
  std::array<Scalar, 2 * kSsimRadius + 1> g{};
  for (int k = -kSsimRadius; k <= kSsimRadius; ++k) {
    g[k + kSsimRadius] = Scalar(std::exp(-double(k * k) / (2 * kSsimSigma * kSsimSigma)));
  }
  return g;
}

// Separable gaussian blur with truncated, renormalized taps.
template <typename Scalar>
PlaneArray<Scalar> blur(const PlaneArray<Scalar>& x) {
  static const auto g = ssim_window<Scalar>();
  const Eigen::Index rows = x.rows();
  const Eigen::Index cols = x.cols();
  PlaneArray<Scalar> tmp(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, c - kSsimRadius);
    const Eigen::Index hi = std::min<Eigen::Index>(cols - 1, c + kSsimRadius);
    Scalar norm = 0;
    for (Eigen::Index k = lo; k <= hi; ++k) norm += g[k - c + kSsimRadius];
    tmp.col(c).setZero();
    for (Eigen::Index k = lo; k <= hi; ++k) tmp.col(c) += g[k - c + kSsimRadius] * x.col(k);
    tmp.col(c) /= norm;
  }
  PlaneArray<Scalar> out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, r - kSsimRadius);
    const Eigen::Index hi = std::min<Eigen::Index>(rows - 1, r + kSsimRadius);
    Scalar norm = 0;
    for (Eigen::Index k = lo; k <= hi; ++k) norm += g[k - r + kSsimRadius];
    out.row(r).setZero();
    for (Eigen::Index k = lo; k <= hi; ++k) out.row(r) += g[k - r + kSsimRadius] * tmp.row(k);
    out.row(r) /= norm;
  }
  return out;
}

// One orthonormal 2-D Haar step on an even-sized array.
struct HaarBands {
  PlaneArray<double> ll, lh, hl, hh;
};

HaarBands haar_step(const PlaneArray<double>& x) {
  const Eigen::Index rows = x.rows() / 2;
  const Eigen::Index cols = x.cols() / 2;
  HaarBands b{PlaneArray<double>(rows, cols), PlaneArray<double>(rows, cols),
              PlaneArray<double>(rows, cols), PlaneArray<double>(rows, cols)};
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double a = x(2 * r, 2 * c), bb = x(2 * r, 2 * c + 1);
      const double cc = x(2 * r + 1, 2 * c), d = x(2 * r + 1, 2 * c + 1);
      b.ll(r, c) = (a + bb + cc + d) / 2;
      b.lh(r, c) = (a - bb + cc - d) / 2;
      b.hl(r, c) = (a + bb - cc - d) / 2;
      b.hh(r, c) = (a - bb - cc + d) / 2;
    }
  }
  return b;
}

constexpr int kFwqiLevels = 4;

}  // namespace

template <typename Scalar>
Plane<Scalar> ssim_map(const FramePlane& ref, const FramePlane& test) {
  FOVC_REQUIRE(ref.same_shape(test), "ssim_map: frame dimensions differ");
  const PlaneArray<Scalar> x = ref.array().template cast<Scalar>();
  const PlaneArray<Scalar> y = test.array().template cast<Scalar>();
  const PlaneArray<Scalar> mx = blur(x);
  const PlaneArray<Scalar> my = blur(y);
  const PlaneArray<Scalar> sxx = blur<Scalar>(x * x) - mx * mx;
  const PlaneArray<Scalar> syy = blur<Scalar>(y * y) - my * my;
  const PlaneArray<Scalar> sxy = blur<Scalar>(x * y) - mx * my;
  const Scalar c1 = Scalar(kSsimC1);
  const Scalar c2 = Scalar(kSsimC2);
  PlaneArray<Scalar> s = ((2 * mx * my + c1) * (2 * sxy + c2)) /
                         ((mx * mx + my * my + c1) * (sxx + syy + c2));
  return Plane<Scalar>(std::move(s));
}

template Plane<float> ssim_map<float>(const FramePlane&, const FramePlane&);
template Plane<double> ssim_map<double>(const FramePlane&, const FramePlane&);

template <typename Scalar>
Plane<Scalar> haar_lowpass(const Plane<Scalar>& s) {
  Plane<Scalar> out(s.width(), s.height());
  for (int r = 0; r < s.height(); ++r) {
    for (int c = 0; c < s.width(); ++c) {
      out(r, c) = (s.clamped(r, c) + s.clamped(r, c + 1) + s.clamped(r + 1, c) +
                   s.clamped(r + 1, c + 1)) / Scalar(4);
    }
  }
  return out;
}

template Plane<float> haar_lowpass<float>(const Plane<float>&);
template Plane<double> haar_lowpass<double>(const Plane<double>&);

double foveation_weighted_ssim(const FramePlane& ref, const FramePlane& test,
                               const FoveationMap& p) {
  FOVC_REQUIRE(ref.same_shape(test) && ref.same_shape(p.values),
               "foveation_weighted_ssim: dimensions differ");
  const double mass = p.values.array().sum();
  FOVC_REQUIRE(mass > 0, "foveation_weighted_ssim: foveation map sums to zero");
  const Plane<double> smooth = haar_lowpass(ssim_map<double>(ref, test));
  return (smooth.array() * p.values.array()).sum() / mass;
}

double fwqi_approx(const FramePlane& ref, const FramePlane& test, Gaze gaze,
                   const DisplayGeometry<double>& geom, const CsfParams<double>& params) {
  FOVC_REQUIRE(ref.same_shape(test), "fwqi_approx: frame dimensions differ");
  constexpr int kAlign = 1 << kFwqiLevels;
  const int w = ref.width() / kAlign * kAlign;
  const int h = ref.height() / kAlign * kAlign;
  FOVC_REQUIRE(w > 0 && h > 0, "fwqi_approx: frames must be at least 16x16");

  PlaneArray<double> a = ref.array().topLeftCorner(h, w).cast<double>();
  PlaneArray<double> b = test.array().topLeftCorner(h, w).cast<double>();
  const double nyquist = display_nyquist(geom);
  const Point2<double> g = gaze.point();

  double err = 0;
  double energy = 0;
  auto accumulate = [&](const PlaneArray<double>& ca, const PlaneArray<double>& cb, int scale) {
    const double f = nyquist / double(1 << scale);
    const double span = double(1 << scale);
    for (Eigen::Index r = 0; r < ca.rows(); ++r) {
      for (Eigen::Index c = 0; c < ca.cols(); ++c) {
        const Point2<double> centre{c * span + (span - 1) / 2, r * span + (span - 1) / 2};
        const double wgt = error_sensitivity(f, eccentricity(centre, g, geom), params);
        const double d = wgt * (ca(r, c) - cb(r, c));
        const double e = wgt * ca(r, c);
        err += d * d;
        energy += e * e;
      }
    }
  };

  for (int s = 1; s <= kFwqiLevels; ++s) {
    HaarBands ba = haar_step(a);
    HaarBands bb = haar_step(b);
    accumulate(ba.lh, bb.lh, s);
    accumulate(ba.hl, bb.hl, s);
    accumulate(ba.hh, bb.hh, s);
    a = std::move(ba.ll);
    b = std::move(bb.ll);
  }
  accumulate(a, b, kFwqiLevels);

  FOVC_REQUIRE(energy > 0, "fwqi_approx: reference has zero weighted energy");
  return std::clamp(1.0 - std::sqrt(err) / std::sqrt(energy), 0.0, 1.0);
}

ColumnProfile bits_ssim_profile(const PlaneArray<std::int64_t>& block_bits, int block_size,
                                const Plane<double>& ssim) {
  FOVC_REQUIRE(block_size >= 1, "block size must be at least 1");
  const int w = ssim.width();
  FOVC_REQUIRE(block_bits.cols() == ceil_div(w, block_size) &&
                   block_bits.rows() == ceil_div(ssim.height(), block_size),
               "bits_ssim_profile: block grid does not match the frame");
  ColumnProfile p;
  p.bits.assign(static_cast<std::size_t>(w), 0);
  for (Eigen::Index bc = 0; bc < block_bits.cols(); ++bc) {
    const int c0 = static_cast<int>(bc) * block_size;
    const int span = std::min(block_size, w - c0);
    const std::int64_t total = block_bits.col(bc).sum();
    for (int i = 0; i < span; ++i) {
      p.bits[static_cast<std::size_t>(c0 + i)] = total / span + (i < total % span ? 1 : 0);
    }
  }
  const Eigen::VectorXd col_mean = ssim.array().colwise().mean().transpose();
  p.ssim.assign(col_mean.data(), col_mean.data() + col_mean.size());
  return p;
}

double mean_in_annulus(const Plane<double>& values, Gaze gaze, double r_min, double r_max) {
  double sum = 0;
  std::int64_t n = 0;
  for (int r = 0; r < values.height(); ++r) {
    for (int c = 0; c < values.width(); ++c) {
      const double d = std::hypot(double(c - gaze.x), double(r - gaze.y));
      if (d >= r_min && d <= r_max) {
        sum += values(r, c);
        ++n;
      }
    }
  }
  FOVC_REQUIRE(n > 0, "mean_in_annulus: region contains no pixels");
  return sum / double(n);
}

QualityReport evaluate_frame(const FramePlane& ref, const FramePlane& test, Gaze gaze,
                             const DisplayGeometry<double>& geom, double bpp,
                             const CsfParams<double>& params) {
  QualityReport q;
  q.bpp = bpp;
  q.mean_ssim = ssim_map<double>(ref, test).array().mean();
  q.fw_ssim = foveation_weighted_ssim(ref, test, foveation_map(geom, gaze, params));
  q.fwqi_approx = fwqi_approx(ref, test, gaze, geom, params);
  return q;
}

void write_report_csv(std::span<const QualityReport> rows, std::ostream& out) {
  out << "# fw_ssim weights: continuous error-sensitivity foveation map\n"
      << kReportCsvHeader << '\n';
  out << std::fixed << std::setprecision(6);
  for (const auto& r : rows) {
    out << r.frame_idx << ',' << r.bpp << ',' << r.mean_ssim << ',' << r.fw_ssim << ','
        << r.fwqi_approx << '\n';
  }
}

}  // namespace fovc
