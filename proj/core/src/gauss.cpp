// Copyright 2026 The EbDO Valuation Authors
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

#include "ebdo/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ebdo/error.hpp"

namespace ebdo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Below this width the interval mass is taken from the midpoint density.
constexpr double kNarrowInterval = 1e-10;

// Standard deviations beyond which a piece's probability is below 1e-40.
constexpr double kWindow = 13.5;

// Upper tail Q(x) = 1 - Phi(x).
double upper_tail(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }

// Phi(z) for z < 0 and Q(z) otherwise; whichever is not close to 1.
double small_side(double z) {
  if (z == -kInf || z == kInf) return 0.0;
  return z < 0.0 ? 0.5 * std::erfc(-z * kInvSqrt2) : upper_tail(z);
}

// P(a < N < b) from precomputed small_side values.
double interval(double a, double b, double side_a, double side_b) {
  if (!(a < b)) return 0.0;
  if (std::isfinite(a) && std::isfinite(b) && b - a < kNarrowInterval) {
    return (b - a) * kInvSqrt2Pi * std::exp(-0.125 * (a + b) * (a + b));
  }
  if (a >= 0.0) return side_a - side_b;
  if (b <= 0.0) return side_b - side_a;
  return 1.0 - side_b - side_a;
}

// A knot in standardised coordinates with its tail masses under the plain
// and the tilted (shifted by s) normal.
struct Edge {
  double z;
  double plain;
  double tilted;

  static Edge at_infinity() { return {kInf, 0.0, 0.0}; }
};

Edge make_edge(double z, double s) { return {z, small_side(z), small_side(z - s)}; }

// Standardised log-moneyness of a knot; zero maps to -inf.
double standardise(double knot, double scale, const LogNormalLaw& law) {
  if (knot == 0.0) return -kInf;
  return (std::log(knot / scale) - law.m) / law.s;
}

}  // namespace

double std_normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double std_normal_interval(double a, double b) {
  return interval(a, b, small_side(a), small_side(b));
}

double std_normal_quantile(double p) {
  require(p > 0.0 && p < 1.0, ErrorCode::kInvalidArgument, "quantile level must be in (0, 1)");
  // Rational starting point (Acklam), then Halley steps against erfc.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  for (int iter = 0; iter < 2; ++iter) {
    const double e = x < 0.0 ? std_normal_cdf(x) - p : (1.0 - p) - upper_tail(x);
    const double u = e / std_normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double expected_plf(const MonotonePLF& g, double scale, const LogNormalLaw& law) {
  require(scale >= 0.0, ErrorCode::kNegativeArgument, "expectation at negative scale");
  if (scale == 0.0) return 0.0;
  if (law.is_point_mass()) return g(scale * std::exp(law.m));

  const auto knots = g.knots();
  const auto values = g.values();
  const std::size_t n = knots.size();

  // Pieces lying entirely beyond kWindow standard deviations (in both the
  // plain and the exponentially tilted measure) carry no representable mass.
  const double lo_knot = scale * std::exp(law.m - (kWindow + law.s) * law.s);
  const double hi_knot = scale * std::exp(law.m + (kWindow + law.s) * law.s);
  std::size_t first = static_cast<std::size_t>(
      std::upper_bound(knots.begin(), knots.end(), lo_knot) - knots.begin());
  first = first == 0 ? 0 : first - 1;
  const std::size_t last = static_cast<std::size_t>(
      std::lower_bound(knots.begin(), knots.end(), hi_knot) - knots.begin());

  const double mean_factor = scale * law.mean();
  double total = 0.0;
  Edge left = make_edge(standardise(knots[first], scale, law), law.s);
  for (std::size_t k = first; k < n && k <= last; ++k) {
    const Edge right =
        k + 1 < n ? make_edge(standardise(knots[k + 1], scale, law), law.s) : Edge::at_infinity();
    const double mass = interval(left.z, right.z, left.plain, right.plain);
    const double tilted_mass = interval(left.z - law.s, right.z - law.s, left.tilted, right.tilted);
    // On this piece g(w) = v_k + slope * (w - knot_k).
    total += values[k] * mass +
             g.segment_slope(k) * (mean_factor * tilted_mass - knots[k] * mass);
    left = right;
  }
  return total;
}

}  // namespace ebdo
