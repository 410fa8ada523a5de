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

#ifndef EBDO_TESTS_ORACLES_HPP_
#define EBDO_TESTS_ORACLES_HPP_

// Reference computations used by the tests. Nothing here calls into the
// engine's gauss or rng code: Monte Carlo uses <random>, the normal CDF is
// integrated numerically, and transfer maps are solved by bisection.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ebdo/plf.hpp"

namespace oracle {

// Phi(x) = 1/2 + int_0^x phi, composite Simpson in long double.
inline double normal_cdf_quadrature(double x, int intervals = 200000) {
  const long double h = static_cast<long double>(x) / intervals;
  auto pdf = [](long double v) {
    return std::exp(-0.5L * v * v) / std::sqrt(2.0L * 3.14159265358979323846264338327950288L);
  };
  long double sum = pdf(0.0L) + pdf(static_cast<long double>(x));
  for (int k = 1; k < intervals; ++k) sum += (k % 2 ? 4.0L : 2.0L) * pdf(k * h);
  return static_cast<double>(0.5L + sum * h / 3.0L);
}

struct McResult {
  double mean;
  double std_error;
};

// E[fn(scale * exp(m + s N))] by plain Monte Carlo.
inline McResult lognormal_mc(const std::function<double(double)>& fn, double scale, double m,
                             double s, std::size_t draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  long double sum = 0.0L, sum2 = 0.0L;
  for (std::size_t k = 0; k < draws; ++k) {
    const double v = fn(scale * std::exp(m + s * normal(rng)));
    sum += v;
    sum2 += static_cast<long double>(v) * v;
  }
  const long double n = static_cast<long double>(draws);
  const long double mean = sum / n;
  const long double var = (sum2 - n * mean * mean) / (n - 1.0L);
  return {static_cast<double>(mean), static_cast<double>(std::sqrt(var / n))};
}

// Solves lhs(y) = x for y >= 0 with lhs increasing, by bisection.
inline double solve_increasing(const std::function<double(double)>& lhs, double x) {
  double lo = 0.0, hi = std::max(1.0, x);
  while (lhs(hi) < x) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Random monotone PLF with knots in [0, 100); strict requires every slope
// to be at least 0.05.
inline ebdo::MonotonePLF random_plf(std::mt19937_64& rng, bool strict, int max_knots = 12) {
  std::uniform_int_distribution<int> count(1, max_knots);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = count(rng);
  std::vector<double> xs{0.0}, ys{0.0};
  for (int k = 1; k < n; ++k) {
    xs.push_back(xs.back() + 0.5 + 10.0 * unit(rng));
    const double slope = strict ? 0.05 + 2.0 * unit(rng) : (unit(rng) < 0.3 ? 0.0 : 2.0 * unit(rng));
    ys.push_back(ys.back() + slope * (xs.back() - xs[xs.size() - 2]));
  }
  const double tail = strict ? 0.05 + 2.0 * unit(rng) : 2.0 * unit(rng);
  return ebdo::MonotonePLF(xs, ys, tail);
}

inline double scaled_error(double got, double want) {
  const double scale = std::max(1.0, std::abs(want));
  return std::abs(got - want) / scale;
}

}  // namespace oracle

#endif  // EBDO_TESTS_ORACLES_HPP_
