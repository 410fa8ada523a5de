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

#ifndef EBDO_PLF_HPP_
#define EBDO_PLF_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace ebdo {

// Segments flatter than this cannot be inverted.
inline constexpr double kSlopeEpsilon = 1e-12;

// Relative distance below which two knots are treated as the same point.
inline constexpr double kKnotCoalesceTolerance = 1e-15;

// A continuous, nondecreasing, piecewise-linear function on [0, inf) with
// f(0) = 0. Between knots the function is linear; beyond the last knot it
// continues linearly along the tail direction.
//
// The tail is stored as a direction (run, rise) rather than a slope so that
// inversion swaps the two components and invert(invert(f)) reproduces the
// original data bit for bit.
class MonotonePLF {
 public:
  // The identity.
  MonotonePLF();

  // Throws Error(kInvalidFunction) unless knots start at 0 and strictly
  // increase, values start at 0 and never decrease, and the tail is
  // nonnegative.
  MonotonePLF(std::vector<double> knots, std::vector<double> values,
              double tail_slope);
  MonotonePLF(std::vector<double> knots, std::vector<double> values,
              double tail_run, double tail_rise);

  static MonotonePLF identity() { return MonotonePLF(); }
  static MonotonePLF zero() { return linear(0.0); }
  static MonotonePLF linear(double slope);
  // alpha * (y - strike)^+
  static MonotonePLF call(double alpha, double strike);

  // Throws Error(kNegativeArgument) for x < 0.
  double operator()(double x) const;

  std::span<const double> knots() const { return knots_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return knots_.size(); }

  double tail_slope() const { return tail_rise_ / tail_run_; }
  double tail_run() const { return tail_run_; }
  double tail_rise() const { return tail_rise_; }

  // Number of linear pieces including the tail; equals size().
  std::size_t num_segments() const { return knots_.size(); }
  // Slope of piece k; piece size()-1 is the tail.
  double segment_slope(std::size_t k) const;
  double min_slope() const;
  double max_slope() const;

  bool is_strictly_increasing(double eps = kSlopeEpsilon) const {
    return min_slope() >= eps;
  }

  // Same knot data and the same tail slope.
  friend bool operator==(const MonotonePLF& a, const MonotonePLF& b);

 private:
  void check() const;

  std::vector<double> knots_;
  std::vector<double> values_;
  double tail_run_ = 1.0;
  double tail_rise_ = 1.0;
};

// Pointwise sum over the merged knot set.
MonotonePLF add(const MonotonePLF& f, const MonotonePLF& g);

// Knots and values swap. Throws Error(kNotStrictlyIncreasing) when a segment
// or the tail has slope below kSlopeEpsilon.
MonotonePLF invert(const MonotonePLF& f);

// outer(inner(x)), exact: knots are those of inner plus the inner-preimages
// of the outer knots.
MonotonePLF compose(const MonotonePLF& outer, const MonotonePLF& inner);

// (f_next^{-1} + h)^{-1}: maps gross equity before a payment to the net
// equity that solves y + h(y) = f_next^{-1}-adjusted gross equity.
MonotonePLF payoff_transfer(const MonotonePLF& f_next, const MonotonePLF& h);

// x -> f(c * x) for c > 0, exact.
MonotonePLF scale_argument(const MonotonePLF& f, double c);

// Interpolant through (nodes[k], values[k]) continued with tail_slope.
// nodes[0] must be 0.
MonotonePLF interpolate(std::span<const double> nodes,
                        std::span<const double> values, double tail_slope);

}  // namespace ebdo

#endif  // EBDO_PLF_HPP_
