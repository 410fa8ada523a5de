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

#include "ebdo/plf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ebdo/error.hpp"

namespace ebdo {
namespace {

bool same_point(double a, double b) {
  return std::abs(b - a) <= kKnotCoalesceTolerance * std::max(std::abs(a), std::abs(b));
}

// Sorted union of two knot sets; near-collisions keep the left point.
std::vector<double> merge_knots(std::span<const double> a, std::span<const double> b) {
  std::vector<double> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  std::vector<double> out;
  out.reserve(merged.size());
  for (double x : merged) {
    if (out.empty() || (x > out.back() && !same_point(out.back(), x))) out.push_back(x);
  }
  return out;
}

// Evaluation is monotone up to rounding; clamp ulp-level dips so the result
// satisfies the nondecreasing invariant.
void enforce_nondecreasing(std::vector<double>& values) {
  for (std::size_t k = 1; k < values.size(); ++k) {
    values[k] = std::max(values[k], values[k - 1]);
  }
}

}  // namespace

MonotonePLF::MonotonePLF() : knots_{0.0}, values_{0.0}, tail_run_(1.0), tail_rise_(1.0) {}

MonotonePLF::MonotonePLF(std::vector<double> knots, std::vector<double> values,
                         double tail_slope)
    : MonotonePLF(std::move(knots), std::move(values), 1.0, tail_slope) {}

MonotonePLF::MonotonePLF(std::vector<double> knots, std::vector<double> values,
                         double tail_run, double tail_rise)
    : knots_(std::move(knots)),
      values_(std::move(values)),
      tail_run_(tail_run),
      tail_rise_(tail_rise) {
  check();
}

MonotonePLF MonotonePLF::linear(double slope) { return MonotonePLF({0.0}, {0.0}, slope); }

MonotonePLF MonotonePLF::call(double alpha, double strike) {
  if (strike == 0.0) return linear(alpha);
  return MonotonePLF({0.0, strike}, {0.0, 0.0}, alpha);
}

void MonotonePLF::check() const {
  auto bad = [](const std::string& what) { fail(ErrorCode::kInvalidFunction, what); };
  if (knots_.empty()) bad("no knots");
  if (knots_.size() != values_.size()) bad("knot and value counts differ");
  if (knots_.front() != 0.0) bad("first knot must be 0");
  if (values_.front() != 0.0) bad("value at 0 must be 0");
  for (std::size_t k = 0; k < knots_.size(); ++k) {
    if (!std::isfinite(knots_[k]) || !std::isfinite(values_[k])) bad("non-finite knot data");
    if (k > 0 && !(knots_[k] > knots_[k - 1])) {
      bad("knots not strictly increasing at index " + std::to_string(k));
    }
    if (k > 0 && values_[k] < values_[k - 1]) {
      bad("values decrease at index " + std::to_string(k));
    }
  }
  if (!(tail_run_ > 0.0) || !std::isfinite(tail_run_)) bad("tail run must be positive");
  if (!(tail_rise_ >= 0.0) || !std::isfinite(tail_rise_)) bad("tail slope must be nonnegative");
}

double MonotonePLF::operator()(double x) const {
  if (!(x >= 0.0)) fail(ErrorCode::kNegativeArgument, "evaluation at " + std::to_string(x));
  if (x >= knots_.back()) {
    if (x == knots_.back()) return values_.back();
    return values_.back() + (x - knots_.back()) * tail_rise_ / tail_run_;
  }
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  const auto k = static_cast<std::size_t>(it - knots_.begin()) - 1;
  if (knots_[k] == x) return values_[k];
  const double t = (x - knots_[k]) / (knots_[k + 1] - knots_[k]);
  return values_[k] + t * (values_[k + 1] - values_[k]);
}

double MonotonePLF::segment_slope(std::size_t k) const {
  if (k + 1 >= knots_.size()) return tail_slope();
  return (values_[k + 1] - values_[k]) / (knots_[k + 1] - knots_[k]);
}

double MonotonePLF::min_slope() const {
  double s = tail_slope();
  for (std::size_t k = 0; k + 1 < knots_.size(); ++k) s = std::min(s, segment_slope(k));
  return s;
}

double MonotonePLF::max_slope() const {
  double s = tail_slope();
  for (std::size_t k = 0; k + 1 < knots_.size(); ++k) s = std::max(s, segment_slope(k));
  return s;
}

bool operator==(const MonotonePLF& a, const MonotonePLF& b) {
  return a.knots_ == b.knots_ && a.values_ == b.values_ && a.tail_slope() == b.tail_slope();
}

MonotonePLF add(const MonotonePLF& f, const MonotonePLF& g) {
  std::vector<double> knots = merge_knots(f.knots(), g.knots());
  std::vector<double> values(knots.size());
  for (std::size_t k = 0; k < knots.size(); ++k) values[k] = f(knots[k]) + g(knots[k]);
  enforce_nondecreasing(values);
  return MonotonePLF(std::move(knots), std::move(values), f.tail_run() * g.tail_run(),
                     f.tail_rise() * g.tail_run() + g.tail_rise() * f.tail_run());
}

MonotonePLF invert(const MonotonePLF& f) {
  for (std::size_t k = 0; k < f.num_segments(); ++k) {
    if (!(f.segment_slope(k) >= kSlopeEpsilon)) {
      fail(ErrorCode::kNotStrictlyIncreasing,
           "segment " + std::to_string(k) + " has slope " + std::to_string(f.segment_slope(k)));
    }
  }
  std::vector<double> knots(f.values().begin(), f.values().end());
  std::vector<double> values(f.knots().begin(), f.knots().end());
  return MonotonePLF(std::move(knots), std::move(values), f.tail_rise(), f.tail_run());
}

MonotonePLF compose(const MonotonePLF& outer, const MonotonePLF& inner) {
  const auto xs = inner.knots();
  const auto vs = inner.values();
  const auto us = outer.knots();
  std::vector<double> preimages;
  auto u = us.begin();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const bool tail = k + 1 == xs.size();
    const double lo = vs[k];
    const double hi = tail ? (inner.tail_rise() > 0.0 ? std::numeric_limits<double>::infinity() : lo)
                           : vs[k + 1];
    while (u != us.end() && *u <= lo) ++u;
    for (; u != us.end() && *u < hi; ++u) {
      const double x = tail ? xs[k] + (*u - lo) * inner.tail_run() / inner.tail_rise()
                            : xs[k] + (*u - lo) * (xs[k + 1] - xs[k]) / (hi - lo);
      preimages.push_back(x);
    }
  }
  std::vector<double> knots = merge_knots(xs, preimages);
  std::vector<double> values(knots.size());
  for (std::size_t k = 0; k < knots.size(); ++k) values[k] = outer(inner(knots[k]));
  enforce_nondecreasing(values);
  return MonotonePLF(std::move(knots), std::move(values), outer.tail_run() * inner.tail_run(),
                     outer.tail_rise() * inner.tail_rise());
}

MonotonePLF payoff_transfer(const MonotonePLF& f_next, const MonotonePLF& h) {
  return invert(add(invert(f_next), h));
}

MonotonePLF scale_argument(const MonotonePLF& f, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorCode::kInvalidArgument, "argument scale must be positive");
  }
  std::vector<double> knots;
  std::vector<double> values;
  knots.reserve(f.size());
  values.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double x = f.knots()[k] / c;
    if (!knots.empty() && !(x > knots.back())) continue;
    knots.push_back(x);
    values.push_back(f.values()[k]);
  }
  return MonotonePLF(std::move(knots), std::move(values), f.tail_run(), f.tail_rise() * c);
}

MonotonePLF interpolate(std::span<const double> nodes, std::span<const double> values,
                        double tail_slope) {
  return MonotonePLF(std::vector<double>(nodes.begin(), nodes.end()),
                     std::vector<double>(values.begin(), values.end()), tail_slope);
}

}  // namespace ebdo
