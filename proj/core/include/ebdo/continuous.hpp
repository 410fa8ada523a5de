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

#ifndef EBDO_CONTINUOUS_HPP_
#define EBDO_CONTINUOUS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ebdo/model.hpp"
#include "ebdo/rng.hpp"
#include "ebdo/stats.hpp"

namespace ebdo {

// Continuous payoff rate h(y) = gamma * y^+ over [0, horizon].
struct LinearRateModel {
  double gamma = 1.0;
  double horizon = 1.0;
  double sigma = 0.0;
  double gross_equity = 0.0;
};

// Throws Error(kInvalidArgument) unless gamma > 0, horizon > 0, sigma >= 0
// and gross_equity >= 0.
void validate(const LinearRateModel& model);

// u(t, x) = x / (1 + gamma (T - t)) for x >= 0 and x otherwise.
double decoupling_linear(double t, double x, const LinearRateModel& model);

// du/dx on x >= 0.
double decoupling_slope(double t, const LinearRateModel& model);

struct GradientBounds {
  double lower;  // exp(-gamma T)
  double upper;  // 1
};

GradientBounds gradient_bounds(const LinearRateModel& model);

// E[X_s] = X_0 e^{mu s} (1 + gamma (T - s)) / (1 + gamma T)
double expected_gross_equity(double s, double mu, const LinearRateModel& model);

// Value of the payments made over [a, b]:
// gamma X_0 / (1 + gamma T) * int_a^b e^{mu s} ds.
double ebdo_value_interval(double a, double b, double mu, const LinearRateModel& model);

// Gross equity at the given times from the exact strong solution of
// dX = (mu - gamma / (1 + gamma (T - s))) X ds + sigma X dW.
std::vector<double> sample_path_exact(const LinearRateModel& model, double mu,
                                      std::span<const double> times, NormalStream& stream);

// Sample means of X at each time over num_paths paths (path p uses
// NormalStream(seed, p)).
std::vector<Estimate> estimate_gross_equity_mc(const LinearRateModel& model, double mu,
                                               std::span<const double> times,
                                               std::size_t num_paths, std::uint64_t seed);

struct MartingaleReport {
  double statistic = 0.0;  // max_k |mean(Y_{t_k}) - Y_0| / stderr
  double initial_net_equity = 0.0;
  std::vector<double> times;
  std::vector<Estimate> net_equity;
};

// Samples Y_t = u(t, X_t) at times k T / num_times, k = 1..num_times, under
// zero drift and compares the means with Y_0.
MartingaleReport martingale_check(const LinearRateModel& model, std::size_t num_paths,
                                  std::size_t num_times, std::uint64_t seed);

// n lumped payments (gamma T / n) y at T_i = i T / n.
ContractSchedule discretize_rate(const LinearRateModel& model, std::size_t n);

}  // namespace ebdo

#endif  // EBDO_CONTINUOUS_HPP_
