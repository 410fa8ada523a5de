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

#include "ebdo/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ebdo/error.hpp"

namespace ebdo {
namespace {

constexpr double kSmallDrift = 1e-12;

// Differences this small relative to Y_0 are rounding, not sampling error.
constexpr double kRoundingTolerance = 1e-12;

void check_time(double t, const LinearRateModel& model) {
  require(t >= 0.0 && t <= model.horizon, ErrorCode::kTimeOutOfRange,
          "time " + std::to_string(t) + " outside [0, " + std::to_string(model.horizon) + "]");
}

void check_times(std::span<const double> times, const LinearRateModel& model) {
  for (std::size_t k = 0; k < times.size(); ++k) {
    check_time(times[k], model);
    require(k == 0 || times[k] > times[k - 1], ErrorCode::kInvalidArgument,
            "sample times must increase");
  }
}

// int_a^b e^{mu s} ds
double drift_integral(double a, double b, double mu) {
  if (std::abs(mu) < kSmallDrift) return (b - a) * (1.0 + 0.5 * mu * (a + b));
  return std::exp(mu * a) * std::expm1(mu * (b - a)) / mu;
}

}  // namespace

void validate(const LinearRateModel& model) {
  require(model.gamma > 0.0 && std::isfinite(model.gamma), ErrorCode::kInvalidArgument,
          "payoff rate must be positive");
  require(model.horizon > 0.0 && std::isfinite(model.horizon), ErrorCode::kInvalidArgument,
          "horizon must be positive");
  require(model.sigma >= 0.0 && std::isfinite(model.sigma), ErrorCode::kNegativeVolatility,
          "volatility must be nonnegative");
  require(model.gross_equity >= 0.0 && std::isfinite(model.gross_equity),
          ErrorCode::kNegativeEquity, "gross equity must be nonnegative");
}

double decoupling_linear(double t, double x, const LinearRateModel& model) {
  check_time(t, model);
  if (x < 0.0) return x;
  return x / (1.0 + model.gamma * (model.horizon - t));
}

double decoupling_slope(double t, const LinearRateModel& model) {
  check_time(t, model);
  return 1.0 / (1.0 + model.gamma * (model.horizon - t));
}

GradientBounds gradient_bounds(const LinearRateModel& model) {
  return {std::exp(-model.horizon * model.gamma), 1.0};
}

double expected_gross_equity(double s, double mu, const LinearRateModel& model) {
  check_time(s, model);
  const double g = model.gamma;
  const double t = model.horizon;
  return model.gross_equity * std::exp(mu * s) * (1.0 + g * (t - s)) / (1.0 + g * t);
}

double ebdo_value_interval(double a, double b, double mu, const LinearRateModel& model) {
  require(a >= 0.0 && a <= b && b <= model.horizon, ErrorCode::kBadInterval,
          "interval [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  const double g = model.gamma;
  return g * model.gross_equity / (1.0 + g * model.horizon) * drift_integral(a, b, mu);
}

std::vector<double> sample_path_exact(const LinearRateModel& model, double mu,
                                      std::span<const double> times, NormalStream& stream) {
  check_times(times, model);
  const double g = model.gamma;
  const double t_end = model.horizon;
  const double sigma = model.sigma;
  std::vector<double> out;
  out.reserve(times.size());
  double w = 0.0;
  double previous = 0.0;
  for (double s : times) {
    const double dt = s - previous;
    if (dt > 0.0) w += std::sqrt(dt) * stream();
    previous = s;
    const double damping = (1.0 + g * (t_end - s)) / (1.0 + g * t_end);
    out.push_back(model.gross_equity * std::exp((mu - 0.5 * sigma * sigma) * s + sigma * w) *
                  damping);
  }
  return out;
}

std::vector<Estimate> estimate_gross_equity_mc(const LinearRateModel& model, double mu,
                                               std::span<const double> times,
                                               std::size_t num_paths, std::uint64_t seed) {
  validate(model);
  std::vector<RunningMoments> moments(times.size());
  for (std::size_t p = 0; p < num_paths; ++p) {
    NormalStream stream(seed, p);
    const auto x = sample_path_exact(model, mu, times, stream);
    for (std::size_t k = 0; k < x.size(); ++k) moments[k].push(x[k]);
  }
  std::vector<Estimate> out;
  for (const auto& m : moments) out.push_back(m.estimate());
  return out;
}

MartingaleReport martingale_check(const LinearRateModel& model, std::size_t num_paths,
                                  std::size_t num_times, std::uint64_t seed) {
  validate(model);
  require(num_paths >= 2, ErrorCode::kInvalidArgument, "need at least 2 paths");
  require(num_times >= 1, ErrorCode::kInvalidArgument, "need at least 1 time");
  MartingaleReport report;
  report.initial_net_equity = decoupling_linear(0.0, model.gross_equity, model);
  for (std::size_t k = 1; k <= num_times; ++k) {
    report.times.push_back(k == num_times ? model.horizon
                                          : model.horizon * static_cast<double>(k) /
                                                static_cast<double>(num_times));
  }
  std::vector<RunningMoments> moments(num_times);
  for (std::size_t p = 0; p < num_paths; ++p) {
    NormalStream stream(seed, p);
    const auto x = sample_path_exact(model, 0.0, report.times, stream);
    for (std::size_t k = 0; k < x.size(); ++k) {
      moments[k].push(decoupling_linear(report.times[k], x[k], model));
    }
  }
  const double y0 = report.initial_net_equity;
  for (const auto& m : moments) {
    const Estimate e = m.estimate();
    report.net_equity.push_back(e);
    const double gap = std::abs(e.mean - y0);
    double stat;
    if (gap <= kRoundingTolerance * std::max(1.0, std::abs(y0))) {
      stat = 0.0;
    } else {
      stat = e.std_error > 0.0 ? gap / e.std_error : std::numeric_limits<double>::infinity();
    }
    report.statistic = std::max(report.statistic, stat);
  }
  return report;
}

ContractSchedule discretize_rate(const LinearRateModel& model, std::size_t n) {
  validate(model);
  require(n >= 1, ErrorCode::kInvalidArgument, "need at least one maturity");
  ContractSchedule schedule;
  schedule.gross_equity = model.gross_equity;
  schedule.sigma = model.sigma;
  const double weight = model.gamma * model.horizon / static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = i == n ? model.horizon
                            : model.horizon * static_cast<double>(i) / static_cast<double>(n);
    schedule.contracts.push_back({t, CallPayoff{weight, 0.0}});
  }
  return schedule;
}

}  // namespace ebdo
