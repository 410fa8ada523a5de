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

#include "ebdo/model.hpp"

#include <cmath>
#include <string>

#include "ebdo/error.hpp"

namespace ebdo {
namespace {

MonotonePLF points_to_plf(const PointsPayoff& p) {
  require(!p.points.empty(), ErrorCode::kInvalidPayoff, "payoff has no points");
  require(p.points.front().first == 0.0, ErrorCode::kInvalidPayoff,
          "first payoff point must be at y = 0");
  require(p.points.front().second == 0.0, ErrorCode::kPayoffNonzeroAtZero,
          "h(0) = " + std::to_string(p.points.front().second));
  std::vector<double> knots;
  std::vector<double> values;
  for (std::size_t k = 0; k < p.points.size(); ++k) {
    const auto [x, y] = p.points[k];
    require(std::isfinite(x) && std::isfinite(y), ErrorCode::kInvalidPayoff,
            "non-finite payoff point");
    if (k > 0) {
      require(x > knots.back(), ErrorCode::kInvalidPayoff,
              "payoff points must have strictly increasing y-coordinates");
      require(y >= values.back(), ErrorCode::kDecreasingPayoff,
              "payoff decreases at point " + std::to_string(k));
    }
    knots.push_back(x);
    values.push_back(y);
  }
  require(p.tail_slope >= 0.0 && std::isfinite(p.tail_slope), ErrorCode::kDecreasingPayoff,
          "tail slope must be finite and nonnegative");
  return MonotonePLF(std::move(knots), std::move(values), p.tail_slope);
}

MonotonePLF call_to_plf(const CallPayoff& c) {
  require(std::isfinite(c.alpha) && std::isfinite(c.strike), ErrorCode::kInvalidPayoff,
          "non-finite call parameters");
  require(c.alpha >= 0.0, ErrorCode::kDecreasingPayoff, "participation rate is negative");
  require(c.alpha > 0.0, ErrorCode::kInvalidPayoff, "participation rate must be positive");
  require(c.strike >= 0.0, ErrorCode::kPayoffNonzeroAtZero,
          "negative strike gives h(0) = " + std::to_string(-c.alpha * c.strike));
  return MonotonePLF::call(c.alpha, c.strike);
}

}  // namespace

MonotonePLF to_plf(const PayoffSpec& payoff) {
  if (const auto* c = std::get_if<CallPayoff>(&payoff)) return call_to_plf(*c);
  return points_to_plf(std::get<PointsPayoff>(payoff));
}

double ContractSchedule::period(std::size_t i) const {
  const double start = i <= 1 ? 0.0 : contracts[i - 2].maturity;
  return contracts[i - 1].maturity - start;
}

void validate(const ContractSchedule& schedule) {
  require(!schedule.contracts.empty(), ErrorCode::kEmptySchedule, "no contracts");
  require(std::isfinite(schedule.gross_equity) && schedule.gross_equity >= 0.0,
          ErrorCode::kNegativeEquity, "gross equity must be a nonnegative number");
  require(std::isfinite(schedule.sigma) && schedule.sigma >= 0.0,
          ErrorCode::kNegativeVolatility, "volatility must be a nonnegative number");
  double previous = 0.0;
  for (std::size_t i = 0; i < schedule.contracts.size(); ++i) {
    const double t = schedule.contracts[i].maturity;
    require(std::isfinite(t), ErrorCode::kNonIncreasingMaturities, "non-finite maturity");
    if (i == 0) {
      require(t >= 0.0, ErrorCode::kNonIncreasingMaturities, "first maturity is negative");
    } else {
      require(t > previous, ErrorCode::kNonIncreasingMaturities,
              "maturity " + std::to_string(i + 1) + " does not follow maturity " +
                  std::to_string(i));
    }
    previous = t;
    to_plf(schedule.contracts[i].payoff);
  }
}

double LogNormalLaw::mean() const { return std::exp(m + 0.5 * s * s); }

LogNormalLaw law_for_period(double mu, double sigma, double dt) {
  require(dt >= 0.0, ErrorCode::kNegativeDuration, "period length " + std::to_string(dt));
  require(sigma >= 0.0, ErrorCode::kNegativeVolatility, "volatility " + std::to_string(sigma));
  return LogNormalLaw{(mu - 0.5 * sigma * sigma) * dt, sigma * std::sqrt(dt)};
}

}  // namespace ebdo
