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

#ifndef EBDO_MODEL_HPP_
#define EBDO_MODEL_HPP_

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "ebdo/plf.hpp"

namespace ebdo {

// h(y) = alpha * (y - strike)^+
struct CallPayoff {
  double alpha = 1.0;
  double strike = 0.0;
};

// Payoff given by its graph. Points need not satisfy the MonotonePLF
// invariants; validate() reports which condition fails.
struct PointsPayoff {
  std::vector<std::pair<double, double>> points;
  double tail_slope = 0.0;
};

using PayoffSpec = std::variant<CallPayoff, PointsPayoff>;

// Throws the validation error from validate() when the payoff is unusable.
MonotonePLF to_plf(const PayoffSpec& payoff);

// One aggregated payment per maturity date.
struct Contract {
  double maturity = 0.0;
  PayoffSpec payoff;
};

struct ContractSchedule {
  double gross_equity = 0.0;
  double sigma = 0.0;
  std::vector<Contract> contracts;

  std::size_t size() const { return contracts.size(); }
  // Period length before maturity i (1-based); the first period starts at 0.
  double period(std::size_t i) const;
};

// Throws Error with kEmptySchedule, kNonIncreasingMaturities, kNegativeEquity,
// kNegativeVolatility, kPayoffNonzeroAtZero, kDecreasingPayoff or
// kInvalidPayoff.
void validate(const ContractSchedule& schedule);

// Parameters of ln Z over one period: ln Z ~ Normal(m, s^2).
struct LogNormalLaw {
  double m = 0.0;
  double s = 0.0;

  // E[Z] = exp(m + s^2/2)
  double mean() const;
  bool is_point_mass() const { return s == 0.0; }
};

LogNormalLaw law_for_period(double mu, double sigma, double dt);

struct ValuationResult {
  double net_equity = 0.0;
  std::vector<MonotonePLF> value_functions;  // f_0 .. f_n
  std::vector<double> contract_values;       // E[h_i(Y_i)] under the pricing drift
  double conservation_residual = 0.0;        // X_0 - Y_0 - sum(contract_values)
};

// One realisation of the forward recursion; index 0 is time 0.
struct PathSample {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> x_after;
  std::vector<double> shocks;  // Z_1 .. Z_n
};

}  // namespace ebdo

#endif  // EBDO_MODEL_HPP_
