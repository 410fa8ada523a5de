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

#ifndef EBDO_DISCRETE_HPP_
#define EBDO_DISCRETE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ebdo/model.hpp"
#include "ebdo/plf.hpp"
#include "ebdo/rng.hpp"
#include "ebdo/stats.hpp"

namespace ebdo {

struct GridSpec {
  std::size_t num_nodes = 2048;
  // Probability mass of the terminal shock product covered by the log-spaced
  // nodes.
  double quantile_span = 0.9999;
  // Gross equity the grid is centred on; 0 uses the schedule's gross equity
  // (or a unit scale when that is 0 too).
  double anchor = 0.0;
};

// Throws Error(kInvalidGrid) unless num_nodes >= 8 and 0.5 < span < 1.
void validate(const GridSpec& grid);

// Value functions of one schedule, built under zero drift. Index conventions
// follow the maturities: f[i] for i = 0..n, the per-maturity maps at
// index i - 1 for maturity i = 1..n.
struct ValueFunctionTable {
  std::vector<MonotonePLF> f;          // f_0 .. f_n, f_n = Id
  std::vector<MonotonePLF> f_inverse;  // f_0^{-1} .. f_n^{-1}
  std::vector<MonotonePLF> g;          // g_i = (f_i^{-1} + h_i)^{-1}: X_i -> Y_i
  std::vector<MonotonePLF> x_after;    // f_i^{-1} o g_i: X_i -> X'_i
  std::vector<MonotonePLF> payoffs;    // h_i
  std::vector<std::vector<double>> nodes;  // interpolation nodes of f_0 .. f_{n-1}
  GridSpec grid;

  std::size_t size() const { return g.size(); }
};

ValueFunctionTable build_value_functions(const ContractSchedule& schedule,
                                         const GridSpec& grid);

// f_0(gross_equity). Throws Error(kNegativeEquity) for negative input.
double net_equity(const ValueFunctionTable& table, double gross_equity);

// One path of the forward recursion with shocks drawn under drift mu.
PathSample simulate_path(const ValueFunctionTable& table, const ContractSchedule& schedule,
                         double mu, NormalStream& stream);

struct McEstimates {
  std::vector<Estimate> payoffs;     // E[h_i(Y_i)], i = 1..n
  std::vector<Estimate> net_equity;  // E[Y_i], i = 0..n
  Estimate total_payoff;             // E[sum_i h_i(Y_i)]
  std::size_t num_paths = 0;

  const Estimate& terminal_net_equity() const { return net_equity.back(); }
};

// Path p uses NormalStream(seed, p). Paths are accumulated in fixed-size
// blocks merged in index order, so the result is bit-identical for any
// thread count. threads = 0 uses the hardware concurrency.
McEstimates estimate_values_mc(const ValueFunctionTable& table,
                               const ContractSchedule& schedule, double mu,
                               std::size_t num_paths, std::uint64_t seed,
                               unsigned threads = 0);

// w_j with w_j(X_0) = E[h_j(Y_j)] under drift mu, one per maturity.
std::vector<MonotonePLF> contract_value_functions(const ValueFunctionTable& table,
                                                  const ContractSchedule& schedule,
                                                  double mu, const GridSpec& grid);

// Net equity and contract values in one call.
ValuationResult valuate(const ContractSchedule& schedule, const GridSpec& grid,
                        double mu = 0.0);

}  // namespace ebdo

#endif  // EBDO_DISCRETE_HPP_
