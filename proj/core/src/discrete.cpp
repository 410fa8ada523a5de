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

#include "ebdo/discrete.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "ebdo/error.hpp"
#include "ebdo/gauss.hpp"

namespace ebdo {
namespace {

// Minimum half-width, in log space, of the log-spaced node range.
constexpr double kMinLogHalfWidth = 0.5;

// Nodes closer than this (relative) are merged.
constexpr double kNodeMergeTolerance = 1e-12;

// Paths per accumulation block; fixed so merging order never depends on
// the number of workers.
constexpr std::size_t kPathBlock = 1024;

// Relative dip tolerated in fitted contract values.
constexpr double kContractDipTolerance = 1e-10;

void sort_and_merge(std::vector<double>& nodes) {
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> out;
  out.reserve(nodes.size());
  for (double x : nodes) {
    if (out.empty()) {
      out.push_back(x);
    } else if (x - out.back() > kNodeMergeTolerance * std::max(x, out.back())) {
      out.push_back(x);
    }
  }
  nodes = std::move(out);
}

double grid_anchor(const GridSpec& grid, const ContractSchedule& schedule) {
  if (grid.anchor > 0.0) return grid.anchor;
  return schedule.gross_equity > 0.0 ? schedule.gross_equity : 1.0;
}

// {0} plus log-spaced nodes around the anchor covering the central
// quantile_span of the product of all shocks under drift mu.
std::vector<double> base_nodes(const ContractSchedule& schedule, const GridSpec& grid,
                               double mu) {
  const double horizon = schedule.contracts.back().maturity;
  const double sd = schedule.sigma * std::sqrt(horizon);
  const double centre = (mu - 0.5 * schedule.sigma * schedule.sigma) * horizon;
  const double z = std_normal_quantile(0.5 * (1.0 + grid.quantile_span));
  const double half_width = std::max(z * sd, kMinLogHalfWidth);
  const double anchor = grid_anchor(grid, schedule);

  std::vector<double> nodes;
  nodes.reserve(grid.num_nodes + 1);
  nodes.push_back(0.0);
  nodes.push_back(anchor);
  const std::size_t count = grid.num_nodes - 1;
  for (std::size_t k = 0; k < count; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(count - 1);
    nodes.push_back(anchor * std::exp(centre - half_width + 2.0 * half_width * u));
  }
  sort_and_merge(nodes);
  return nodes;
}

void append_finite_positive(std::vector<double>& nodes, const std::vector<double>& extra) {
  for (double x : extra) {
    if (std::isfinite(x) && x > 0.0) nodes.push_back(x);
  }
}

std::vector<double> expectations(const MonotonePLF& g, const std::vector<double>& nodes,
                                 const LogNormalLaw& law) {
  std::vector<double> values(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) values[k] = expected_plf(g, nodes[k], law);
  return values;
}

struct PathMoments {
  std::vector<RunningMoments> payoffs;
  std::vector<RunningMoments> net_equity;
  RunningMoments total;

  explicit PathMoments(std::size_t n) : payoffs(n), net_equity(n + 1) {}

  void merge(const PathMoments& other) {
    for (std::size_t i = 0; i < payoffs.size(); ++i) payoffs[i].merge(other.payoffs[i]);
    for (std::size_t i = 0; i < net_equity.size(); ++i) net_equity[i].merge(other.net_equity[i]);
    total.merge(other.total);
  }
};

}  // namespace

void validate(const GridSpec& grid) {
  require(grid.num_nodes >= 8, ErrorCode::kInvalidGrid, "grid needs at least 8 nodes");
  require(grid.quantile_span > 0.5 && grid.quantile_span < 1.0, ErrorCode::kInvalidGrid,
          "quantile span must lie in (0.5, 1)");
  require(std::isfinite(grid.anchor) && grid.anchor >= 0.0, ErrorCode::kInvalidGrid,
          "grid anchor must be nonnegative");
}

ValueFunctionTable build_value_functions(const ContractSchedule& schedule,
                                         const GridSpec& grid) {
  validate(schedule);
  validate(grid);
  const std::size_t n = schedule.size();

  ValueFunctionTable table;
  table.grid = grid;
  table.f.assign(n + 1, MonotonePLF::identity());
  table.f_inverse.assign(n + 1, MonotonePLF::identity());
  table.g.assign(n, MonotonePLF::identity());
  table.x_after.assign(n, MonotonePLF::identity());
  table.nodes.assign(n, {});
  for (const auto& c : schedule.contracts) table.payoffs.push_back(to_plf(c.payoff));

  const std::vector<double> base = base_nodes(schedule, grid, 0.0);
  // Kinks of the exact value functions, in X'_i coordinates of the stage
  // currently being built.
  std::vector<double> kinks;

  for (std::size_t i = n; i >= 1; --i) {
    const MonotonePLF& f_i = table.f[i];
    const MonotonePLF& h_i = table.payoffs[i - 1];
    const MonotonePLF& f_inv = table.f_inverse[i];
    MonotonePLF g_i = invert(add(f_inv, h_i));
    const LogNormalLaw law = law_for_period(0.0, schedule.sigma, schedule.period(i));
    const double median = std::exp(law.m);

    // Move kinks from X'_i to X_i coordinates, add the payoff kinks, then
    // map into X'_{i-1} coordinates through the median shock.
    std::vector<double> moved;
    moved.reserve(kinks.size() + h_i.size());
    for (double x : kinks) moved.push_back(x + h_i(f_i(x)));
    for (std::size_t k = 1; k < h_i.size(); ++k) {
      const double y = h_i.knots()[k];
      moved.push_back(f_inv(y) + h_i(y));
    }
    kinks.clear();
    for (double x : moved) kinks.push_back(x / median);

    std::vector<double> nodes = base;
    append_finite_positive(nodes, kinks);
    if (law.is_point_mass()) {
      std::vector<double> images(g_i.knots().begin(), g_i.knots().end());
      for (double& x : images) x /= median;
      append_finite_positive(nodes, images);
    }
    sort_and_merge(nodes);

    std::vector<double> values = expectations(g_i, nodes, law);
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      if (!(values[k] - values[k - 1] >= kSlopeEpsilon * (nodes[k] - nodes[k - 1]))) {
        fail(ErrorCode::kGridTooCoarse,
             "f_" + std::to_string(i - 1) + " not strictly increasing between nodes " +
                 std::to_string(nodes[k - 1]) + " and " + std::to_string(nodes[k]));
      }
    }
    // Linear tail of g_i carries over with factor E[Z_i] = 1.
    table.f[i - 1] = interpolate(nodes, values, g_i.tail_slope());
    table.f_inverse[i - 1] = invert(table.f[i - 1]);
    table.x_after[i - 1] = compose(f_inv, g_i);
    table.g[i - 1] = std::move(g_i);
    table.nodes[i - 1] = std::move(nodes);
  }
  return table;
}

double net_equity(const ValueFunctionTable& table, double gross_equity) {
  require(gross_equity >= 0.0, ErrorCode::kNegativeEquity,
          "gross equity " + std::to_string(gross_equity));
  return table.f[0](gross_equity);
}

PathSample simulate_path(const ValueFunctionTable& table, const ContractSchedule& schedule,
                         double mu, NormalStream& stream) {
  const std::size_t n = table.size();
  PathSample path;
  path.x.resize(n + 1);
  path.y.resize(n + 1);
  path.x_after.resize(n + 1);
  path.shocks.resize(n);
  path.x[0] = schedule.gross_equity;
  path.x_after[0] = schedule.gross_equity;
  path.y[0] = net_equity(table, schedule.gross_equity);
  for (std::size_t i = 1; i <= n; ++i) {
    const LogNormalLaw law = law_for_period(mu, schedule.sigma, schedule.period(i));
    const double normal = stream();
    const double z = law.is_point_mass() ? std::exp(law.m) : std::exp(law.m + law.s * normal);
    path.shocks[i - 1] = z;
    path.x[i] = path.x_after[i - 1] * z;
    path.y[i] = table.g[i - 1](path.x[i]);
    // f_i^{-1}(Y_i) equals X_i - h_i(Y_i) and is nonnegative by construction.
    path.x_after[i] = table.f_inverse[i](path.y[i]);
  }
  return path;
}

McEstimates estimate_values_mc(const ValueFunctionTable& table,
                               const ContractSchedule& schedule, double mu,
                               std::size_t num_paths, std::uint64_t seed, unsigned threads) {
  require(num_paths >= 2, ErrorCode::kInvalidArgument, "need at least 2 paths");
  const std::size_t n = table.size();
  const std::size_t num_blocks = (num_paths + kPathBlock - 1) / kPathBlock;
  std::vector<PathMoments> blocks(num_blocks, PathMoments(n));

  auto run_block = [&](std::size_t b) {
    PathMoments& acc = blocks[b];
    const std::size_t end = std::min(num_paths, (b + 1) * kPathBlock);
    for (std::size_t p = b * kPathBlock; p < end; ++p) {
      NormalStream stream(seed, p);
      const PathSample path = simulate_path(table, schedule, mu, stream);
      double total = 0.0;
      for (std::size_t i = 1; i <= n; ++i) {
        const double paid = table.payoffs[i - 1](path.y[i]);
        acc.payoffs[i - 1].push(paid);
        total += paid;
      }
      for (std::size_t i = 0; i <= n; ++i) acc.net_equity[i].push(path.y[i]);
      acc.total.push(total);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, num_blocks));
  if (threads <= 1) {
    for (std::size_t b = 0; b < num_blocks; ++b) run_block(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t b = next++; b < num_blocks; b = next++) run_block(b);
      });
    }
  }

  PathMoments merged(n);
  for (const auto& block : blocks) merged.merge(block);
  McEstimates out;
  out.num_paths = num_paths;
  for (const auto& m : merged.payoffs) out.payoffs.push_back(m.estimate());
  for (const auto& m : merged.net_equity) out.net_equity.push_back(m.estimate());
  out.total_payoff = merged.total.estimate();
  return out;
}

std::vector<MonotonePLF> contract_value_functions(const ValueFunctionTable& table,
                                                  const ContractSchedule& schedule,
                                                  double mu, const GridSpec& grid) {
  validate(grid);
  const std::size_t n = table.size();

  // Under zero drift the contract functions share the nodes of f, which
  // keeps f_i + sum_j w_{j,i} = Id exact on the grid.
  std::vector<std::vector<double>> nodes = table.nodes;
  if (mu != 0.0) {
    const std::vector<double> drifted = base_nodes(schedule, grid, mu);
    for (auto& stage : nodes) {
      stage.insert(stage.end(), drifted.begin(), drifted.end());
      sort_and_merge(stage);
    }
  }

  auto fit = [&](const MonotonePLF& integrand, std::size_t stage, std::size_t maturity) {
    const LogNormalLaw law = law_for_period(mu, schedule.sigma, schedule.period(maturity));
    const std::vector<double>& xs = nodes[stage];
    std::vector<double> values = expectations(integrand, xs, law);
    const double scale = std::max(1.0, std::abs(values.back()));
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (values[k] < values[k - 1]) {
        if (values[k - 1] - values[k] > kContractDipTolerance * scale) {
          fail(ErrorCode::kGridTooCoarse, "contract value for maturity " +
                                              std::to_string(maturity) +
                                              " decreases between grid nodes");
        }
        values[k] = values[k - 1];
      }
    }
    return interpolate(xs, values, integrand.tail_slope() * law.mean());
  };

  std::vector<MonotonePLF> out;
  out.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    MonotonePLF w = fit(compose(table.payoffs[j - 1], table.g[j - 1]), j - 1, j);
    for (std::size_t i = j - 1; i >= 1; --i) {
      w = fit(compose(w, table.x_after[i - 1]), i - 1, i);
    }
    out.push_back(std::move(w));
  }
  return out;
}

ValuationResult valuate(const ContractSchedule& schedule, const GridSpec& grid, double mu) {
  ValueFunctionTable table = build_value_functions(schedule, grid);
  ValuationResult result;
  result.net_equity = net_equity(table, schedule.gross_equity);
  const auto w = contract_value_functions(table, schedule, mu, grid);
  double residual = schedule.gross_equity - result.net_equity;
  for (const auto& wj : w) {
    const double v = wj(schedule.gross_equity);
    result.contract_values.push_back(v);
    residual -= v;
  }
  result.conservation_residual = residual;
  result.value_functions = std::move(table.f);
  return result;
}

}  // namespace ebdo
