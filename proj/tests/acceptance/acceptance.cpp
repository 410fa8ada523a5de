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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any selected criterion fails. `--only N` runs a single one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "ebdo/continuous.hpp"
#include "ebdo/discrete.hpp"
#include "oracles.hpp"
#include "run_cli.hpp"

using namespace ebdo;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "NOT ") + what;
  }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

ContractSchedule single_call(double x0, double sigma, double maturity, double alpha,
                             double strike) {
  ContractSchedule s;
  s.gross_equity = x0;
  s.sigma = sigma;
  s.contracts = {{maturity, CallPayoff{alpha, strike}}};
  return s;
}

ContractSchedule mixed_schedule() {
  ContractSchedule s;
  s.gross_equity = 100.0;
  s.sigma = 0.3;
  s.contracts = {{0.5, CallPayoff{0.2, 80.0}},
                 {1.0, CallPayoff{0.3, 100.0}},
                 {1.5, CallPayoff{0.1, 0.0}},
                 {2.0, CallPayoff{0.5, 120.0}}};
  return s;
}

const LinearRateModel kBridge{1.0, 1.0, 0.2, 100.0};

Outcome criterion_1() {
  Outcome o;
  double worst_y = 0.0, worst_h = 0.0;
  for (double sigma : {0.0, 0.2, 0.8}) {
    for (double maturity : {0.0, 1.0, 5.0}) {
      const auto s = single_call(100.0, sigma, maturity, 1.0, 0.0);
      const auto r = valuate(s, GridSpec{}, 0.0);
      worst_y = std::max(worst_y, rel(r.net_equity, 50.0));
      worst_h = std::max(worst_h, rel(r.contract_values[0], 100.0 * 1.0 / 2.0));
    }
  }
  o.require(worst_y <= 1e-10, fmt("max rel err Y_0 %.3g <= 1e-10", worst_y));
  o.require(worst_h <= 1e-10, fmt("max rel err payoff %.3g <= 1e-10", worst_h));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  ContractSchedule s;
  s.gross_equity = 100.0;
  s.sigma = 0.2;
  s.contracts = {{1.0, CallPayoff{0.5, 0.0}}, {2.0, CallPayoff{1.0, 0.0}},
                 {3.0, CallPayoff{0.25, 0.0}}};
  const double y0 = net_equity(build_value_functions(s, GridSpec{}), 100.0);
  const double product = 100.0 / (1.5 * 2.0 * 1.25);
  const double additive = 100.0 / (1.0 + 0.5 + 1.0 + 0.25);
  o.require(rel(y0, product) <= 1e-8,
            fmt("Y_0 = %.12g vs X_0/3.75 = %.12g within 1e-8 (rel err %.3g)", y0, product,
                rel(y0, product)));
  // Informational: the value the transfer recursion implies.
  std::printf("[INFO] criterion 2: X_0/(1+sum alpha) = %.12g, rel err %.3g\n", additive,
              rel(y0, additive));
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const auto s = mixed_schedule();
  const auto r = valuate(s, GridSpec{}, 0.0);
  double total = r.net_equity;
  for (double v : r.contract_values) total += v;
  o.require(rel(total, 100.0) <= 1e-6, fmt("deterministic rel residual %.3g <= 1e-6",
                                           rel(total, 100.0)));
  const auto table = build_value_functions(s, GridSpec{});
  const auto mc = estimate_values_mc(table, s, 0.0, 100000, 42);
  const double gap = std::abs(r.net_equity + mc.total_payoff.mean - 100.0);
  o.require(gap <= 4.0 * mc.total_payoff.std_error,
            fmt("MC gap %.4g <= 4 x stderr %.4g", gap, mc.total_payoff.std_error));
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto s = mixed_schedule();
  const auto table = build_value_functions(s, GridSpec{});
  const double y0 = net_equity(table, s.gross_equity);
  const auto mc = estimate_values_mc(table, s, 0.0, 100000, 42);
  double worst = 0.0;
  bool ok = true;
  for (std::size_t i = 1; i < mc.net_equity.size(); ++i) {
    const auto& e = mc.net_equity[i];
    const double z = e.std_error > 0.0 ? std::abs(e.mean - y0) / e.std_error : 0.0;
    worst = std::max(worst, z);
    ok = ok && std::abs(e.mean - y0) <= 4.0 * e.std_error;
  }
  o.require(ok, fmt("max |mean(Y_i) - Y_0| / stderr = %.3g <= 4", worst));
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const auto s = single_call(100.0, 0.2, 1.0, 1.0, 50.0);
  const double y0 = net_equity(build_value_functions(s, GridSpec{}), 100.0);
  // x = y + (y - 50)^+ inverts to y = x below 50 and (x + 50) / 2 above.
  auto transfer = [](double x) { return x <= 50.0 ? x : 0.5 * (x + 50.0); };
  const auto mc = oracle::lognormal_mc(transfer, 100.0, -0.5 * 0.04, 0.2, 1000000, 20260101);
  const double gap = std::abs(y0 - mc.mean);
  o.require(gap <= 4.0 * mc.std_error,
            fmt("f_0(100) = %.10g vs MC %.10g, gap %.3g", y0, mc.mean, gap) +
                fmt(" <= 4 x %.3g", mc.std_error));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const double y0 = decoupling_linear(0.0, 100.0, kBridge);
  o.require(y0 == 50.0, fmt("u(0, 100) = %.17g == 50", y0));
  const double paid = ebdo_value_interval(0.0, kBridge.horizon, 0.0, kBridge);
  o.require(rel(paid + y0, 100.0) <= 1e-12,
            fmt("conservation rel err %.3g <= 1e-12", rel(paid + y0, 100.0)));
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const double closed = decoupling_linear(0.0, kBridge.gross_equity, kBridge);
  std::vector<double> errors;
  std::string table;
  for (std::size_t n : {4u, 16u, 64u, 128u}) {
    const auto s = discretize_rate(kBridge, n);
    const double y0 = net_equity(build_value_functions(s, GridSpec{}), kBridge.gross_equity);
    errors.push_back(rel(y0, closed));
    table += fmt(" n=%.0f:%.3g", static_cast<double>(n), errors.back());
  }
  std::printf("[INFO] criterion 7: relative errors%s\n", table.c_str());
  o.require(errors[3] < 1e-2, fmt("err(128) = %.3g < 1e-2", errors[3]));
  o.require(errors[2] <= errors[0],
            fmt("err(64) = %.3g <= err(4) = %.3g", errors[2], errors[0]));
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const double lower = std::exp(-kBridge.gamma * kBridge.horizon);
  double lo = 1e300, hi = -1e300;
  for (std::size_t n : {4u, 16u, 64u, 128u}) {
    const auto table = build_value_functions(discretize_rate(kBridge, n), GridSpec{});
    const MonotonePLF& f0 = table.f[0];
    for (std::size_t k = 0; k < f0.num_segments(); ++k) {
      lo = std::min(lo, f0.segment_slope(k));
      hi = std::max(hi, f0.segment_slope(k));
    }
  }
  o.require(lo >= lower - 0.01 && hi <= 1.0 + 1e-12,
            fmt("fitted slopes in [%.6g, %.17g] within [e^-gT - 0.01, 1 + 1e-12]", lo, hi));
  bool analytic = true;
  for (int k = 0; k <= 1000; ++k) {
    const double t = kBridge.horizon * k / 1000.0;
    const double slope = decoupling_slope(t, kBridge);
    analytic = analytic && slope >= lower && slope <= 1.0;
  }
  o.require(analytic, "analytic slopes in [e^-gT, 1] on a 1001-point t-grid");
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const LinearRateModel a{1.0, 1.0, 0.1, 100.0};
  const LinearRateModel b{1.0, 1.0, 0.4, 100.0};
  bool exact = true;
  for (double mu : {-0.2, 0.0, 0.05, 0.3}) {
    for (double s : {0.0, 0.3, 0.7, 1.0}) {
      exact = exact && expected_gross_equity(s, mu, a) == expected_gross_equity(s, mu, b);
      exact = exact && ebdo_value_interval(0.0, s, mu, a) == ebdo_value_interval(0.0, s, mu, b);
    }
  }
  o.require(exact, "closed forms bit-identical across sigma");
  const std::vector<double> times{0.25, 0.5, 0.75, 1.0};
  double worst = 0.0;
  for (const auto& m : {a, b}) {
    for (double mu : {0.0, 0.1}) {
      const auto mc = estimate_gross_equity_mc(m, mu, times, 100000, 9);
      for (std::size_t k = 0; k < times.size(); ++k) {
        worst = std::max(worst, std::abs(mc[k].mean - expected_gross_equity(times[k], mu, m)) /
                                    mc[k].std_error);
      }
    }
  }
  o.require(worst <= 4.0, fmt("MC max z-score %.3g <= 4", worst));
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const std::string args =
      "simulate " + testing::data_file("mixed_calls.json") + " --seed 1234 --paths 100000";
  std::vector<std::string> outputs;
  bool ran = true;
  for (const char* env : {"EBDO_THREADS=1", "EBDO_THREADS=1", "EBDO_THREADS=8",
                          "EBDO_THREADS=8"}) {
    const auto r = testing::run_cli(args, env);
    ran = ran && r.exit_code == 0 && !r.out.empty();
    outputs.push_back(r.out);
  }
  o.require(ran, "all runs exit 0");
  o.require(outputs[0] == outputs[1], "byte-identical across runs (1 thread)");
  o.require(outputs[2] == outputs[3], "byte-identical across runs (8 threads)");
  o.require(outputs[0] == outputs[2], "byte-identical across EBDO_THREADS 1 and 8");
  return o;
}

struct Criterion {
  int id;
  double budget_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, 1.0, criterion_1},   {2, 5.0, criterion_2},    {3, 30.0, criterion_3},
      {4, 30.0, criterion_4},  {5, 30.0, criterion_5},   {6, 0.0, criterion_6},
      {7, 120.0, criterion_7}, {8, 0.0, criterion_8},    {9, 0.0, criterion_9},
      {10, 0.0, criterion_10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0) {
      o.require(seconds < c.budget_seconds,
                fmt("runtime %.2f s < %.0f s", seconds, c.budget_seconds));
    } else {
      o.detail += fmt("; runtime %.2f s", seconds);
    }
    std::printf("[%s] criterion %d: %s\n", o.pass ? "PASS" : "FAIL", c.id, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
