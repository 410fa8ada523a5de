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

#include <random>

#include "doctest.h"
#include "ebdo/error.hpp"
#include "ebdo/plf.hpp"
#include "oracles.hpp"

using ebdo::MonotonePLF;

namespace {

MonotonePLF two_knot(double y1, double tail) { return MonotonePLF({0.0, 1.0}, {0.0, y1}, tail); }

std::vector<double> random_points(std::mt19937_64& rng, int count, double hi = 150.0) {
  std::uniform_real_distribution<double> u(0.0, hi);
  std::vector<double> xs(count);
  for (auto& x : xs) x = u(rng);
  return xs;
}

}  // namespace

TEST_CASE("eval interpolates and extrapolates") {
  CHECK(two_knot(2.0, 2.0)(0.5) == 1.0);
  CHECK(two_knot(2.0, 3.0)(2.0) == 5.0);
  CHECK(two_knot(2.0, 3.0)(0.0) == 0.0);
  CHECK(two_knot(2.0, 3.0)(1.0) == 2.0);
  CHECK(MonotonePLF::call(0.5, 10.0)(30.0) == 10.0);
  CHECK(MonotonePLF::call(0.5, 10.0)(5.0) == 0.0);
}

TEST_CASE("eval rejects negative arguments") {
  try {
    (void)MonotonePLF::identity()(-1.0);
    FAIL("expected an error");
  } catch (const ebdo::Error& e) {
    CHECK(e.code() == ebdo::ErrorCode::kNegativeArgument);
  }
}

TEST_CASE("construction enforces the invariants") {
  CHECK_THROWS_AS(MonotonePLF({0.0, 1.0}, {1.0, 2.0}, 1.0), ebdo::Error);   // f(0) != 0
  CHECK_THROWS_AS(MonotonePLF({0.5, 1.0}, {0.0, 2.0}, 1.0), ebdo::Error);   // starts after 0
  CHECK_THROWS_AS(MonotonePLF({0.0, 1.0}, {0.0, -1.0}, 1.0), ebdo::Error);  // decreasing
  CHECK_THROWS_AS(MonotonePLF({0.0, 1.0, 1.0}, {0.0, 1.0, 2.0}, 1.0), ebdo::Error);
  CHECK_THROWS_AS(MonotonePLF({0.0}, {0.0}, -0.5), ebdo::Error);
}

TEST_CASE("add") {
  const MonotonePLF id = MonotonePLF::identity();
  const MonotonePLF twice = add(id, id);
  CHECK(twice.tail_slope() == 2.0);
  CHECK(twice(7.0) == 14.0);

  std::mt19937_64 rng(11);
  const MonotonePLF f = oracle::random_plf(rng, false);
  CHECK(add(f, MonotonePLF::zero()) == f);

  const MonotonePLF a({0.0, 1.0}, {0.0, 1.0}, 1.0);
  const MonotonePLF b({0.0, 2.0}, {0.0, 0.0}, 1.0);
  const MonotonePLF sum = add(a, b);
  CHECK(std::vector<double>(sum.knots().begin(), sum.knots().end()) ==
        std::vector<double>{0.0, 1.0, 2.0});
  CHECK(std::vector<double>(sum.values().begin(), sum.values().end()) ==
        std::vector<double>{0.0, 1.0, 2.0});
  for (double x : random_points(rng, 50)) CHECK(sum(x) == doctest::Approx(a(x) + b(x)).epsilon(1e-15));
}

TEST_CASE("add merges near-coincident knots keeping the left one") {
  const MonotonePLF a({0.0, 1.0}, {0.0, 1.0}, 1.0);
  const MonotonePLF b({0.0, 1.0 + 1e-16}, {0.0, 0.0}, 1.0);
  const MonotonePLF sum = add(a, b);
  REQUIRE(sum.size() == 2);
  CHECK(sum.knots()[1] == 1.0);
}

TEST_CASE("invert") {
  const MonotonePLF inv = invert(two_knot(2.0, 2.0));
  CHECK(std::vector<double>(inv.knots().begin(), inv.knots().end()) ==
        std::vector<double>{0.0, 2.0});
  CHECK(std::vector<double>(inv.values().begin(), inv.values().end()) ==
        std::vector<double>{0.0, 1.0});
  CHECK(inv.tail_slope() == 0.5);
  CHECK(invert(MonotonePLF::identity()) == MonotonePLF::identity());
}

TEST_CASE("invert requires strict monotonicity") {
  try {
    (void)invert(MonotonePLF::call(1.0, 50.0));
    FAIL("expected an error");
  } catch (const ebdo::Error& e) {
    CHECK(e.code() == ebdo::ErrorCode::kNotStrictlyIncreasing);
  }
  CHECK_THROWS_AS((void)invert(MonotonePLF::zero()), ebdo::Error);
}

TEST_CASE("property: invert is a bit-exact involution and a pointwise inverse") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const MonotonePLF f = oracle::random_plf(rng, true);
    const MonotonePLF inv = invert(f);
    CHECK(invert(inv) == f);
    for (double x : random_points(rng, 100, 400.0)) {
      CHECK(std::abs(f(inv(x)) - x) <= 1e-12 * std::max(1.0, x));
    }
  }
}

TEST_CASE("compose") {
  std::mt19937_64 rng(7);
  const MonotonePLF f = oracle::random_plf(rng, false);
  const MonotonePLF g = oracle::random_plf(rng, false);
  CHECK(compose(f, MonotonePLF::identity()) == f);
  CHECK(compose(MonotonePLF::identity(), g) == g);
}

TEST_CASE("property: compose is pointwise nested evaluation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const MonotonePLF outer = oracle::random_plf(rng, false);
    const MonotonePLF inner = oracle::random_plf(rng, false);
    const MonotonePLF h = compose(outer, inner);
    CHECK(h.size() <= outer.size() + inner.size());
    for (std::size_t k = 0; k < inner.size(); ++k) {
      const double x = inner.knots()[k];
      CHECK(h(x) == outer(inner(x)));
    }
    for (double x : random_points(rng, 100)) {
      CHECK(oracle::scaled_error(h(x), outer(inner(x))) <= 1e-12);
    }
  }
}

TEST_CASE("property: add is pointwise, knot counts grow additively") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MonotonePLF f = oracle::random_plf(rng, trial % 2 == 0);
    const MonotonePLF g = oracle::random_plf(rng, false);
    const MonotonePLF s = add(f, g);
    CHECK(s.size() <= f.size() + g.size());
    if (trial % 2 == 0) CHECK(s.is_strictly_increasing());
    for (double x : random_points(rng, 100)) CHECK(oracle::scaled_error(s(x), f(x) + g(x)) <= 1e-12);
  }
}

TEST_CASE("payoff_transfer") {
  const MonotonePLF id = MonotonePLF::identity();
  // y + y = x
  const MonotonePLF half = payoff_transfer(id, MonotonePLF::linear(1.0));
  CHECK(half(100.0) == 50.0);
  CHECK(half.tail_slope() == 0.5);

  std::mt19937_64 rng(3);
  const MonotonePLF f = oracle::random_plf(rng, true);
  CHECK(payoff_transfer(f, MonotonePLF::zero()) == f);

  // y + (y - 50)^+ = x
  const MonotonePLF kinked = payoff_transfer(id, MonotonePLF::call(1.0, 50.0));
  CHECK(kinked(30.0) == 30.0);
  CHECK(kinked(50.0) == 50.0);
  CHECK(kinked(100.0) == 75.0);
}

TEST_CASE("property: payoff_transfer solves f^{-1}(y) + h(y) = x") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    MonotonePLF f = oracle::random_plf(rng, true);
    // Slopes in (0, 1] as the value functions have.
    f = compose(MonotonePLF::linear(1.0 / (1.0 + f.max_slope())), f);
    const MonotonePLF h = oracle::random_plf(rng, false);
    const MonotonePLF g = payoff_transfer(f, h);
    CHECK(g.is_strictly_increasing());
    CHECK(g(0.0) == 0.0);
    const MonotonePLF f_inv = invert(f);
    for (double x : random_points(rng, 40, 300.0)) {
      const double y = oracle::solve_increasing([&](double v) { return f_inv(v) + h(v); }, x);
      CHECK(oracle::scaled_error(g(x), y) <= 1e-9);
      CHECK(g(x) <= x * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("scale_argument and interpolate") {
  const MonotonePLF f = MonotonePLF::call(2.0, 10.0);
  const MonotonePLF s = scale_argument(f, 2.0);
  CHECK(s(10.0) == f(20.0));
  CHECK(s(3.0) == f(6.0));
  const std::vector<double> xs{0.0, 1.0, 3.0};
  const std::vector<double> ys{0.0, 1.0, 2.0};
  const MonotonePLF p = ebdo::interpolate(xs, ys, 0.25);
  CHECK(p(2.0) == 1.5);
  CHECK(p(7.0) == 3.0);
}
