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

#include <benchmark/benchmark.h>

#include "ebdo/continuous.hpp"
#include "ebdo/discrete.hpp"
#include "ebdo/gauss.hpp"

namespace {

ebdo::ContractSchedule mixed_schedule() {
  ebdo::ContractSchedule s;
  s.gross_equity = 100.0;
  s.sigma = 0.3;
  s.contracts = {{0.5, ebdo::CallPayoff{0.2, 80.0}},
                 {1.0, ebdo::CallPayoff{0.3, 100.0}},
                 {1.5, ebdo::CallPayoff{0.1, 0.0}},
                 {2.0, ebdo::CallPayoff{0.5, 120.0}}};
  return s;
}

void BM_ExpectedPlf(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < nodes; ++k) {
    const double x = 200.0 * static_cast<double>(k) / static_cast<double>(nodes - 1);
    xs.push_back(x);
    ys.push_back(x / (1.0 + 0.002 * x));
  }
  const ebdo::MonotonePLF g(xs, ys, 0.5);
  const auto law = ebdo::law_for_period(0.0, 0.2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ebdo::expected_plf(g, 100.0, law));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpectedPlf)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_BuildValueFunctions(benchmark::State& state) {
  const auto schedule = mixed_schedule();
  ebdo::GridSpec grid;
  grid.num_nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ebdo::build_value_functions(schedule, grid));
}
BENCHMARK(BM_BuildValueFunctions)->Arg(256)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_BridgeNetEquity(benchmark::State& state) {
  const ebdo::LinearRateModel model{1.0, 1.0, 0.2, 100.0};
  const auto schedule = ebdo::discretize_rate(model, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto table = ebdo::build_value_functions(schedule, ebdo::GridSpec{});
    benchmark::DoNotOptimize(ebdo::net_equity(table, model.gross_equity));
  }
}
BENCHMARK(BM_BridgeNetEquity)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const auto schedule = mixed_schedule();
  const auto table = ebdo::build_value_functions(schedule, ebdo::GridSpec{});
  const auto paths = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ebdo::estimate_values_mc(table, schedule, 0.0, paths, 42, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
