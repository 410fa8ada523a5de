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

#include "ebdo/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ebdo/cli/config.hpp"
#include "ebdo/cli/report.hpp"
#include "ebdo/continuous.hpp"
#include "ebdo/error.hpp"

namespace ebdo::cli {
namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    fn();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kGridTooCoarse ? kExitGridTooCoarse : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

ContractSchedule load_valid(const std::string& path) {
  ContractSchedule schedule = load_schedule(path);
  validate(schedule);
  return schedule;
}

std::vector<double> maturities(const ContractSchedule& schedule) {
  std::vector<double> out;
  for (const auto& c : schedule.contracts) out.push_back(c.maturity);
  return out;
}

void write_grid(JsonWriter& json, const GridSpec& grid, const ValueFunctionTable& table) {
  std::vector<std::size_t> counts;
  for (const auto& stage : table.nodes) counts.push_back(stage.size());
  const MonotonePLF& f0 = table.f.front();
  json.key("grid").begin_object();
  json.field("num_nodes", grid.num_nodes);
  json.field("quantile_span", grid.quantile_span);
  json.key("stage_nodes").array(counts);
  json.field("f0_knots", f0.size());
  json.field("f0_min_slope", f0.min_slope());
  json.field("f0_max_slope", f0.max_slope());
  json.end_object();
}

}  // namespace

unsigned threads_from_env() {
  const char* v = std::getenv("EBDO_THREADS");
  if (v == nullptr) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1) return 0;
  return static_cast<unsigned>(n);
}

int cmd_value(const std::string& config_path, const ValueOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const ContractSchedule schedule = load_valid(config_path);
    const ValueFunctionTable table = build_value_functions(schedule, options.grid);
    const double y0 = net_equity(table, schedule.gross_equity);
    const auto w = contract_value_functions(table, schedule, options.mu, options.grid);
    std::vector<double> values;
    double residual = schedule.gross_equity - y0;
    for (const auto& wj : w) {
      values.push_back(wj(schedule.gross_equity));
      residual -= values.back();
    }
    JsonWriter json(out);
    json.begin_object();
    json.field("schema", kSchema);
    json.field("command", "value");
    json.field("gross_equity", schedule.gross_equity);
    json.field("sigma", schedule.sigma);
    json.field("mu", options.mu);
    json.field("net_equity", y0);
    json.key("maturities").array(maturities(schedule));
    json.key("contract_values").array(values);
    json.field("conservation_residual", residual);
    write_grid(json, options.grid, table);
    json.end_object();
  });
}

int cmd_simulate(const std::string& config_path, const SimulateOptions& options,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ContractSchedule schedule = load_valid(config_path);
    require(options.paths >= 2, ErrorCode::kInvalidArgument, "--paths must be at least 2");
    const ValueFunctionTable table = build_value_functions(schedule, options.grid);
    const McEstimates mc =
        estimate_values_mc(table, schedule, options.mu, options.paths, options.seed,
                           options.threads);
    out << "maturity_index,T_i,estimate,stderr\n";
    for (std::size_t i = 0; i < mc.payoffs.size(); ++i) {
      out << (i + 1) << ',' << format_number(schedule.contracts[i].maturity) << ','
          << format_number(mc.payoffs[i].mean) << ',' << format_number(mc.payoffs[i].std_error)
          << '\n';
    }
    if (options.dump_paths) {
      std::ofstream dump(*options.dump_paths);
      require(static_cast<bool>(dump), ErrorCode::kInvalidArgument,
              "cannot write " + *options.dump_paths);
      dump << "path,i,T_i,Z,X,Y,X_after\n";
      for (std::size_t p = 0; p < options.paths; ++p) {
        NormalStream stream(options.seed, p);
        const PathSample s = simulate_path(table, schedule, options.mu, stream);
        for (std::size_t i = 0; i < s.x.size(); ++i) {
          dump << p << ',' << i << ','
               << format_number(i == 0 ? 0.0 : schedule.contracts[i - 1].maturity) << ','
               << format_number(i == 0 ? 1.0 : s.shocks[i - 1]) << ',' << format_number(s.x[i])
               << ',' << format_number(s.y[i]) << ',' << format_number(s.x_after[i]) << '\n';
        }
      }
    }
  });
}

int cmd_price(const std::string& config_path, const PriceOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const ContractSchedule schedule = load_valid(config_path);
    require(options.contract >= 1 && options.contract <= schedule.size(),
            ErrorCode::kUnknownContract,
            "contract " + std::to_string(options.contract) + " (schedule has " +
                std::to_string(schedule.size()) + ")");
    const ValueFunctionTable table = build_value_functions(schedule, options.grid);
    const std::size_t j = options.contract - 1;
    const double neutral =
        contract_value_functions(table, schedule, 0.0, options.grid)[j](schedule.gross_equity);
    const double market =
        options.mu == 0.0
            ? neutral
            : contract_value_functions(table, schedule, options.mu, options.grid)[j](
                  schedule.gross_equity);
    JsonWriter json(out);
    json.begin_object();
    json.field("schema", kSchema);
    json.field("command", "price");
    json.field("contract", options.contract);
    json.field("maturity", schedule.contracts[j].maturity);
    json.field("mu", options.mu);
    json.field("risk_neutral_price", neutral);
    json.field("market_price", market);
    json.end_object();
  });
}

int cmd_converge(const ConvergeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LinearRateModel model{options.gamma, options.horizon, options.sigma, options.x0};
    validate(model);
    require(!options.levels.empty(), ErrorCode::kInvalidArgument, "no levels given");
    const double exact = decoupling_linear(0.0, model.gross_equity, model);
    out << "n,discrete_y0,closed_form_y0,relative_error\n";
    for (std::size_t n : options.levels) {
      require(n >= 1, ErrorCode::kInvalidArgument, "levels must be positive");
      const ContractSchedule schedule = discretize_rate(model, n);
      const ValueFunctionTable table = build_value_functions(schedule, options.grid);
      const double y0 = net_equity(table, model.gross_equity);
      const double rel = exact == 0.0 ? std::abs(y0) : std::abs(y0 - exact) / exact;
      out << n << ',' << format_number(y0) << ',' << format_number(exact) << ','
          << format_scientific(rel) << '\n';
    }
  });
}

}  // namespace ebdo::cli
