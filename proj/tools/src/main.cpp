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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ebdo/cli/commands.hpp"

namespace {

void add_grid_flags(CLI::App* cmd, ebdo::GridSpec& grid) {
  cmd->add_option("--grid-points", grid.num_nodes, "Log-spaced interpolation nodes")
      ->capture_default_str();
  cmd->add_option("--quantile-span", grid.quantile_span,
                  "Central probability of the terminal shock covered by the grid")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Valuation of equity-based debt obligations"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::string config;
  ebdo::cli::ValueOptions value_opts;
  auto* value = app.add_subcommand("value", "Net equity and contract values (JSON)");
  value->add_option("config", config, "Schedule file")->required();
  value->add_option("--mu", value_opts.mu, "Drift for the contract values")->capture_default_str();
  value->add_option("--out", out_path, "Output file");
  add_grid_flags(value, value_opts.grid);

  ebdo::cli::SimulateOptions sim_opts;
  std::string dump;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo payoff estimates (CSV)");
  simulate->add_option("config", config, "Schedule file")->required();
  simulate->add_option("--mu", sim_opts.mu, "Simulation drift")->capture_default_str();
  simulate->add_option("--paths", sim_opts.paths, "Number of paths")->capture_default_str();
  simulate->add_option("--seed", sim_opts.seed, "Random seed")->capture_default_str();
  simulate->add_option("--dump-paths", dump, "Write every path to this CSV file");
  simulate->add_option("--out", out_path, "Output file");
  add_grid_flags(simulate, sim_opts.grid);

  ebdo::cli::PriceOptions price_opts;
  auto* price = app.add_subcommand("price", "Risk-neutral and market price of one contract");
  price->add_option("config", config, "Schedule file")->required();
  price->add_option("--contract", price_opts.contract, "1-based maturity index")
      ->capture_default_str();
  price->add_option("--mu", price_opts.mu, "Investor drift")->capture_default_str();
  price->add_option("--out", out_path, "Output file");
  add_grid_flags(price, price_opts.grid);

  ebdo::cli::ConvergeOptions conv_opts;
  auto* converge =
      app.add_subcommand("converge", "Lumped-maturity approximation of a linear payoff rate");
  converge->add_option("--gamma", conv_opts.gamma, "Payoff rate")->capture_default_str();
  converge->add_option("--horizon", conv_opts.horizon, "Horizon T")->capture_default_str();
  converge->add_option("--sigma", conv_opts.sigma, "Volatility")->capture_default_str();
  converge->add_option("--x0", conv_opts.x0, "Gross equity")->capture_default_str();
  converge->add_option("--levels", conv_opts.levels, "Numbers of maturities")
      ->delimiter(',')
      ->capture_default_str();
  converge->add_option("--out", out_path, "Output file");
  add_grid_flags(converge, conv_opts.grid);

  CLI11_PARSE(app, argc, argv);

  std::ostringstream report;
  int code = ebdo::cli::kExitOk;
  if (*value) {
    code = ebdo::cli::cmd_value(config, value_opts, report, std::cerr);
  } else if (*simulate) {
    sim_opts.threads = ebdo::cli::threads_from_env();
    if (!dump.empty()) sim_opts.dump_paths = dump;
    code = ebdo::cli::cmd_simulate(config, sim_opts, report, std::cerr);
  } else if (*price) {
    code = ebdo::cli::cmd_price(config, price_opts, report, std::cerr);
  } else if (*converge) {
    code = ebdo::cli::cmd_converge(conv_opts, report, std::cerr);
  }
  if (code != ebdo::cli::kExitOk) return code;

  if (out_path.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return ebdo::cli::kExitInputError;
    }
    file << report.str();
  }
  return ebdo::cli::kExitOk;
}
