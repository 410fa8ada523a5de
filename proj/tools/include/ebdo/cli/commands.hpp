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

#ifndef EBDO_CLI_COMMANDS_HPP_
#define EBDO_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ebdo/discrete.hpp"

namespace ebdo::cli {

// POSIX exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitGridTooCoarse = 2;

struct ValueOptions {
  GridSpec grid;
  double mu = 0.0;
};

struct SimulateOptions {
  GridSpec grid;
  double mu = 0.0;
  std::size_t paths = 100000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::optional<std::string> dump_paths;  // per-path CSV
};

struct PriceOptions {
  GridSpec grid;
  std::size_t contract = 1;  // 1-based maturity index
  double mu = 0.0;
};

struct ConvergeOptions {
  double gamma = 1.0;
  double horizon = 1.0;
  double sigma = 0.2;
  double x0 = 100.0;
  std::vector<std::size_t> levels{1, 4, 16, 64, 128};
  GridSpec grid;
};

// Each command writes its report to out and diagnostics to err, and returns
// the process exit code.
int cmd_value(const std::string& config_path, const ValueOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_simulate(const std::string& config_path, const SimulateOptions& options,
                 std::ostream& out, std::ostream& err);
int cmd_price(const std::string& config_path, const PriceOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_converge(const ConvergeOptions& options, std::ostream& out, std::ostream& err);

// Parses EBDO_THREADS; 0 (hardware concurrency) when unset or invalid.
unsigned threads_from_env();

}  // namespace ebdo::cli

#endif  // EBDO_CLI_COMMANDS_HPP_
