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

#ifndef EBDO_CLI_CONFIG_HPP_
#define EBDO_CLI_CONFIG_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ebdo/model.hpp"

namespace ebdo::cli {

inline constexpr const char* kSchema = "ebdo/1";

// Malformed or missing input; field() is the JSON path of the offending
// entry, e.g. "contracts[2].payoff.alpha".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Structural parse only; call ebdo::validate() for the model conditions.
ContractSchedule parse_schedule(const nlohmann::json& doc);
ContractSchedule parse_schedule_text(const std::string& text);
ContractSchedule load_schedule(const std::string& path);

nlohmann::json to_json(const ContractSchedule& schedule);

}  // namespace ebdo::cli

#endif  // EBDO_CLI_CONFIG_HPP_
