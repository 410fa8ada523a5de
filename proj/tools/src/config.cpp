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

#include "ebdo/cli/config.hpp"

#include <fstream>
#include <sstream>

namespace ebdo::cli {
namespace {

using nlohmann::json;

const json& member(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(path + key, "missing");
  return *it;
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "expected a number, got " + std::string(v.type_name()));
  return v.get<double>();
}

PayoffSpec parse_payoff(const json& p, const std::string& path) {
  if (!p.is_object()) throw ConfigError(path, "expected an object");
  const json& kind = member(p, path + ".", "kind");
  if (!kind.is_string()) throw ConfigError(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "call") {
    CallPayoff call;
    call.alpha = number(member(p, path + ".", "alpha"), path + ".alpha");
    if (p.contains("strike")) call.strike = number(p["strike"], path + ".strike");
    return call;
  }
  if (k == "plf") {
    PointsPayoff plf;
    const json& points = member(p, path + ".", "points");
    if (!points.is_array()) throw ConfigError(path + ".points", "expected an array");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::string field = path + ".points[" + std::to_string(i) + "]";
      const json& pt = points[i];
      if (!pt.is_array() || pt.size() != 2) throw ConfigError(field, "expected [x, y]");
      plf.points.emplace_back(number(pt[0], field + "[0]"), number(pt[1], field + "[1]"));
    }
    plf.tail_slope = number(member(p, path + ".", "tail_slope"), path + ".tail_slope");
    return plf;
  }
  throw ConfigError(path + ".kind", "unknown payoff kind '" + k + "'");
}

}  // namespace

ContractSchedule parse_schedule(const json& doc) {
  if (!doc.is_object()) throw ConfigError("$", "expected a JSON object");
  const json& schema = member(doc, "", "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchema) {
    throw ConfigError("schema", std::string("expected \"") + kSchema + "\"");
  }
  ContractSchedule s;
  s.gross_equity = number(member(doc, "", "gross_equity"), "gross_equity");
  s.sigma = number(member(doc, "", "sigma"), "sigma");
  const json& contracts = member(doc, "", "contracts");
  if (!contracts.is_array()) throw ConfigError("contracts", "expected an array");
  for (std::size_t i = 0; i < contracts.size(); ++i) {
    const std::string path = "contracts[" + std::to_string(i) + "]";
    const json& c = contracts[i];
    if (!c.is_object()) throw ConfigError(path, "expected an object");
    Contract contract;
    contract.maturity = number(member(c, path + ".", "maturity"), path + ".maturity");
    contract.payoff = parse_payoff(member(c, path + ".", "payoff"), path + ".payoff");
    s.contracts.push_back(std::move(contract));
  }
  return s;
}

ContractSchedule parse_schedule_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_schedule(doc);
}

ContractSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_schedule_text(buf.str());
}

json to_json(const ContractSchedule& schedule) {
  json contracts = json::array();
  for (const auto& c : schedule.contracts) {
    json payoff;
    if (const auto* call = std::get_if<CallPayoff>(&c.payoff)) {
      payoff = {{"kind", "call"}, {"alpha", call->alpha}, {"strike", call->strike}};
    } else {
      const auto& plf = std::get<PointsPayoff>(c.payoff);
      json points = json::array();
      for (const auto& [x, y] : plf.points) points.push_back({x, y});
      payoff = {{"kind", "plf"}, {"points", points}, {"tail_slope", plf.tail_slope}};
    }
    contracts.push_back({{"maturity", c.maturity}, {"payoff", payoff}});
  }
  return {{"schema", kSchema},
          {"gross_equity", schedule.gross_equity},
          {"sigma", schedule.sigma},
          {"contracts", contracts}};
}

}  // namespace ebdo::cli
