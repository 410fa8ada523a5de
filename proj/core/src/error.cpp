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

#include "ebdo/error.hpp"

namespace ebdo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySchedule: return "EmptySchedule";
    case ErrorCode::kNonIncreasingMaturities: return "NonIncreasingMaturities";
    case ErrorCode::kNegativeEquity: return "NegativeEquity";
    case ErrorCode::kNegativeVolatility: return "NegativeVolatility";
    case ErrorCode::kPayoffNonzeroAtZero: return "PayoffNonzeroAtZero";
    case ErrorCode::kDecreasingPayoff: return "DecreasingPayoff";
    case ErrorCode::kInvalidPayoff: return "InvalidPayoff";
    case ErrorCode::kNegativeDuration: return "NegativeDuration";
    case ErrorCode::kNegativeArgument: return "NegativeArgument";
    case ErrorCode::kInvalidFunction: return "InvalidFunction";
    case ErrorCode::kNotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kTimeOutOfRange: return "TimeOutOfRange";
    case ErrorCode::kBadInterval: return "BadInterval";
    case ErrorCode::kUnknownContract: return "UnknownContract";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ebdo
