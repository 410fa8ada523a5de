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

#ifndef EBDO_ERROR_HPP_
#define EBDO_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ebdo {

enum class ErrorCode {
  kEmptySchedule,
  kNonIncreasingMaturities,
  kNegativeEquity,
  kNegativeVolatility,
  kPayoffNonzeroAtZero,
  kDecreasingPayoff,
  kInvalidPayoff,
  kNegativeDuration,
  kNegativeArgument,
  kInvalidFunction,
  kNotStrictlyIncreasing,
  kInvalidGrid,
  kGridTooCoarse,
  kTimeOutOfRange,
  kBadInterval,
  kUnknownContract,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All engine failures are reported through this type; code() identifies the
// violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace ebdo

#endif  // EBDO_ERROR_HPP_
