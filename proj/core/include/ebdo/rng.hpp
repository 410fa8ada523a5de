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

#ifndef EBDO_RNG_HPP_
#define EBDO_RNG_HPP_

#include <array>
#include <cstdint>

namespace ebdo {

// Philox4x32-10 counter-based generator: a keyed bijection of 128-bit
// counters. Every (key, counter) pair yields an independent block, so
// streams can be split by counter without any shared state.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(Key key) : key_(key) {}
  explicit Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  Block operator()(Block counter) const;

 private:
  Key key_;
};

// Standard normal draws for one substream (seed, stream). Draw k depends only
// on (seed, stream, k), never on other streams or on thread scheduling.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream);

  double operator()();

 private:
  void refill();

  Philox4x32 generator_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<double, 2> cache_{};
  int cached_ = 0;
};

}  // namespace ebdo

#endif  // EBDO_RNG_HPP_
