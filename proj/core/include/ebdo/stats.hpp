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

#ifndef EBDO_STATS_HPP_
#define EBDO_STATS_HPP_

#include <cmath>

namespace ebdo {

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Welford accumulator; merge() is Chan's pairwise update. Identical samples
// leave m2 at exactly 0.
class RunningMoments {
 public:
  void push(double x) {
    count_ += 1.0;
    const double delta = x - mean_;
    mean_ += delta / count_;
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningMoments& other) {
    if (other.count_ == 0.0) return;
    if (count_ == 0.0) {
      *this = other;
      return;
    }
    const double total = count_ + other.count_;
    const double delta = other.mean_ - mean_;
    mean_ += delta * (other.count_ / total);
    m2_ += other.m2_ + delta * delta * (count_ * other.count_ / total);
    count_ = total;
  }

  double count() const { return count_; }
  double mean() const { return mean_; }

  Estimate estimate() const {
    if (count_ < 2.0) return {mean_, 0.0};
    return {mean_, std::sqrt(m2_ / (count_ - 1.0) / count_)};
  }

 private:
  double count_ = 0.0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace ebdo

#endif  // EBDO_STATS_HPP_
