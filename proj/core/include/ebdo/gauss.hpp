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

#ifndef EBDO_GAUSS_HPP_
#define EBDO_GAUSS_HPP_

#include "ebdo/model.hpp"
#include "ebdo/plf.hpp"

namespace ebdo {

double std_normal_pdf(double x);
double std_normal_cdf(double x);

// P(a < N < b) for standard normal N, evaluated on the tail that avoids
// cancellation. Requires a <= b; infinite endpoints are allowed.
double std_normal_interval(double a, double b);

// Inverse of std_normal_cdf on (0, 1).
double std_normal_quantile(double p);

// E[g(scale * Z)] with ln Z ~ Normal(law.m, law.s^2), exact per segment.
double expected_plf(const MonotonePLF& g, double scale, const LogNormalLaw& law);

}  // namespace ebdo

#endif  // EBDO_GAUSS_HPP_
