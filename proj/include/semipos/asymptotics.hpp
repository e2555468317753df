// Copyright 2026 The semipos Authors
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

#ifndef SEMIPOS_ASYMPTOTICS_HPP_
#define SEMIPOS_ASYMPTOTICS_HPP_

#include <span>

namespace semipos {

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Largest |ln y - (slope ln x + intercept)| over the points.
  double max_residual = 0.0;
  int points_used = 0;
};

/// Least-squares line through (ln x, ln y). Needs >= 3 positive points and
/// max(x)/min(x) >= 4 (DomainError otherwise).
RateFit loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// Removes the leading k^{-p} term from values on a doubling grid of ks,
/// using the last two points: (2^p v_n - v_{n-1}) / (2^p - 1).
/// Needs >= 3 points with ks[i+1] = 2 ks[i].
double richardson_extrapolate(std::span<const int> ks, std::span<const double> values, double exponent_step);

}  // namespace semipos

#endif  // SEMIPOS_ASYMPTOTICS_HPP_
