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

#include "semipos/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "semipos/errors.hpp"

namespace semipos {

RateFit loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("loglog_slope: xs and ys differ in length");
  if (xs.size() < 3) throw DomainError("loglog_slope: need at least 3 points");
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw DomainError("loglog_slope: values must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (*hi < 4.0 * *lo) throw DomainError("loglog_slope: abscissae span less than a factor of 4");

  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points_used = static_cast<int>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(ly[i] - fit.slope * lx[i] - fit.intercept));
  }
  return fit;
}

double richardson_extrapolate(std::span<const int> ks, std::span<const double> values, double exponent_step) {
  if (ks.size() != values.size()) throw DomainError("richardson_extrapolate: ks and values differ in length");
  if (ks.size() < 3) throw DomainError("richardson_extrapolate: need at least 3 points");
  if (!(exponent_step > 0.0)) throw DomainError("richardson_extrapolate: exponent_step must be positive");
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    if (ks[i] <= 0 || ks[i + 1] != 2 * ks[i]) throw DomainError("richardson_extrapolate: ks must double at each step");
  }
  const double f = std::pow(2.0, exponent_step);
  const std::size_t n = values.size() - 1;
  return (f * values[n] - values[n - 1]) / (f - 1.0);
}

}  // namespace semipos
