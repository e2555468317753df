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

#ifndef SEMIPOS_QUADRATURE_HPP_
#define SEMIPOS_QUADRATURE_HPP_

// Double-exponential (tanh-sinh) quadrature on a finite interval.
//
// Integrands receive the abscissa together with its distances to both
// endpoints, computed without cancellation, so algebraic endpoint
// behaviour such as (1-u)^k or u^{-2/3} can be evaluated accurately all
// the way to the last node. Each level halves the step; the difference
// between consecutive levels is the error estimate.

#include <cmath>
#include <complex>
#include <vector>

#include "semipos/specfun.hpp"

namespace semipos::quadrature {

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int min_level = 4;
  int max_level = 10;
};

template <class T>
struct Result {
  T value{};
  double error_estimate = 0.0;
  int level = 0;
  bool converged = false;
};

struct LogResult {
  LogValue value = LogValue::zero();
  double rel_error_estimate = 0.0;
  int level = 0;
  bool converged = false;
};

/// One symmetric pair of nodes at ±t on the reference interval (-1, 1).
/// `gap` is the distance 1 - |x| of both nodes from their nearer endpoint.
struct NodePair {
  double gap;
  double weight;
  double log_weight;
};

/// Nodes added at refinement `level` (level 0 holds t = 1, 2, ...; the
/// centre node t = 0 is handled separately). Tables are built once.
const std::vector<NodePair>& level_nodes(int level);
inline constexpr double kCentreWeight = 1.5707963267948966;  // π/2

/// ∫_a^b f. f(x, x - a, b - x) returns a double or std::complex<double>.
template <class T, class F>
Result<T> tanh_sinh(F&& f, double a, double b, const Options& opt = {}) {
  const double half = 0.5 * (b - a);
  const double mid = a + half;
  Result<T> res;
  T sum = kCentreWeight * f(mid, half, half);
  double h = 1.0;
  T estimate{};
  for (int level = 0; level <= opt.max_level; ++level) {
    T added{};
    for (const auto& node : level_nodes(level)) {
      const double d = half * node.gap;
      const double far = 2.0 * half - d;
      added += node.weight * (f(a + d, d, far) + f(b - d, far, d));
    }
    T next;
    if (level == 0) {
      next = half * (sum + added);
      sum = sum + added;
    } else {
      h *= 0.5;
      sum = sum + added;
      next = half * h * sum;
    }
    if (level > 0) {
      res.error_estimate = std::abs(next - estimate);
      const double tol = std::max(opt.rel_tol * std::abs(next), opt.abs_tol);
      if (level >= opt.min_level && res.error_estimate <= tol) {
        res.value = next;
        res.level = level;
        res.converged = true;
        return res;
      }
    }
    estimate = next;
    res.level = level;
  }
  res.value = estimate;
  return res;
}

/// ln ∫_a^b exp(g) for a log-integrand g(x, x - a, b - x); the integrand
/// may span hundreds of orders of magnitude.
template <class F>
LogResult tanh_sinh_log(F&& log_f, double a, double b, const Options& opt = {}) {
  const double half = 0.5 * (b - a);
  const double log_half = std::log(half);
  const double mid = a + half;
  LogResult res;
  LogSumAccumulator sum;
  sum.add_log(std::log(kCentreWeight) + log_f(mid, half, half));
  double log_h = 0.0;
  double previous = 0.0;
  for (int level = 0; level <= opt.max_level; ++level) {
    for (const auto& node : level_nodes(level)) {
      const double d = half * node.gap;
      if (d <= 0.0) continue;
      const double far = 2.0 * half - d;
      sum.add_log(node.log_weight + log_f(a + d, d, far));
      sum.add_log(node.log_weight + log_f(b - d, far, d));
    }
    if (level > 0) log_h -= std::log(2.0);
    const double current = log_half + log_h + sum.log_result();
    if (level > 0) {
      res.rel_error_estimate = std::abs(std::expm1(current - previous));
      if (level >= opt.min_level && res.rel_error_estimate <= opt.rel_tol) {
        res.value = LogValue::from_log(current);
        res.level = level;
        res.converged = true;
        return res;
      }
    }
    previous = current;
    res.level = level;
  }
  res.value = LogValue::from_log(previous);
  return res;
}

/// Periodic trapezoid rule for ∫_0^{2π} f(θ) dθ with n equally spaced points.
template <class F>
auto periodic_trapezoid(F&& f, int n) {
  using T = decltype(f(0.0));
  T sum{};
  const double step = 2.0 * 3.14159265358979323846 / n;
  for (int j = 0; j < n; ++j) sum += f(j * step);
  return sum * step;
}

}  // namespace semipos::quadrature

#endif  // SEMIPOS_QUADRATURE_HPP_
