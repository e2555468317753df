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

#include "semipos/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "semipos/errors.hpp"

namespace semipos {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Eval {
  Complex value;       // p(z), or q(1/z) for the reversed polynomial
  Complex derivative;
  double bound;        // Horner rounding bound on value
};

// Horner with the running error bound of Higham, Alg. 5.1 (simplified).
Eval horner(std::span<const Complex> b, Complex z) {
  Complex p = b.back();
  Complex dp = 0.0;
  double mu = std::abs(p) * 0.5;
  const double az = std::abs(z);
  for (std::size_t j = b.size() - 1; j-- > 0;) {
    dp = dp * z + p;
    p = p * z + b[j];
    mu = mu * az + std::abs(p);
  }
  const double bound = kEps * (2.0 * mu - std::abs(p)) * 2.0;
  return {p, dp, std::max(bound, 0.0)};
}

// Newton step p/p' and whether p(z) is indistinguishable from zero.
// Uses the reversed polynomial outside the unit disk.
struct Step {
  Complex newton;
  bool at_rounding_floor;
};

Step newton_step(std::span<const Complex> b, std::span<const Complex> rev, Complex z) {
  const auto m = static_cast<double>(b.size() - 1);
  if (std::abs(z) <= 1.0) {
    const Eval e = horner(b, z);
    if (std::abs(e.value) <= e.bound) return {0.0, true};
    if (e.derivative == 0.0) return {e.value, false};
    return {e.value / e.derivative, false};
  }
  const Complex w = 1.0 / z;
  const Eval e = horner(rev, w);
  if (std::abs(e.value) <= e.bound) return {0.0, true};
  // p(z) = z^m q(w): p'/p = w (m - w q'/q)
  const Complex denom = m - w * e.derivative / e.value;
  if (denom == 0.0) return {z, false};
  return {z / denom, false};
}

std::vector<double> newton_polygon_radii(std::span<const Complex> b) {
  const int m = static_cast<int>(b.size()) - 1;
  std::vector<int> hull;
  std::vector<double> logs(b.size());
  for (int j = 0; j <= m; ++j) logs[j] = std::log(std::abs(b[j]));
  for (int j = 0; j <= m; ++j) {
    if (!std::isfinite(logs[j])) continue;
    while (hull.size() >= 2) {
      const int i0 = hull[hull.size() - 2];
      const int i1 = hull.back();
      // drop i1 when it lies on or below the chord i0 -> j
      const double cross = (logs[i1] - logs[i0]) * (j - i0) - (logs[j] - logs[i0]) * (i1 - i0);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(j);
  }
  std::vector<double> radii;
  radii.reserve(m);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int i = hull[s];
    const int j = hull[s + 1];
    const double radius = std::exp((logs[i] - logs[j]) / (j - i));
    for (int l = i; l < j; ++l) radii.push_back(radius);
  }
  return radii;
}

}  // namespace

std::vector<Complex> poly_from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{1.0};
  for (const Complex& root : roots) {
    c.push_back(0.0);
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - root * c[j];
    c[0] = -root * c[0];
  }
  return c;
}

RootSample find_roots(std::span<const Complex> coeffs, const RootOptions& options) {
  if (coeffs.empty()) throw DomainError("empty coefficient vector");
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("non-finite coefficient");
  }
  const auto nonzero = [](const Complex& c) { return c != 0.0; };
  const auto first = std::find_if(coeffs.begin(), coeffs.end(), nonzero);
  if (first == coeffs.end()) throw DomainError("zero polynomial has no well-defined roots");
  const auto last = std::find_if(coeffs.rbegin(), coeffs.rend(), nonzero);
  const auto lo = static_cast<std::size_t>(first - coeffs.begin());
  const auto hi = coeffs.size() - 1 - static_cast<std::size_t>(last - coeffs.rbegin());

  RootSample out;
  out.count_at_infinity = static_cast<int>(coeffs.size() - 1 - hi);
  out.roots.assign(lo, Complex(0.0));
  const std::size_t m = hi - lo;
  if (m == 0) return out;

  // z = c·w with c^m = |a_lo|/|a_hi|, then normalize the largest coefficient to 1.
  const double log_scale = (std::log(std::abs(coeffs[lo])) - std::log(std::abs(coeffs[hi]))) / m;
  std::vector<double> logs(m + 1);
  double log_max = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= m; ++j) {
    const double a = std::abs(coeffs[lo + j]);
    logs[j] = a == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(a) + j * log_scale;
    log_max = std::max(log_max, logs[j]);
  }
  std::vector<Complex> b(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const Complex a = coeffs[lo + j];
    b[j] = a == 0.0 ? Complex(0.0) : std::polar(std::exp(logs[j] - log_max), std::arg(a));
  }
  std::vector<Complex> rev(b.rbegin(), b.rend());

  const auto radii = newton_polygon_radii(b);
  std::vector<Complex> z(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.25) / m + 0.4;
    z[i] = std::polar(radii[i], angle);
  }

  std::vector<char> done(m, 0);
  std::size_t remaining = m;
  int sweep = 0;
  for (; sweep < options.max_sweeps && remaining > 0; ++sweep) {
    for (std::size_t i = 0; i < m; ++i) {
      if (done[i]) continue;
      const Step step = newton_step(b, rev, z[i]);
      if (step.at_rounding_floor) {
        done[i] = 1;
        --remaining;
        continue;
      }
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex correction = step.newton / (1.0 - step.newton * repulsion);
      z[i] -= correction;
      if (std::abs(correction) < options.relative_step * std::abs(z[i]) + 1e-300) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    throw ConvergenceError("Aberth iteration: " + std::to_string(remaining) + " of " + std::to_string(m) +
                           " roots unconverged after " + std::to_string(options.max_sweeps) + " sweeps");
  }
  out.sweeps = sweep;

  const double scale = std::exp(log_scale);
  for (const Complex& w : z) {
    const double aw = std::abs(w);
    const double value = aw <= 1.0 ? std::abs(horner(b, w).value) : std::abs(horner(rev, 1.0 / w).value);
    out.residual = std::max(out.residual, value);
    out.roots.push_back(w * scale);
  }
  return out;
}

}  // namespace semipos
