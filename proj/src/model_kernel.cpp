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

#include "semipos/model_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "semipos/errors.hpp"
#include "semipos/specfun.hpp"

namespace semipos {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this |y| the entire function γ*(b, y) = y^{-b} P(b, y) is summed
// from its Taylor series; above it the Legendre continued fraction for
// Γ(b, y) is used instead.
constexpr double kSeriesRadius = 8.0;

// e^y γ*(b, y) for complex y, with the factor e^{log_scale} folded in.
Complex scaled_exp_gamma_star(double b, Complex y, double log_scale) {
  const double inv_gamma_b = std::exp(-log_gamma(b));
  if (std::abs(y) <= kSeriesRadius) {
    Complex power = 1.0;
    Complex sum = 1.0 / b;
    for (int n = 1; n < 1000; ++n) {
      power *= -y / static_cast<double>(n);
      const Complex term = power / (b + n);
      sum += term;
      if (n > std::abs(y) && std::abs(term) < kEps * std::abs(sum)) {
        return std::exp(y + log_scale) * sum * inv_gamma_b;
      }
    }
    throw ConvergenceError("gamma* series did not converge");
  }
  // Γ(b, y) = e^{-y} y^b · cf, so e^y γ*(b, y) = e^y y^{-b} - cf / Γ(b).
  const double tiny = 1e-300;
  Complex bb = y + 1.0 - b;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / bb;
  Complex cf = d;
  for (int i = 1; i < 20000; ++i) {
    const double an = -i * (i - b);
    bb += 2.0;
    d = an * d + bb;
    if (std::abs(d) < tiny) d = tiny;
    c = bb + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    cf *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return std::exp(y + log_scale) * std::pow(y, -b) - std::exp(log_scale) * cf * inv_gamma_b;
    }
  }
  throw ConvergenceError("incomplete gamma continued fraction (complex) did not converge");
}

}  // namespace

void ModelKernelParams::validate() const {
  if (r < 2 || r % 2 != 0) throw DomainError("model kernel order r must be even and >= 2");
  if (!(R0 > 0.0)) throw DomainError("model kernel requires R0 > 0");
}

double model_potential(const ModelKernelParams& p, Complex z) {
  p.validate();
  return 0.25 * std::pow(std::abs(z), p.r) * p.R0;
}

double model_basis_log_norm_sq(const ModelKernelParams& p, int alpha) {
  p.validate();
  if (alpha < 0) throw DomainError("model basis index must be >= 0");
  const double a = 2.0 * (alpha + 1) / p.r;
  return std::log(2.0 * kPi / p.r) + a * std::log(2.0 / p.R0) + log_gamma(a);
}

double model_basis_norm_sq(const ModelKernelParams& p, int alpha) {
  return std::exp(model_basis_log_norm_sq(p, alpha));
}

Complex model_kernel_series(const ModelKernelParams& p, Complex z, Complex w, int terms) {
  p.validate();
  const double log_damp = -model_potential(p, z) - model_potential(p, w);
  const Complex zw = z * std::conj(w);
  if (zw == 0.0) return std::exp(log_damp - model_basis_log_norm_sq(p, 0));

  const double log_modulus = std::log(std::abs(zw));
  const double phase = std::arg(zw);
  Complex sum = 0.0;
  LogSumAccumulator magnitude;
  double previous = -std::numeric_limits<double>::infinity();
  for (int alpha = 0; alpha <= terms; ++alpha) {
    const double log_term = alpha * log_modulus - model_basis_log_norm_sq(p, alpha) + log_damp;
    if (log_term < previous && log_term < magnitude.log_result() - 40.0) return sum;
    sum += std::polar(std::exp(log_term), alpha * phase);
    magnitude.add_log(log_term);
    previous = log_term;
  }
  throw ConvergenceError("model_kernel_series: tail not negligible after " + std::to_string(terms) +
                         " terms");
}

Complex model_kernel_closed(const ModelKernelParams& p, Complex z, Complex w) {
  p.validate();
  const int r = p.r;
  const int s = r / 2;
  const double scale = std::pow(0.5 * p.R0, 2.0 / r);
  const double prefactor = r / (2.0 * kPi) * scale;
  const double log_damp = -model_potential(p, z) - model_potential(p, w);
  const Complex x = scale * z * std::conj(w);

  if (x == 0.0) return prefactor * std::exp(log_damp - log_gamma(2.0 / r));

  if (x.imag() == 0.0 && x.real() > 0.0) {
    const double xr = x.real();
    const double log_x = std::log(xr);
    const double y = std::pow(xr, s);
    double head = 0.0;
    double tail = 0.0;
    for (int alpha = 0; alpha < s; ++alpha) {
      const double a = 2.0 * (alpha + 1) / r;
      head += std::exp(alpha * log_x - log_gamma(a) + log_damp);
      tail += regularized_gamma_p(a, y);
    }
    return prefactor * (head + std::exp((s - 1) * log_x + y + log_damp) * tail);
  }

  // Split α = s·m + j: G(x) = Σ_j x^j [1/Γ(b_j) + y e^y γ*(b_j, y)] with
  // y = x^s and b_j = (j+1)/s. γ* is entire, so no branch bookkeeping.
  const Complex y = std::pow(x, s);
  Complex total = 0.0;
  Complex x_power = 1.0;
  for (int j = 0; j < s; ++j) {
    const double b = 2.0 * (j + 1) / r;
    total += x_power * (std::exp(log_damp - log_gamma(b)) + y * scaled_exp_gamma_star(b, y, log_damp));
    x_power *= x;
  }
  return prefactor * total;
}

double model_diag_constant(const ModelKernelParams& p) { return model_kernel_closed(p, 0.0, 0.0).real(); }

double unscaled_diag_constant(const ModelKernelParams& p) {
  p.validate();
  return p.r / (2.0 * kPi) * std::pow(p.R0, 2.0 / p.r) * std::exp(-log_gamma(2.0 / p.r));
}

}  // namespace semipos
