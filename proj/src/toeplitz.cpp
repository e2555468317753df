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

#include "semipos/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "semipos/errors.hpp"
#include "semipos/parallel.hpp"
#include "semipos/quadrature.hpp"

namespace semipos {

namespace {

constexpr double kEntryTolerance = 1e-9;
constexpr int kAngularPoints = 128;

quadrature::Options entry_options() {
  quadrature::Options opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-13;
  opt.min_level = 4;
  opt.max_level = 12;
  return opt;
}

// ∫_0^1 f_m(ρ(u)) ρ^e (1+ρ^r)^{-k} dμ/du du, scaled by e^{-log_norm}.
template <class T, class Profile>
T radial_entry(const MonomialBasis& basis, double exponent, double log_norm, Profile&& profile) {
  const auto& cfg = basis.config();
  const int k = basis.k();
  auto value_at = [&](const RadialPoint& p) -> T {
    return profile(p.rho) * std::exp(radial_log_weight(cfg, k, exponent, p) - log_norm);
  };
  const double peak = exponent / (static_cast<double>(cfg.r) * k);
  const auto opt = entry_options();
  quadrature::Result<T> left, right;
  if (peak > 0.0 && peak < 1.0) {
    left = quadrature::tanh_sinh<T>(
        [&](double x, double, double to_peak) { return value_at(radial_point(cfg.r, x, (1.0 - peak) + to_peak)); },
        0.0, peak, opt);
    right = quadrature::tanh_sinh<T>(
        [&](double, double from_peak, double to_one) { return value_at(radial_point(cfg.r, peak + from_peak, to_one)); },
        peak, 1.0, opt);
  } else {
    left = quadrature::tanh_sinh<T>(
        [&](double x, double, double to_one) { return value_at(radial_point(cfg.r, x, to_one)); }, 0.0, 1.0, opt);
    right.converged = true;
  }
  const double err = left.error_estimate + right.error_estimate;
  if ((!left.converged || !right.converged) && err > kEntryTolerance) {
    throw QuadratureError("Toeplitz entry quadrature: level-doubling disagreement " + std::to_string(err));
  }
  return left.value + right.value;
}

}  // namespace

Symbol Symbol::constant(double value) {
  Symbol s = radial([value](double) { return value; }, std::abs(value));
  s.constant_ = value;
  return s;
}

Symbol Symbol::radial(std::function<double(double)> profile, double sup_norm_hint) {
  Symbol s;
  s.modes_.push_back({0, [p = std::move(profile)](double rho) { return Complex(p(rho), 0.0); }});
  s.sup_norm_hint_ = sup_norm_hint;
  return s;
}

Symbol Symbol::general(std::vector<Mode> modes, double sup_norm_hint) {
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) { return a.m < b.m; });
  for (std::size_t i = 0; i + 1 < modes.size(); ++i) {
    if (modes[i].m == modes[i + 1].m) throw DomainError("symbol lists a Fourier mode twice");
  }
  for (const auto& mode : modes) {
    const bool paired = std::any_of(modes.begin(), modes.end(), [&](const Mode& o) { return o.m == -mode.m; });
    if (!paired) throw DomainError("symbol is not real: mode " + std::to_string(mode.m) + " has no conjugate");
  }
  Symbol s;
  s.modes_ = std::move(modes);
  s.sup_norm_hint_ = sup_norm_hint;
  return s;
}

Complex Symbol::mode_profile(int m, double rho) const {
  for (const auto& mode : modes_) {
    if (mode.m == m) return mode.profile(rho);
  }
  return 0.0;
}

double Symbol::evaluate(Complex z) const {
  const double rho = std::abs(z);
  const double theta = std::arg(z);
  Complex sum = 0.0;
  for (const auto& mode : modes_) sum += mode.profile(rho) * std::polar(1.0, mode.m * theta);
  return sum.real();
}

Symbol Symbol::operator*(const Symbol& other) const {
  if (constant_ && *constant_ == 1.0) return other;
  if (other.constant_ && *other.constant_ == 1.0) return *this;
  if (constant_ && other.constant_) return constant(*constant_ * *other.constant_);

  std::map<int, std::vector<std::pair<Profile, Profile>>> terms;
  for (const auto& a : modes_)
    for (const auto& b : other.modes_) terms[a.m + b.m].push_back({a.profile, b.profile});
  Symbol s;
  for (auto& [m, pairs] : terms) {
    s.modes_.push_back({m, [pairs](double rho) {
                          Complex sum = 0.0;
                          for (const auto& [f, g] : pairs) sum += f(rho) * g(rho);
                          return sum;
                        }});
  }
  s.sup_norm_hint_ = sup_norm_hint_ * other.sup_norm_hint_;
  return s;
}

Symbol Symbol::combination(double a, const Symbol& f, double b, const Symbol& g) {
  std::map<int, std::vector<std::pair<double, Profile>>> terms;
  for (const auto& mode : f.modes_) terms[mode.m].push_back({a, mode.profile});
  for (const auto& mode : g.modes_) terms[mode.m].push_back({b, mode.profile});
  Symbol s;
  for (auto& [m, parts] : terms) {
    s.modes_.push_back({m, [parts](double rho) {
                          Complex sum = 0.0;
                          for (const auto& [c, p] : parts) sum += c * p(rho);
                          return sum;
                        }});
  }
  if (f.constant_ && g.constant_) s.constant_ = a * *f.constant_ + b * *g.constant_;
  s.sup_norm_hint_ = std::abs(a) * f.sup_norm_hint_ + std::abs(b) * g.sup_norm_hint_;
  return s;
}

HermitianMatrix toeplitz_matrix(const MonomialBasis& basis, const Symbol& f) {
  const auto n = static_cast<std::size_t>(basis.dimension());
  if (auto c = f.constant_value()) {
    std::vector<double> diag(n, *c);
    return HermitianMatrix(ComplexMatrix::diagonal(diag));
  }
  ComplexMatrix m(n, n);
  const auto norms = basis.log_norms();
  parallel_for(n, [&](std::size_t alpha) {
    for (const auto& mode : f.modes()) {
      // angular orthogonality: only β = α − m survives
      const long beta = static_cast<long>(alpha) - mode.m;
      if (beta < 0 || beta >= static_cast<long>(n)) continue;
      const double exponent = static_cast<double>(alpha) + static_cast<double>(beta);
      const double log_norm = 0.5 * (norms[alpha] + norms[beta]);
      if (mode.m == 0 && f.is_radial()) {
        m(alpha, beta) = radial_entry<double>(basis, exponent, log_norm,
                                              [&](double rho) { return mode.profile(rho).real(); });
      } else {
        m(alpha, beta) = radial_entry<Complex>(basis, exponent, log_norm, mode.profile);
      }
    }
  });
  return HermitianMatrix(std::move(m), 1e-9);
}

std::vector<double> toeplitz_spectrum(const MonomialBasis& basis, const Symbol& f) {
  const HermitianMatrix t = toeplitz_matrix(basis, f);
  if (f.is_radial()) {
    std::vector<double> values(t.dimension());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = t(i, i).real();
    std::sort(values.begin(), values.end());
    return values;
  }
  return hermitian_eigenvalues(t);
}

double operator_norm(const MonomialBasis& basis, const Symbol& f) {
  const auto values = toeplitz_spectrum(basis, f);
  double best = 0.0;
  for (double v : values) best = std::max(best, std::abs(v));
  return best;
}

double composition_defect(const MonomialBasis& basis, const Symbol& f, const Symbol& g) {
  const HermitianMatrix tf = toeplitz_matrix(basis, f);
  const HermitianMatrix tg = toeplitz_matrix(basis, g);
  const HermitianMatrix tfg = toeplitz_matrix(basis, f * g);
  return spectral_norm(tf.matrix() * tg.matrix() - tfg.matrix());
}

double szego_trace(const MonomialBasis& basis, const Symbol& f, const std::function<double(double)>& phi) {
  double sum = 0.0;
  for (double v : toeplitz_spectrum(basis, f)) sum += phi(v);
  return sum / basis.k();
}

double szego_target(int r, const Symbol& f, const std::function<double(double)>& phi) {
  if (r < 2 || r % 2 != 0) throw DomainError("vanishing order r must be even and >= 2");
  // In u = ρ^r/(1+ρ^r) the curvature measure is (r/2) du · dθ/2π.
  auto integrand = [&](double u, double, double to_one) {
    const double rho = radial_point(r, u, to_one).rho;
    if (f.is_radial()) return phi(f.mode_profile(0, rho).real());
    const double mean = quadrature::periodic_trapezoid(
        [&](double theta) { return phi(f.evaluate(std::polar(rho, theta))); }, kAngularPoints);
    return mean / (2.0 * std::numbers::pi);
  };
  quadrature::Options opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-14;
  opt.max_level = 12;
  const auto res = quadrature::tanh_sinh<double>(integrand, 0.0, 1.0, opt);
  if (!res.converged) throw QuadratureError("Szego target quadrature did not converge");
  return 0.5 * r * res.value;
}

}  // namespace semipos
