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

#include "semipos/cp1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "semipos/errors.hpp"
#include "semipos/parallel.hpp"
#include "semipos/quadrature.hpp"

namespace semipos {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNormTolerance = 1e-12;
constexpr double kClosedFormAgreement = 1e-10;

quadrature::Options norm_options() {
  quadrature::Options opt;
  opt.rel_tol = kNormTolerance;
  opt.min_level = 4;
  opt.max_level = 12;
  return opt;
}

// ln ∫_0^1 exp(g(p)) du for a log-integrand on radial points, split at
// `peak` so each half has its maximum near an endpoint, where tanh-sinh
// nodes cluster.
template <class G>
LogValue log_radial_integral(int r, double peak, G&& g, const quadrature::Options& opt) {
  auto left = [&](double x, double, double to_peak) {
    return g(radial_point(r, x, (1.0 - peak) + to_peak));
  };
  auto right = [&](double, double from_peak, double to_one) {
    return g(radial_point(r, peak + from_peak, to_one));
  };
  auto whole = [&](double x, double, double to_one) { return g(radial_point(r, x, to_one)); };

  if (!(peak > 0.0 && peak < 1.0)) {
    const auto res = quadrature::tanh_sinh_log(whole, 0.0, 1.0, opt);
    if (!res.converged) throw QuadratureError("radial quadrature did not converge");
    return res.value;
  }
  const auto a = quadrature::tanh_sinh_log(left, 0.0, peak, opt);
  const auto b = quadrature::tanh_sinh_log(right, peak, 1.0, opt);
  if (!a.converged || !b.converged) throw QuadratureError("radial quadrature did not converge");
  LogSumAccumulator acc;
  acc.add(a.value);
  acc.add(b.value);
  return acc.result();
}

LogValue quadrature_log_norm(const GeometryConfig& cfg, int k, int alpha) {
  const double exponent = 2.0 * alpha;
  const double peak = exponent / (static_cast<double>(cfg.r) * k);
  return log_radial_integral(
      cfg.r, peak, [&](const RadialPoint& p) { return radial_log_weight(cfg, k, exponent, p); },
      norm_options());
}

double log_norm_checked(const GeometryConfig& cfg, int k, int alpha) {
  const double quad = quadrature_log_norm(cfg, k, alpha).log_magnitude;
  if (cfg.volume_form != VolumeForm::OmegaR) return quad;
  const double closed = omega_r_log_norm_sq_closed(cfg.r, k, alpha);
  if (std::abs(std::expm1(quad - closed)) > kClosedFormAgreement) {
    throw QuadratureError("monomial norm quadrature disagrees with Beta integral at r=" +
                          std::to_string(cfg.r) + " k=" + std::to_string(k) +
                          " alpha=" + std::to_string(alpha));
  }
  return closed;
}

void check_alpha(int k, int r, int alpha) {
  if (k < 1) throw DomainError("tensor power k must be >= 1");
  if (alpha < 0 || alpha > h0_dimension(k, r) - 1) {
    throw DomainError("monomial exponent " + std::to_string(alpha) +
                      " outside [0, rk/2]: integral diverges");
  }
}

}  // namespace

std::string_view to_string(VolumeForm v) {
  switch (v) {
    case VolumeForm::OmegaR:
      return "omega";
    case VolumeForm::RoundFS:
      return "round";
  }
  return "?";
}

void GeometryConfig::validate() const {
  if (r < 2 || r % 2 != 0) throw DomainError("vanishing order r must be even and >= 2");
}

double curvature_density(int r, double rho) {
  if (r < 2 || r % 2 != 0) throw DomainError("vanishing order r must be even and >= 2");
  rho = std::abs(rho);
  if (rho > 1.0) {
    // symmetric form, avoids overflow of ρ^r
    const double t = std::pow(1.0 / rho, r);
    return r * r / (4.0 * kPi) * t / (rho * rho) / ((1.0 + t) * (1.0 + t));
  }
  const double t = std::pow(rho, r);
  return r * r / (4.0 * kPi) * std::pow(rho, r - 2) / ((1.0 + t) * (1.0 + t));
}

double volume_density(const GeometryConfig& cfg, double rho) {
  cfg.validate();
  switch (cfg.volume_form) {
    case VolumeForm::OmegaR:
      return 2.0 / cfg.r * curvature_density(cfg.r, rho);
    case VolumeForm::RoundFS: {
      const double q = 1.0 + rho * rho;
      return 1.0 / (kPi * q * q);
    }
  }
  return 0.0;
}

double positive_locus_constant(const GeometryConfig& cfg, double rho) {
  return curvature_density(cfg.r, rho) / volume_density(cfg, rho);
}

int h0_dimension(int k, int r) {
  if (k < 0) throw DomainError("tensor power k must be >= 0");
  if (r < 2 || r % 2 != 0) throw DomainError("vanishing order r must be even and >= 2");
  return r * k / 2 + 1;
}

RadialPoint radial_point(int r, double u, double one_minus_u) {
  RadialPoint p;
  p.log_u = std::log(u);
  p.log_one_minus_u = std::log(one_minus_u);
  p.log_rho = (p.log_u - p.log_one_minus_u) / r;
  p.rho = std::exp(p.log_rho);
  return p;
}

double radial_log_weight(const GeometryConfig& cfg, int k, double exponent, const RadialPoint& p) {
  const double r = cfg.r;
  switch (cfg.volume_form) {
    case VolumeForm::OmegaR:
      // μ-density·2πρ·dρ/du = 1, so only ρ^e (1-u)^k remains.
      return exponent / r * p.log_u + (k - exponent / r) * p.log_one_minus_u;
    case VolumeForm::RoundFS:
      return std::log(2.0 / r) + (exponent + 2.0) * p.log_rho - 2.0 * log1p_exp(2.0 * p.log_rho) +
             (k - 1.0) * p.log_one_minus_u - p.log_u;
  }
  return 0.0;
}

double omega_r_log_norm_sq_closed(int r, int k, int alpha) {
  check_alpha(k, r, alpha);
  const double x = 2.0 * alpha / r;
  return log_gamma(x + 1.0) + log_gamma(k + 1.0 - x) - log_gamma(k + 2.0);
}

LogValue monomial_norm_sq(const GeometryConfig& cfg, int k, int alpha) {
  cfg.validate();
  check_alpha(k, cfg.r, alpha);
  return LogValue::from_log(log_norm_checked(cfg, k, alpha));
}

LogValue monomial_norm_sq_quadrature(const GeometryConfig& cfg, int k, int alpha) {
  cfg.validate();
  check_alpha(k, cfg.r, alpha);
  return quadrature_log_norm(cfg, k, alpha);
}

MonomialBasis::MonomialBasis(GeometryConfig cfg, int k) : cfg_(cfg), k_(k) {
  cfg_.validate();
  if (k < 1) throw DomainError("tensor power k must be >= 1");
  log_norm_sq_.resize(h0_dimension(k, cfg_.r));
  parallel_for(log_norm_sq_.size(), [&](std::size_t alpha) {
    log_norm_sq_[alpha] = log_norm_checked(cfg_, k_, static_cast<int>(alpha));
  });
}

double MonomialBasis::log_density(double rho) const {
  rho = std::abs(rho);
  if (rho == 0.0) return -log_norm_sq_[0];
  const double log_rho = std::log(rho);
  const int top = degree_max();
  // For ρ > 1 factor out ρ^{rk} = ρ^{2·top} so that no exponent cancels.
  const bool outer = rho > 1.0;
  auto term = [&](int alpha) {
    const double power = outer ? -2.0 * (top - alpha) : 2.0 * alpha;
    return power * log_rho - log_norm_sq_[alpha];
  };
  double shift = -std::numeric_limits<double>::infinity();
  for (int alpha = 0; alpha <= top; ++alpha) shift = std::max(shift, term(alpha));
  double sum = 0.0;
  for (int alpha = 0; alpha <= top; ++alpha) sum += std::exp(term(alpha) - shift);
  const double log_factor = outer ? -k_ * std::log1p(std::pow(rho, -cfg_.r))
                                  : -k_ * log1p_exp(cfg_.r * log_rho);
  return shift + std::log(sum) + log_factor;
}

double MonomialBasis::density(Complex z) const { return std::exp(log_density(std::abs(z))); }

double bergman_density(const GeometryConfig& cfg, int k, Complex z) {
  return MonomialBasis(cfg, k).density(z);
}

double default_jet_step(const MonomialBasis& basis, double rho) {
  rho = std::abs(rho);
  const int r = basis.config().r;
  const double scale = std::pow(static_cast<double>(basis.k()), -1.0 / r);
  if (rho == 0.0) return scale / 8.0;
  const bool near_pole = r > 2 && (rho < 0.5 || rho > 2.0);
  return near_pole ? rho * scale / 8.0 : rho / 64.0;
}

double bergman_log_jet(const MonomialBasis& basis, double rho, int order, double step) {
  if (order < 0 || order > 3) throw DomainError("jet order must be in [0, 3]");
  if (!(step > 0.0)) throw DomainError("jet step must be positive");
  auto f = [&](double x) { return basis.log_density(x); };
  if (order == 0) return f(rho);

  auto difference = [&](double h) {
    switch (order) {
      case 1:
        return (f(rho + h) - f(rho - h)) / (2.0 * h);
      case 2:
        return (f(rho + h) - 2.0 * f(rho) + f(rho - h)) / (h * h);
      default:
        return (f(rho + 2.0 * h) - 2.0 * f(rho + h) + 2.0 * f(rho - h) - f(rho - 2.0 * h)) /
               (2.0 * h * h * h);
    }
  };
  // Two Richardson values from (h, h/2) and (h/2, h/4); their gap estimates
  // the truncation error of the second.
  const double d1 = difference(step);
  const double d2 = difference(0.5 * step);
  const double d4 = difference(0.25 * step);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double refined = (4.0 * d4 - d2) / 3.0;
  const double estimate = std::abs(refined - r1) / 15.0;
  // derivatives far below the natural scale of ln Π_k are judged against that scale
  const double natural = 1e-3 / std::pow(8.0 * default_jet_step(basis, rho), order);
  if (estimate > 1e-4 * std::max(std::abs(refined), natural)) {
    throw StepSizeError("jet not resolved by the finite-difference step at rho=" + std::to_string(rho) +
                        " order=" + std::to_string(order));
  }
  return refined;
}

double bergman_log_jet(const MonomialBasis& basis, double rho, int order) {
  return bergman_log_jet(basis, rho, order, default_jet_step(basis, rho));
}

double fs_pullback_density(const MonomialBasis& basis, double rho) {
  rho = std::abs(rho);
  const double h = default_jet_step(basis, rho);
  double laplacian;
  if (rho == 0.0) {
    // f is even in ρ, so Δf(0) = 2 f''(0).
    laplacian = 2.0 * bergman_log_jet(basis, 0.0, 2, h);
  } else {
    laplacian = bergman_log_jet(basis, rho, 2, h) + bergman_log_jet(basis, rho, 1, h) / rho;
  }
  return curvature_density(basis.config().r, rho) + laplacian / (4.0 * kPi * basis.k());
}

double potential_convergence(const MonomialBasis& basis) {
  double worst = 0.0;
  for (double rho : standard_rho_grid()) {
    worst = std::max(worst, std::abs(basis.log_density(rho)) / basis.k());
  }
  return worst;
}

double trace_integral(const MonomialBasis& basis) {
  const auto& cfg = basis.config();
  quadrature::Options opt;
  opt.rel_tol = 1e-11;
  opt.max_level = 12;
  const auto res = quadrature::tanh_sinh_log(
      [&](double u, double, double to_one) {
        const RadialPoint p = radial_point(cfg.r, u, to_one);
        return basis.log_density(p.rho) + radial_log_weight(cfg, 0, 0.0, p);
      },
      0.0, 1.0, opt);
  if (!res.converged) throw QuadratureError("trace quadrature did not converge");
  return res.value.value();
}

std::vector<double> standard_rho_grid() {
  std::vector<double> grid;
  grid.reserve(202);
  grid.push_back(0.0);
  for (int i = 0; i < 200; ++i) grid.push_back(std::pow(10.0, -2.0 + 4.0 * i / 199.0));
  grid.push_back(1.0);
  std::sort(grid.begin(), grid.end());
  return grid;
}

}  // namespace semipos
