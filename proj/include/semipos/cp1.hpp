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

#ifndef SEMIPOS_CP1_HPP_
#define SEMIPOS_CP1_HPP_

// The semipositive line bundle on the Riemann sphere with potential
// φ = ln(1 + |z|^r) in the affine chart z = w0/w1. Its curvature vanishes
// to order r - 2 at z = 0 and z = ∞ and is positive elsewhere; holomorphic
// sections of the k-th power are polynomials of degree <= rk/2.
//
// All L² structures are taken against a probability-normalized volume
// measure μ, so that ∫ Π_k dμ equals the dimension of the section space.
//
// Radial integrals use the substitution u = ρ^r / (1 + ρ^r), which maps
// (0, ∞) onto (0, 1) and turns (1 + ρ^r)^{-k} into (1 - u)^k.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "semipos/specfun.hpp"

namespace semipos {

using Complex = std::complex<double>;

enum class VolumeForm {
  /// The degenerate curvature form itself, normalized to mass one.
  OmegaR,
  /// The round Fubini–Study area (1/π)(1+|z|²)^{-2} dx dy.
  RoundFS,
};

std::string_view to_string(VolumeForm v);

struct GeometryConfig {
  int r = 2;
  VolumeForm volume_form = VolumeForm::RoundFS;

  void validate() const;
};

/// Density of (i/2π)∂∂̄ ln(1+|z|^r) against dx dy.
double curvature_density(int r, double rho);
inline double curvature_density(int r, Complex z) { return curvature_density(r, std::abs(z)); }

/// Density of μ against dx dy.
double volume_density(const GeometryConfig& cfg, double rho);

/// lim Π_k(ρ)/k on the positive locus: curvature density over volume density.
double positive_locus_constant(const GeometryConfig& cfg, double rho);

/// dim H⁰(CP¹, L^k) = rk/2 + 1.
int h0_dimension(int k, int r);

/// Point of the radial substitution: ρ and the logs needed by integrands.
struct RadialPoint {
  double rho;
  double log_rho;
  double log_u;
  double log_one_minus_u;
};
RadialPoint radial_point(int r, double u, double one_minus_u);

/// ln of ρ^exponent (1+ρ^r)^{-k} · (μ-density) · 2πρ · dρ/du at a radial point.
double radial_log_weight(const GeometryConfig& cfg, int k, double exponent, const RadialPoint& p);

/// Beta-integral value of ln ‖z^α‖² for OmegaR:
/// ln Γ(2α/r+1) + ln Γ(k+1-2α/r) - ln Γ(k+2).
double omega_r_log_norm_sq_closed(int r, int k, int alpha);

/// ln ‖z^α‖² = ln ∫ |z|^{2α}(1+|z|^r)^{-k} dμ by tanh-sinh quadrature. For
/// OmegaR the Beta-integral value is also computed; disagreement beyond
/// 1e-10 relative throws QuadratureError. Throws DomainError when
/// alpha > rk/2 (the integral diverges or the section is not holomorphic).
LogValue monomial_norm_sq(const GeometryConfig& cfg, int k, int alpha);

/// The quadrature value alone, for any volume form; no cross-check.
LogValue monomial_norm_sq_quadrature(const GeometryConfig& cfg, int k, int alpha);

/// Log squared norms of z^0, ..., z^{rk/2} for one tensor power.
/// Immutable once built; safe to share between threads.
class MonomialBasis {
 public:
  MonomialBasis(GeometryConfig cfg, int k);

  const GeometryConfig& config() const { return cfg_; }
  int k() const { return k_; }
  int degree_max() const { return static_cast<int>(log_norm_sq_.size()) - 1; }
  int dimension() const { return static_cast<int>(log_norm_sq_.size()); }
  double log_norm_sq(int alpha) const { return log_norm_sq_.at(alpha); }
  std::span<const double> log_norms() const { return log_norm_sq_; }

  /// ln Π_k(z, z) at |z| = rho; rho may be any real, only |rho| matters.
  double log_density(double rho) const;
  double density(Complex z) const;

 private:
  GeometryConfig cfg_;
  int k_;
  std::vector<double> log_norm_sq_;
};

double bergman_density(const GeometryConfig& cfg, int k, Complex z);

/// Finite-difference step used by the jet and pullback operations:
/// ρ k^{-1/r}/8 near the degenerate poles (k^{-1/r}/8 at ρ = 0), ρ/64 elsewhere.
double default_jet_step(const MonomialBasis& basis, double rho);

/// order-th derivative of ρ ↦ ln Π_k(ρ, ρ): central differences at h, h/2
/// and h/4, Richardson-refined; the gap between the two refined values is
/// the truncation estimate. Throws StepSizeError when it exceeds 1e-4 of
/// the result; derivatives far below their
/// natural scale 1/(8h₀)^order, h₀ = default_jet_step, are judged
/// against that scale instead.
double bergman_log_jet(const MonomialBasis& basis, double rho, int order, double step);
double bergman_log_jet(const MonomialBasis& basis, double rho, int order);

/// Density of (1/k)Φ_k^*ω_FS against dx dy:
/// curvature + Δ ln Π_k / (4πk), Δ the radial Laplacian.
double fs_pullback_density(const MonomialBasis& basis, double rho);

/// sup over the standard grid of |ln Π_k| / k.
double potential_convergence(const MonomialBasis& basis);

/// ∫ Π_k dμ by radial quadrature (equals the dimension when the norms are right).
double trace_integral(const MonomialBasis& basis);

/// 200 log-spaced radii in [1e-2, 1e2] plus 0 and 1, ascending.
std::vector<double> standard_rho_grid();

}  // namespace semipos

#endif  // SEMIPOS_CP1_HPP_
