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

#ifndef SEMIPOS_MODEL_KERNEL_HPP_
#define SEMIPOS_MODEL_KERNEL_HPP_

// Flat model Bergman kernel at a point where the curvature vanishes to
// order r - 2, with local potential Φ(z) = |z|^r R0 / 4.
//
// Inner product: Lebesgue area measure on ℂ, sections f e^{-Φ}, so
// ‖z^α e^{-Φ}‖² = ∫ |z|^{2α} e^{-2Φ} dx dy. Two independent evaluations
// are provided: the orthonormal-basis series and the closed form in terms
// of the incomplete gamma function.

#include <complex>

namespace semipos {

using Complex = std::complex<double>;

struct ModelKernelParams {
  int r = 2;
  double R0 = 1.0;

  /// Throws DomainError unless r is even, r >= 2 and R0 > 0.
  void validate() const;
};

double model_potential(const ModelKernelParams& p, Complex z);

/// (2π/r)(2/R0)^{2(α+1)/r} Γ(2(α+1)/r).
double model_basis_norm_sq(const ModelKernelParams& p, int alpha);
double model_basis_log_norm_sq(const ModelKernelParams& p, int alpha);

/// Σ_α (z w̄)^α e^{-Φ(z)-Φ(w)} / ‖z^α e^{-Φ}‖². Stops once the terms are
/// decreasing and the next one is 40 nats below the running sum of
/// magnitudes; throws ConvergenceError if that needs more than `terms`.
Complex model_kernel_series(const ModelKernelParams& p, Complex z, Complex w, int terms = 100000);

/// (r/2π) C^{2/r} e^{-Φ(z)-Φ(w)} G(C^{2/r} z w̄) with C = R0/2.
Complex model_kernel_closed(const ModelKernelParams& p, Complex z, Complex w);

/// Π(0, 0) = (r/2π) (R0/2)^{2/r} / Γ(2/r).
double model_diag_constant(const ModelKernelParams& p);

/// (r/2π) R0^{2/r} / Γ(2/r): the same constant written without the 2^{-2/r}
/// that the Lebesgue convention produces. Kept for reporting only.
double unscaled_diag_constant(const ModelKernelParams& p);

}  // namespace semipos

#endif  // SEMIPOS_MODEL_KERNEL_HPP_
