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

#ifndef SEMIPOS_TOEPLITZ_HPP_
#define SEMIPOS_TOEPLITZ_HPP_

// Toeplitz operators T_{f,k} = Π_k f Π_k written in the orthonormalized
// monomial basis of H⁰(CP¹, L^k).

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "semipos/cp1.hpp"
#include "semipos/hermitian.hpp"

namespace semipos {

/// A bounded real function on the sphere, given by finitely many angular
/// Fourier modes f(ρe^{iθ}) = Σ_m f_m(ρ) e^{imθ}. Real-valuedness needs
/// f_{-m} = conj(f_m); general symbols must list both signs of every mode.
class Symbol {
 public:
  using Profile = std::function<Complex(double rho)>;
  struct Mode {
    int m;
    Profile profile;
  };

  static Symbol constant(double value);
  static Symbol radial(std::function<double(double)> profile, double sup_norm_hint);
  static Symbol general(std::vector<Mode> modes, double sup_norm_hint);

  bool is_radial() const { return modes_.size() == 1 && modes_.front().m == 0; }
  std::optional<double> constant_value() const { return constant_; }
  const std::vector<Mode>& modes() const { return modes_; }
  double sup_norm_hint() const { return sup_norm_hint_; }

  Complex mode_profile(int m, double rho) const;
  double evaluate(Complex z) const;

  /// Pointwise product; the modes convolve.
  Symbol operator*(const Symbol& other) const;
  /// a·f + b·g.
  static Symbol combination(double a, const Symbol& f, double b, const Symbol& g);

 private:
  std::vector<Mode> modes_;
  std::optional<double> constant_;
  double sup_norm_hint_ = 0.0;
};

/// M[α][β] = ⟨f s_β, s_α⟩. Each entry is a 1-D radial integral of the
/// (α−β)-th Fourier mode. Throws QuadratureError when level doubling
/// disagrees by more than 1e-9.
HermitianMatrix toeplitz_matrix(const MonomialBasis& basis, const Symbol& f);

/// Eigenvalues of T_{f,k}, ascending. Radial symbols skip the eigensolver.
std::vector<double> toeplitz_spectrum(const MonomialBasis& basis, const Symbol& f);

/// max |λ| over the spectrum of T_{f,k}.
double operator_norm(const MonomialBasis& basis, const Symbol& f);

/// ‖T_f T_g − T_{fg}‖ in spectral norm.
double composition_defect(const MonomialBasis& basis, const Symbol& f, const Symbol& g);

/// (1/k) Σ_λ φ(λ) over the spectrum of T_{f,k}.
double szego_trace(const MonomialBasis& basis, const Symbol& f, const std::function<double(double)>& phi);

/// ∫ φ(f(z)) · curvature density dx dy, the k → ∞ limit of szego_trace.
double szego_target(int r, const Symbol& f, const std::function<double(double)>& phi);

}  // namespace semipos

#endif  // SEMIPOS_TOEPLITZ_HPP_
