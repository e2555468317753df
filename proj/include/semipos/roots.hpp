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

#ifndef SEMIPOS_ROOTS_HPP_
#define SEMIPOS_ROOTS_HPP_

#include <complex>
#include <span>
#include <vector>

namespace semipos {

using Complex = std::complex<double>;

/// All roots of one polynomial. Roots at infinity (vanishing leading
/// coefficients) are counted, not stored.
struct RootSample {
  std::vector<Complex> roots;
  int count_at_infinity = 0;
  /// max over roots w of |p̃(w)| / max(1,|w|)^m, where p̃ is the rescaled
  /// polynomial with its largest coefficient normalized to 1.
  double residual = 0.0;
  int sweeps = 0;
};

struct RootOptions {
  int max_sweeps = 200;
  double relative_step = 1e-13;
};

/// Aberth–Ehrlich simultaneous iteration. coeffs[j] multiplies z^j.
/// The variable is rescaled so that the constant and leading coefficients
/// have equal magnitude; initial guesses sit on circles read off the Newton
/// polygon of log|coeffs|. A root stops moving once its correction falls
/// below relative_step·|z| + 1e-300 or |p(z)| is within the Horner
/// rounding bound. Throws DomainError on the zero polynomial and
/// ConvergenceError after max_sweeps.
RootSample find_roots(std::span<const Complex> coeffs, const RootOptions& options = {});

/// Coefficients of Π (z - roots[i]), ascending powers.
std::vector<Complex> poly_from_roots(std::span<const Complex> roots);

}  // namespace semipos

#endif  // SEMIPOS_ROOTS_HPP_
