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

#ifndef SEMIPOS_SPECFUN_HPP_
#define SEMIPOS_SPECFUN_HPP_

#include <span>
#include <vector>

namespace semipos {

/// A real number stored as sign and natural log of its magnitude.
///
/// sign is +1, -1 or 0; sign 0 means the value is exactly zero and
/// log_magnitude is -inf.
struct LogValue {
  double log_magnitude;
  int sign;

  static LogValue zero();
  static LogValue from_log(double log_magnitude, int sign = 1);
  static LogValue from_value(double value);

  bool is_zero() const { return sign == 0; }
  double value() const;

  friend LogValue operator*(LogValue a, LogValue b);
  friend LogValue operator/(LogValue a, LogValue b);
};

/// Streaming signed log-sum-exp. Keeps a running maximum and rescales the
/// partial sums when it moves, so no term can overflow or underflow the
/// accumulator before it is compared to the largest one.
class LogSumAccumulator {
 public:
  void add(LogValue v);
  void add_log(double log_magnitude) { add(LogValue::from_log(log_magnitude)); }
  LogValue result() const;
  double log_result() const { return result().log_magnitude; }
  bool empty() const { return count_ == 0; }

 private:
  double shift_ = 0.0;
  double positive_ = 0.0;
  double negative_ = 0.0;
  long count_ = 0;
};

/// ln Γ(a) for a > 0.
double log_gamma(double a);

/// Regularized lower incomplete gamma P(a, x) = γ(a, x)/Γ(a).
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = Γ(a, x)/Γ(a).
double regularized_gamma_q(double a, double x);

/// Γ(a, x) = ∫_x^∞ t^{a-1} e^{-t} dt for a > 0, x >= 0.
double upper_incomplete_gamma(double a, double x);

/// ln of Γ(k+1) / (Γ(x+1) Γ(k-x+1)) for 0 <= x <= k.
double log_generalized_binomial(double k, double x);
double generalized_binomial(double k, double x);

/// G(x) = Σ_{α>=0} x^α / Γ(2(α+1)/r), evaluated in closed form through the
/// regularized incomplete gamma function:
///
///   G(x) = Σ_{α<s} x^α/Γ(a_α) + x^{s-1} e^{x^s} Σ_{α<s} P(a_α, x^s),
///
/// with s = r/2 and a_α = 2(α+1)/r. r must be even and >= 2, x >= 0.
double g_series_closed(int r, double x);

/// Same G(x), summed term by term for α = 0..terms. Throws ConvergenceError
/// when the ratio-test tail bound after the last term is not below 1e-14
/// relative to the partial sum.
double g_series_direct(int r, double x, int terms);

/// Signed sum of values given in log form. Two-pass: the maximum is found
/// first, so the result does not depend on input order beyond rounding.
LogValue log_sum_exp(std::span<const LogValue> values);

/// ln(1 + e^x) without overflow or loss of precision at either tail.
double log1p_exp(double x);

}  // namespace semipos

#endif  // SEMIPOS_SPECFUN_HPP_
