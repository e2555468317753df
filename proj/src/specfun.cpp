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

#include "semipos/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "semipos/errors.hpp"

namespace semipos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxGammaIterations = 100000;

void require_even_order(int r) {
  if (r < 2 || r % 2 != 0) {
    throw DomainError("vanishing order r must be even and >= 2, got " + std::to_string(r));
  }
}

// Power series for P(a, x); converges for all x but is only used for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxGammaIterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps * 0.5) {
      return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
  }
  throw ConvergenceError("incomplete gamma series did not converge");
}

// Modified Lentz evaluation of the continued fraction for Γ(a, x) e^x x^{-a}.
double gamma_q_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxGammaIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps * 0.5) return h;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge");
}

void check_gamma_args(double a, double x) {
  if (!(a > 0.0)) throw DomainError("incomplete gamma requires a > 0");
  if (!(x >= 0.0)) throw DomainError("incomplete gamma requires x >= 0");
}

}  // namespace

LogValue LogValue::zero() { return {-kInf, 0}; }

LogValue LogValue::from_log(double log_magnitude, int sign) {
  if (sign == 0 || log_magnitude == -kInf) return zero();
  return {log_magnitude, sign > 0 ? 1 : -1};
}

LogValue LogValue::from_value(double value) {
  if (value == 0.0) return zero();
  return {std::log(std::abs(value)), value > 0.0 ? 1 : -1};
}

double LogValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

LogValue operator*(LogValue a, LogValue b) {
  if (a.sign == 0 || b.sign == 0) return LogValue::zero();
  return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
}

LogValue operator/(LogValue a, LogValue b) {
  if (b.sign == 0) throw DomainError("division of LogValue by zero");
  if (a.sign == 0) return LogValue::zero();
  return {a.log_magnitude - b.log_magnitude, a.sign * b.sign};
}

void LogSumAccumulator::add(LogValue v) {
  ++count_;
  if (v.sign == 0) return;
  if (positive_ == 0.0 && negative_ == 0.0) {
    shift_ = v.log_magnitude;
  } else if (v.log_magnitude > shift_) {
    const double scale = std::exp(shift_ - v.log_magnitude);
    positive_ *= scale;
    negative_ *= scale;
    shift_ = v.log_magnitude;
  }
  const double t = std::exp(v.log_magnitude - shift_);
  if (v.sign > 0) {
    positive_ += t;
  } else {
    negative_ += t;
  }
}

LogValue LogSumAccumulator::result() const {
  const double diff = positive_ - negative_;
  if (diff == 0.0) return LogValue::zero();
  return {shift_ + std::log(std::abs(diff)), diff > 0.0 ? 1 : -1};
}

double log_gamma(double a) {
  if (!(a > 0.0)) throw DomainError("log_gamma requires a > 0");
  int sign = 0;
  return ::lgamma_r(a, &sign);
}

double regularized_gamma_p(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - std::exp(-x + a * std::log(x) - log_gamma(a)) * gamma_q_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return std::exp(-x + a * std::log(x) - log_gamma(a)) * gamma_q_fraction(a, x);
}

double upper_incomplete_gamma(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return std::exp(log_gamma(a));
  if (x < a + 1.0) return std::exp(log_gamma(a)) * (1.0 - gamma_p_series(a, x));
  return std::exp(-x + a * std::log(x)) * gamma_q_fraction(a, x);
}

double log_generalized_binomial(double k, double x) {
  if (!(k >= 0.0) || !(x >= 0.0) || !(x <= k)) {
    throw DomainError("generalized binomial requires 0 <= x <= k");
  }
  return log_gamma(k + 1.0) - log_gamma(x + 1.0) - log_gamma(k - x + 1.0);
}

double generalized_binomial(double k, double x) { return std::exp(log_generalized_binomial(k, x)); }

double g_series_closed(int r, double x) {
  require_even_order(r);
  if (!(x >= 0.0)) throw DomainError("g_series_closed requires x >= 0");
  const int s = r / 2;
  if (x == 0.0) return std::exp(-log_gamma(2.0 / r));
  const double log_x = std::log(x);
  const double y = std::pow(x, s);
  double head = 0.0;
  double tail = 0.0;
  for (int alpha = 0; alpha < s; ++alpha) {
    const double a = 2.0 * (alpha + 1) / r;
    head += std::exp(alpha * log_x - log_gamma(a));
    tail += regularized_gamma_p(a, y);
  }
  return head + std::exp((s - 1) * log_x + y) * tail;
}

double g_series_direct(int r, double x, int terms) {
  require_even_order(r);
  if (!(x >= 0.0)) throw DomainError("g_series_direct requires x >= 0");
  if (terms < 0) throw DomainError("g_series_direct requires terms >= 0");
  if (x == 0.0) return std::exp(-log_gamma(2.0 / r));
  const double log_x = std::log(x);
  auto log_term = [&](int alpha) { return alpha * log_x - log_gamma(2.0 * (alpha + 1) / r); };

  LogSumAccumulator acc;
  for (int alpha = 0; alpha <= terms; ++alpha) acc.add_log(log_term(alpha));
  const double log_sum = acc.log_result();

  // Ratios t_{α+1}/t_α decrease monotonically in α, so once the first
  // omitted ratio is below one the geometric bound dominates the tail.
  const double log_next = log_term(terms + 1);
  const double log_ratio = log_term(terms + 2) - log_next;
  if (log_ratio >= 0.0) {
    throw ConvergenceError("g_series_direct: terms still increasing after " + std::to_string(terms) +
                           " terms");
  }
  const double log_tail = log_next - std::log1p(-std::exp(log_ratio));
  if (log_tail - log_sum > std::log(1e-14)) {
    throw ConvergenceError("g_series_direct: tail bound not below 1e-14 after " +
                           std::to_string(terms) + " terms");
  }
  return std::exp(log_sum);
}

LogValue log_sum_exp(std::span<const LogValue> values) {
  double shift = -kInf;
  for (const auto& v : values) {
    if (v.sign != 0) shift = std::max(shift, v.log_magnitude);
  }
  if (shift == -kInf) return LogValue::zero();
  double positive = 0.0;
  double negative = 0.0;
  for (const auto& v : values) {
    if (v.sign == 0) continue;
    const double t = std::exp(v.log_magnitude - shift);
    if (v.sign > 0) {
      positive += t;
    } else {
      negative += t;
    }
  }
  const double diff = positive - negative;
  if (diff == 0.0) return LogValue::zero();
  return {shift + std::log(std::abs(diff)), diff > 0.0 ? 1 : -1};
}

double log1p_exp(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

}  // namespace semipos
