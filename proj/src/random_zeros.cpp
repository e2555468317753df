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

#include "semipos/random_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "semipos/cp1.hpp"
#include "semipos/errors.hpp"
#include "semipos/parallel.hpp"
#include "semipos/specfun.hpp"

namespace semipos {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1), never 0.
double uniform(std::uint64_t bits) { return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace

std::string_view to_string(EnsembleMode mode) {
  return mode == EnsembleMode::FullBasis ? "full" : "paper-literal";
}

void EnsembleSpec::validate() const {
  if (r < 2 || r % 2 != 0) throw DomainError("vanishing order r must be even and >= 2");
  if (k < 1) throw DomainError("tensor power k must be >= 1");
  if (samples < 1) throw DomainError("sample count must be >= 1");
  if (degree() > kMaxEnsembleDegree) {
    throw DomainError("polynomial degree " + std::to_string(degree()) + " exceeds cap " +
                      std::to_string(kMaxEnsembleDegree));
  }
}

int EnsembleSpec::degree() const { return mode == EnsembleMode::FullBasis ? h0_dimension(k, r) - 1 : k; }

std::vector<double> ensemble_log_weights(const EnsembleSpec& spec) {
  spec.validate();
  std::vector<double> w(spec.degree() + 1);
  if (spec.mode == EnsembleMode::FullBasis) {
    const MonomialBasis basis({spec.r, VolumeForm::OmegaR}, spec.k);
    for (int a = 0; a <= basis.degree_max(); ++a) w[a] = -0.5 * basis.log_norm_sq(a);
  } else {
    for (int a = 0; a <= spec.k; ++a) w[a] = 0.5 * log_generalized_binomial(spec.k, 2.0 * a / spec.r);
  }
  const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  const double mid = 0.5 * (*lo + *hi);
  for (double& x : w) x -= mid;
  return w;
}

Complex complex_gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t slot) {
  const std::uint64_t key = splitmix64(splitmix64(seed) ^ splitmix64(stream * 0x632be59bd9b4e019ULL + 1));
  const double u1 = uniform(splitmix64(key ^ (2 * slot)));
  const double u2 = uniform(splitmix64(key ^ (2 * slot + 1)));
  // Box–Muller with variance 1/2 per component.
  const double radius = std::sqrt(-std::log(u1));
  return std::polar(radius, 2.0 * std::numbers::pi * u2);
}

std::vector<Complex> sample_polynomial(const EnsembleSpec& spec, int index) {
  return sample_polynomial(spec, ensemble_log_weights(spec), index);
}

std::vector<Complex> sample_polynomial(const EnsembleSpec& spec, std::span<const double> log_weights, int index) {
  if (index < 0 || index >= spec.samples) throw DomainError("sample index out of range");
  std::vector<Complex> c(log_weights.size());
  for (std::size_t a = 0; a < c.size(); ++a) {
    c[a] = complex_gaussian(spec.seed, static_cast<std::uint64_t>(index), a) * std::exp(log_weights[a]);
  }
  return c;
}

EnsembleResult run_ensemble(const EnsembleSpec& spec) { return run_ensemble(spec, worker_count()); }

EnsembleResult run_ensemble(const EnsembleSpec& spec, int workers) {
  const auto weights = ensemble_log_weights(spec);
  const auto n = static_cast<std::size_t>(spec.samples);
  std::vector<RootSample> found(n);
  std::vector<std::string> errors(n);
  parallel_for(
      n,
      [&](std::size_t i) {
        const auto coeffs = sample_polynomial(spec, weights, static_cast<int>(i));
        try {
          found[i] = find_roots(coeffs);
          if (!(found[i].residual <= kResidualTolerance)) {
            errors[i] = "residual " + std::to_string(found[i].residual) + " above tolerance";
          }
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      },
      workers);
  EnsembleResult out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      out.failures.push_back({static_cast<int>(i), errors[i]});
      continue;
    }
    out.max_residual = std::max(out.max_residual, found[i].residual);
    out.samples.push_back(std::move(found[i]));
    out.indices.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<double> pooled_moduli(std::span<const RootSample> samples) {
  std::vector<double> out;
  for (const auto& s : samples)
    for (const auto& z : s.roots) out.push_back(std::abs(z));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> pooled_arguments(std::span<const RootSample> samples) {
  std::vector<double> out;
  for (const auto& s : samples) {
    for (const auto& z : s.roots) {
      if (z == 0.0) continue;
      double a = std::arg(z);
      if (a < 0.0) a += 2.0 * std::numbers::pi;
      if (a >= 2.0 * std::numbers::pi) a = 0.0;
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double radial_cdf_empirical(std::span<const RootSample> samples, double t) {
  std::size_t total = 0;
  std::size_t inside = 0;
  for (const auto& s : samples) {
    total += s.roots.size();
    for (const auto& z : s.roots) inside += std::abs(z) <= t ? 1 : 0;
  }
  if (total == 0) throw InsufficientDataError("no finite roots");
  return static_cast<double>(inside) / static_cast<double>(total);
}

double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.size() < 100) {
    throw InsufficientDataError("KS statistic needs at least 100 points, got " + std::to_string(sorted.size()));
  }
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_statistic(std::span<const RootSample> samples, const std::function<double(double)>& cdf) {
  const auto moduli = pooled_moduli(samples);
  return ks_statistic(moduli, cdf);
}

double angular_uniformity(std::span<const RootSample> samples) {
  const auto args = pooled_arguments(samples);
  return ks_statistic(args, [](double a) { return a / (2.0 * std::numbers::pi); });
}

double predicted_radial_cdf(int r, double t) {
  if (t <= 0.0) return 0.0;
  if (std::isinf(t)) return 1.0;
  // t^r/(1+t^r) = 1/(1+t^{-r}), evaluated in logs for extreme t
  return 1.0 / (1.0 + std::exp(-r * std::log(t)));
}

double paper_literal_critical_radius(int r) {
  if (r < 2 || r % 2 != 0) throw DomainError("vanishing order r must be even and >= 2");
  if (r == 2) return std::numeric_limits<double>::infinity();
  return std::pow(2.0 / (r - 2), 1.0 / r);
}

}  // namespace semipos
