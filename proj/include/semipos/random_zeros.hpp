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

#ifndef SEMIPOS_RANDOM_ZEROS_HPP_
#define SEMIPOS_RANDOM_ZEROS_HPP_

// Gaussian random polynomials and the empirical law of their zeros.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semipos/roots.hpp"

namespace semipos {

enum class EnsembleMode {
  /// Degree k, coefficient std-dev sqrt(binom(k, 2α/r)).
  PaperLiteral,
  /// Degree rk/2, coefficient std-dev 1/‖z^α‖ under the curvature volume.
  FullBasis,
};

std::string_view to_string(EnsembleMode mode);

struct EnsembleSpec {
  EnsembleMode mode = EnsembleMode::FullBasis;
  int k = 16;
  int r = 2;
  std::uint64_t seed = 1;
  int samples = 100;

  void validate() const;
  int degree() const;
};

inline constexpr int kMaxEnsembleDegree = 1024;

/// ln of the coefficient standard deviations, shifted so the extremes are
/// symmetric about 0 (the zero set does not see a common factor).
std::vector<double> ensemble_log_weights(const EnsembleSpec& spec);

/// Counter-based standard complex Gaussian: real and imaginary parts are
/// independent N(0, 1/2). Depends only on (seed, stream, slot).
Complex complex_gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t slot);

/// Coefficients c_α w_α of sample `index`, ascending powers.
std::vector<Complex> sample_polynomial(const EnsembleSpec& spec, int index);
std::vector<Complex> sample_polynomial(const EnsembleSpec& spec, std::span<const double> log_weights, int index);

struct SampleFailure {
  int index;
  std::string reason;
};

struct EnsembleResult {
  std::vector<RootSample> samples;
  std::vector<int> indices;
  std::vector<SampleFailure> failures;
  double max_residual = 0.0;
};

inline constexpr double kResidualTolerance = 1e-8;

/// Samples 0..samples-1, each root-found independently. Samples whose root
/// finder throws or whose residual exceeds kResidualTolerance land in
/// `failures`; everything else is kept in index order.
EnsembleResult run_ensemble(const EnsembleSpec& spec, int workers);
EnsembleResult run_ensemble(const EnsembleSpec& spec);

/// Moduli of all finite roots, ascending.
std::vector<double> pooled_moduli(std::span<const RootSample> samples);
/// Arguments of all nonzero finite roots in [0, 2π), ascending.
std::vector<double> pooled_arguments(std::span<const RootSample> samples);

double radial_cdf_empirical(std::span<const RootSample> samples, double t);

/// sup |F_n - F| for ascending data. Throws InsufficientDataError below 100 points.
double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf);
/// KS distance of pooled root moduli against cdf.
double ks_statistic(std::span<const RootSample> samples, const std::function<double(double)>& cdf);
/// KS distance of pooled root arguments against the uniform law on [0, 2π).
double angular_uniformity(std::span<const RootSample> samples);

/// t^r / (1 + t^r): mass of the normalized curvature form in |z| <= t.
double predicted_radial_cdf(int r, double t);

/// Radius (2/(r-2))^{1/r} at which the degree-k ensemble exhausts k/(rk/2)
/// of the curvature mass; infinite at r = 2.
double paper_literal_critical_radius(int r);

}  // namespace semipos

#endif  // SEMIPOS_RANDOM_ZEROS_HPP_
