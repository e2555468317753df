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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "semipos/cp1.hpp"
#include "semipos/errors.hpp"
#include "semipos/random_zeros.hpp"

using namespace semipos;

namespace {

RootSample cloud(const std::vector<Complex>& pts) {
  RootSample s;
  s.roots = pts;
  return s;
}

}  // namespace

TEST_CASE("ensemble degrees and weights") {
  const EnsembleSpec full{EnsembleMode::FullBasis, 10, 4, 1, 5};
  CHECK(full.degree() == 20);
  CHECK(sample_polynomial(full, 0).size() == 21);

  const EnsembleSpec lit{EnsembleMode::PaperLiteral, 5, 2, 1, 5};
  const auto w = ensemble_log_weights(lit);
  REQUIRE(w.size() == 6);
  const double binom[6] = {1, 5, 10, 10, 5, 1};
  for (int a = 0; a < 6; ++a) CHECK(std::abs((w[a] - w[0]) - 0.5 * std::log(binom[a])) < 1e-13);

  // r = 2 FullBasis is the same SU(2) ensemble up to a common factor
  const auto wf = ensemble_log_weights({EnsembleMode::FullBasis, 5, 2, 1, 5});
  for (int a = 0; a < 6; ++a) CHECK(std::abs((wf[a] - wf[0]) - (w[a] - w[0])) < 1e-12);

  CHECK_THROWS_AS(ensemble_log_weights({EnsembleMode::FullBasis, 600, 4, 1, 5}), DomainError);
  CHECK_THROWS_AS(sample_polynomial(full, 5), DomainError);
}

TEST_CASE("determinism and independence of slots") {
  const EnsembleSpec spec{EnsembleMode::FullBasis, 8, 4, 99, 10};
  CHECK(sample_polynomial(spec, 3) == sample_polynomial(spec, 3));
  CHECK(sample_polynomial(spec, 3) != sample_polynomial(spec, 4));
  EnsembleSpec other = spec;
  other.seed = 100;
  CHECK(sample_polynomial(spec, 3) != sample_polynomial(other, 3));

  const auto a = run_ensemble(spec, 1);
  const auto b = run_ensemble(spec, 3);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].roots == b.samples[i].roots);
}

TEST_CASE("complex Gaussian moments") {
  double re = 0, im = 0, re2 = 0, im2 = 0, cross = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const Complex g = complex_gaussian(7, 0, i);
    re += g.real();
    im += g.imag();
    re2 += g.real() * g.real();
    im2 += g.imag() * g.imag();
    cross += g.real() * g.imag();
  }
  CHECK(std::abs(re / n) < 0.01);
  CHECK(std::abs(im / n) < 0.01);
  CHECK(std::abs(re2 / n - 0.5) < 0.01);
  CHECK(std::abs(im2 / n - 0.5) < 0.01);
  CHECK(std::abs(cross / n) < 0.01);
}

TEST_CASE("predicted CDF integrates the curvature") {
  // independent: trapezoid of 2πρ·curvature on a fine grid
  for (int r : {2, 4, 6}) {
    for (double t : {0.3, 1.0, 2.5}) {
      const int n = 200000;
      double sum = 0.0;
      for (int i = 1; i <= n; ++i) {
        const double a = t * (i - 1) / n, b = t * i / n;
        sum += 0.5 * (b - a) * (2 * std::numbers::pi * a * curvature_density(r, a) +
                                2 * std::numbers::pi * b * curvature_density(r, b));
      }
      CHECK(std::abs(sum / (r / 2.0) - predicted_radial_cdf(r, t)) < 1e-8);
    }
  }
  CHECK(predicted_radial_cdf(4, 0.0) == 0.0);
  CHECK(predicted_radial_cdf(4, INFINITY) == 1.0);
  CHECK(predicted_radial_cdf(4, 1e300) == 1.0);
}

TEST_CASE("KS statistic") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<double> x(10000);
  for (auto& v : x) v = U(gen);
  std::sort(x.begin(), x.end());
  CHECK(ks_statistic(x, [](double t) { return t; }) <= 0.02);

  // against its own empirical CDF the distance is one step, 1/n
  const auto self = [&](double t) {
    return static_cast<double>(std::upper_bound(x.begin(), x.end(), t) - x.begin()) / x.size();
  };
  CHECK(ks_statistic(x, self) <= 1.0 / x.size() + 1e-15);

  std::vector<double> small(99, 0.5);
  CHECK_THROWS_AS(ks_statistic(small, [](double t) { return t; }), InsufficientDataError);
}

TEST_CASE("angular uniformity") {
  std::vector<Complex> ring, half;
  for (int i = 0; i < 1000; ++i) {
    ring.push_back(std::polar(1.0 + (i % 7), 2 * std::numbers::pi * (i + 0.5) / 1000));
    half.push_back(std::polar(1.0, std::numbers::pi * (i + 0.5) / 1000 - 0.2));
  }
  const std::vector<RootSample> a{cloud(ring)}, b{cloud(half)};
  CHECK(angular_uniformity(a) <= 0.02);
  CHECK(angular_uniformity(b) >= 0.4);
}

TEST_CASE("radial CDF basics") {
  const std::vector<RootSample> s{cloud({0.5, Complex(0.0, 2.0), -1.0, 3.0})};
  CHECK(radial_cdf_empirical(s, 1e300) == 1.0);
  CHECK(radial_cdf_empirical(s, 1.0) == 0.5);
  CHECK_THROWS_AS(radial_cdf_empirical(std::vector<RootSample>{cloud({})}, 1.0), InsufficientDataError);
}

TEST_CASE("z -> 1/z symmetry of the SU(2) ensemble") {
  const auto res = run_ensemble({EnsembleMode::FullBasis, 64, 2, 2024, 160});
  const auto moduli = pooled_moduli(res.samples);
  REQUIRE(moduli.size() >= 10000);
  std::vector<RootSample> inverted;
  for (const auto& s : res.samples) {
    RootSample t;
    for (const auto& z : s.roots) t.roots.push_back(1.0 / z);
    inverted.push_back(t);
  }
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(radial_cdf_empirical(res.samples, t) + radial_cdf_empirical(inverted, 1.0 / t) - 1.0) < 1e-12);
    CHECK(std::abs(radial_cdf_empirical(res.samples, t) - radial_cdf_empirical(inverted, t)) <= 0.03);
  }
  CHECK(std::abs(radial_cdf_empirical(res.samples, 1.0) - 0.5) <= 0.03);
}

TEST_CASE("KS distance to the curvature law shrinks with k") {
  for (int r : {2, 4, 6}) {
    std::vector<double> ks;
    for (int k : {16, 128}) {
      const auto res = run_ensemble({EnsembleMode::FullBasis, k, r, 11, 200});
      CHECK(res.failures.empty());
      CHECK(res.max_residual <= kResidualTolerance);
      for (const auto& s : res.samples) CHECK(static_cast<int>(s.roots.size()) + s.count_at_infinity == r * k / 2);
      ks.push_back(ks_statistic(res.samples, [r](double t) { return predicted_radial_cdf(r, t); }));
    }
    INFO("r=" << r << " KS16=" << ks[0] << " KS128=" << ks[1]);
    CHECK(ks[1] < ks[0]);
  }
}

TEST_CASE("critical radius of the degree-k ensemble") {
  CHECK(paper_literal_critical_radius(4) == doctest::Approx(1.0));
  CHECK(paper_literal_critical_radius(6) == doctest::Approx(std::pow(0.5, 1.0 / 6)));
  CHECK(std::isinf(paper_literal_critical_radius(2)));
}
