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

#include <cmath>
#include <numbers>

#include "semipos/cp1.hpp"
#include "semipos/errors.hpp"

using namespace semipos;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// ∫_0^∞ g(ρ) dρ by composite Simpson in ρ = tan(πs/2); independent of the
// library's tanh-sinh and u-substitution.
template <class F>
double simpson_half_line(F&& g, int n = 200000) {
  const double h = 1.0 / n;
  double sum = 0.0;
  for (int i = 1; i < n; ++i) {
    const double s = i * h;
    const double rho = std::tan(0.5 * std::numbers::pi * s);
    const double jac = 0.5 * std::numbers::pi / std::pow(std::cos(0.5 * std::numbers::pi * s), 2);
    sum += (i % 2 == 1 ? 4.0 : 2.0) * g(rho) * jac;
  }
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("dimension count") {
  CHECK(h0_dimension(10, 2) == 11);
  CHECK(h0_dimension(10, 4) == 21);
  CHECK(h0_dimension(7, 6) == 22);
  CHECK_THROWS_AS(h0_dimension(3, 3), DomainError);
  CHECK_THROWS_AS(h0_dimension(-1, 4), DomainError);
}

TEST_CASE("curvature mass equals the degree r/2") {
  for (int r : {2, 4, 6, 8}) {
    const double mass = simpson_half_line([r](double rho) { return 2 * std::numbers::pi * rho * curvature_density(r, rho); });
    CHECK(std::abs(mass - r / 2.0) < 1e-9);
  }
  CHECK(curvature_density(4, 0.0) == 0.0);
  CHECK(curvature_density(2, 0.0) == doctest::Approx(1.0 / std::numbers::pi));
}

TEST_CASE("volume forms are probability measures") {
  for (int r : {2, 4, 6}) {
    for (auto v : {VolumeForm::OmegaR, VolumeForm::RoundFS}) {
      const GeometryConfig cfg{r, v};
      const double mass = simpson_half_line([&](double rho) { return 2 * std::numbers::pi * rho * volume_density(cfg, rho); });
      CHECK(std::abs(mass - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("OmegaR norms: closed form and quadrature agree") {
  for (int r : {2, 4}) {
    for (int k : {1, 7, 64, 200}) {
      const GeometryConfig cfg{r, VolumeForm::OmegaR};
      for (int a = 0; a <= r * k / 2; a += (k > 50 ? 13 : 1)) {
        const double closed = omega_r_log_norm_sq_closed(r, k, a);
        CHECK(std::abs(monomial_norm_sq_quadrature(cfg, k, a).log_magnitude - closed) < 1e-10 * std::max(1.0, std::abs(closed)));
      }
    }
  }
}

TEST_CASE("RoundFS norms at r = 2 are Beta integrals") {
  const GeometryConfig cfg{2, VolumeForm::RoundFS};
  for (int k : {3, 40}) {
    for (int a = 0; a <= k; ++a) {
      const double beta = std::lgamma(a + 1.0) + std::lgamma(k - a + 1.0) - std::lgamma(k + 2.0);
      CHECK(std::abs(monomial_norm_sq_quadrature(cfg, k, a).log_magnitude - beta) < 1e-11 * std::max(1.0, std::abs(beta)));
    }
  }
}

TEST_CASE("RoundFS norms at r = 4, 6 against mpmath quadrature") {
  CHECK(rel(monomial_norm_sq({4, VolumeForm::RoundFS}, 3, 0).value(), 0.33904862254808623221) < 1e-11);
  CHECK(rel(monomial_norm_sq({4, VolumeForm::RoundFS}, 3, 2).value(), 0.053650459150637922596) < 1e-11);
  CHECK(rel(monomial_norm_sq({4, VolumeForm::RoundFS}, 3, 6).value(), 0.33904862254808623221) < 1e-11);
  CHECK(rel(monomial_norm_sq({6, VolumeForm::RoundFS}, 2, 4).value(), 0.089570338974529276573) < 1e-11);
  CHECK(rel(monomial_norm_sq({4, VolumeForm::RoundFS}, 10, 7).value(), 3.1152507272311440447e-4) < 1e-11);
}

TEST_CASE("sections stop at degree rk/2") {
  CHECK_THROWS_AS(monomial_norm_sq({4, VolumeForm::RoundFS}, 3, 7), DomainError);
  CHECK_THROWS_AS(monomial_norm_sq({4, VolumeForm::RoundFS}, 3, -1), DomainError);
  const MonomialBasis b({4, VolumeForm::RoundFS}, 5);
  CHECK(b.degree_max() == 10);
  CHECK(b.dimension() == 11);
}

TEST_CASE("Bergman density values") {
  const MonomialBasis b({4, VolumeForm::RoundFS}, 3);
  CHECK(rel(b.density(0.0), 2.9494294726361056060) < 1e-11);
  CHECK(rel(b.density(Complex(0.3, 0.4)), 5.9153685357854564426) < 1e-11);
  CHECK(rel(b.density(2.0), 5.9153685357854564368) < 1e-11);
  CHECK(rel(bergman_density({4, VolumeForm::RoundFS}, 3, Complex(0.0, -2.0)), 5.9153685357854564368) < 1e-11);
  // very large and small radii stay finite
  CHECK(std::isfinite(b.log_density(1e150)));
  CHECK(std::isfinite(b.log_density(1e-150)));
}

TEST_CASE("r = 2 with the curvature volume: density is k + 1 everywhere") {
  const MonomialBasis b({2, VolumeForm::OmegaR}, 50);
  for (double rho : {0.0, 0.01, 1.0, 7.0, 1e3}) CHECK(std::abs(b.density(rho) - 51.0) < 1e-9);
  for (double rho : {0.2, 1.0, 5.0}) {
    CHECK(std::abs(bergman_log_jet(b, rho, 1)) < 1e-7);
    CHECK(std::abs(fs_pullback_density(b, rho) - curvature_density(2, rho)) < 1e-9);
  }
  CHECK(potential_convergence(b) == doctest::Approx(std::log(51.0) / 50).epsilon(1e-12));
}

TEST_CASE("trace identity") {
  for (auto v : {VolumeForm::OmegaR, VolumeForm::RoundFS}) {
    const MonomialBasis b({4, v}, 64);
    CHECK(std::abs(trace_integral(b) - b.dimension()) < 1e-8);
  }
}

TEST_CASE("z -> 1/z symmetry of the density") {
  for (auto v : {VolumeForm::OmegaR, VolumeForm::RoundFS}) {
    const MonomialBasis b({6, v}, 20);
    for (double rho : {0.1, 0.5, 0.9}) CHECK(rel(b.density(rho), b.density(1.0 / rho)) < 1e-10);
  }
}

TEST_CASE("positive-locus constant") {
  CHECK(positive_locus_constant({4, VolumeForm::RoundFS}, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(positive_locus_constant({2, VolumeForm::RoundFS}, 0.3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(positive_locus_constant({4, VolumeForm::OmegaR}, 0.3) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("jets") {
  const MonomialBasis b({4, VolumeForm::RoundFS}, 32);
  // first derivative by the library vs a plain wide central difference
  const double rho = 0.8;
  const double h = 1e-4;
  const double fd = (b.log_density(rho + h) - b.log_density(rho - h)) / (2 * h);
  CHECK(std::abs(bergman_log_jet(b, rho, 1) - fd) < 1e-6);
  CHECK(default_jet_step(b, 1.0) == doctest::Approx(1.0 / 64));
  CHECK(default_jet_step(b, 0.0) == doctest::Approx(std::pow(32.0, -0.25) / 8));
  CHECK_THROWS_AS(bergman_log_jet(b, rho, 2, 1e-9), StepSizeError);
  CHECK_THROWS_AS(bergman_log_jet(b, rho, 4), DomainError);
  CHECK(bergman_log_jet(b, rho, 0) == doctest::Approx(b.log_density(rho)));
}

TEST_CASE("standard grid") {
  const auto g = standard_rho_grid();
  CHECK(g.size() == 202);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(100.0));
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::count(g.begin(), g.end(), 1.0) >= 1);
}
