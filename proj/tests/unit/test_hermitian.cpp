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
#include <random>
#include <vector>

#include "semipos/errors.hpp"
#include "semipos/hermitian.hpp"

using namespace semipos;

namespace {

HermitianMatrix random_hermitian(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> d;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = d(gen);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(d(gen), d(gen));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianMatrix(m);
}

// det(M - λI) by Gaussian elimination with partial pivoting; real for Hermitian M.
double char_poly(const ComplexMatrix& m, double lambda) {
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= lambda;
  Complex det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
    if (a(p, c) == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det.real();
}

// Roots of the characteristic polynomial by scanning for sign changes and bisecting.
std::vector<double> bisection_eigenvalues(const ComplexMatrix& m, double bound) {
  std::vector<double> roots;
  const int steps = 20000;
  double prev_x = -bound;
  double prev = char_poly(m, prev_x);
  for (int i = 1; i <= steps; ++i) {
    const double x = -bound + 2.0 * bound * i / steps;
    const double v = char_poly(m, x);
    if ((prev < 0) != (v < 0)) {
      double lo = prev_x, hi = x, flo = prev;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = char_poly(m, mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev = v;
  }
  return roots;
}

}  // namespace

TEST_CASE("identity and diagonal") {
  const auto e = hermitian_eigen(HermitianMatrix(ComplexMatrix::identity(5)));
  for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> d{3.0, -1.0, 2.5, 0.0};
  const auto vals = hermitian_eigenvalues(HermitianMatrix(ComplexMatrix::diagonal(d)));
  CHECK(vals == std::vector<double>{-1.0, 0.0, 2.5, 3.0});
}

TEST_CASE("random 4x4 against the characteristic polynomial") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto h = random_hermitian(4, seed);
    const auto expected = bisection_eigenvalues(h.matrix(), 20.0);
    REQUIRE(expected.size() == 4);
    const auto got = hermitian_eigenvalues(h);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(got[i] - expected[i]) < 1e-10);
  }
}

TEST_CASE("residuals and orthonormality") {
  for (std::size_t n : {1u, 2u, 7u, 60u}) {
    const auto h = random_hermitian(n, 17 + static_cast<unsigned>(n));
    const auto e = hermitian_eigen(h);
    const double scale = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
    CHECK(std::is_sorted(e.values.begin(), e.values.end()));
    for (std::size_t j = 0; j < n; ++j) {
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += h(i, l) * e.vectors(l, j);
        res = std::max(res, std::abs(s - e.values[j] * e.vectors(i, j)));
      }
      CHECK(res <= 1e-10 * scale);
    }
    const ComplexMatrix g = e.vectors.adjoint() * e.vectors;
    CHECK((g - ComplexMatrix::identity(n)).max_abs() < 1e-12);
    const auto vals = hermitian_eigenvalues(h);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(vals[j] - e.values[j]) < 1e-11 * scale);
  }
}

TEST_CASE("real tridiagonal input with zero couplings") {
  ComplexMatrix m(4, 4);
  m(0, 0) = 2.0;
  m(1, 1) = -1.0;
  m(1, 2) = Complex(0.0, 1.0);
  m(2, 1) = Complex(0.0, -1.0);
  m(3, 3) = 5.0;
  const auto vals = hermitian_eigenvalues(HermitianMatrix(m));
  // block [[-1, i], [-i, 0]]: λ = (-1 ± √5)/2
  CHECK(vals[0] == doctest::Approx((-1.0 - std::sqrt(5.0)) / 2));
  CHECK(vals[1] == doctest::Approx((-1.0 + std::sqrt(5.0)) / 2));
  CHECK(vals[2] == doctest::Approx(2.0));
  CHECK(vals[3] == doctest::Approx(5.0));
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 2.0;
  CHECK_THROWS_AS(HermitianMatrix{m}, DomainError);
  ComplexMatrix c(2, 2);
  c(0, 0) = Complex(1.0, 0.5);
  CHECK_THROWS_AS(HermitianMatrix{c}, DomainError);
  CHECK_THROWS_AS(HermitianMatrix{ComplexMatrix(2, 3)}, DomainError);
}

TEST_CASE("spectral norm") {
  const std::vector<double> d{-4.0, 1.0, 3.0};
  CHECK(spectral_norm(ComplexMatrix::diagonal(d)) == 4.0);
  // rank one u v^*: norm |u||v|
  ComplexMatrix m(3, 3);
  const Complex u[3] = {{1, 1}, {0, 2}, {-1, 0}};
  const Complex v[3] = {{2, 0}, {0, -1}, {1, 1}};
  double nu = 0, nv = 0;
  for (int i = 0; i < 3; ++i) {
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
    for (int j = 0; j < 3; ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  CHECK(spectral_norm(m) == doctest::Approx(std::sqrt(nu * nv)).epsilon(1e-12));
}
