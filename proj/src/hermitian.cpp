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

#include "semipos/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "semipos/errors.hpp"

namespace semipos {

namespace {

constexpr int kMaxSweeps = 30;

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;       // off[i] couples i and i+1; off[n-1] = 0
  std::vector<Complex> phase;    // diagonal unitary making the off-diagonal real
  ComplexMatrix reflectors;      // accumulated Householder product (if requested)
};

Tridiagonal tridiagonalize(const ComplexMatrix& input, bool accumulate) {
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  Tridiagonal t;
  if (accumulate) t.reflectors = ComplexMatrix::identity(n);
  std::vector<Complex> v(n), p(n);

  for (std::size_t j = 0; j + 2 < n; ++j) {
    const std::size_t m = n - j - 1;
    double tail = 0.0;
    for (std::size_t i = 1; i < m; ++i) tail += std::norm(a(j + 1 + i, j));
    if (tail == 0.0) continue;
    const Complex x0 = a(j + 1, j);
    const double sigma = std::sqrt(std::norm(x0) + tail);
    const Complex unit = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    const Complex alpha = -unit * sigma;

    for (std::size_t i = 0; i < m; ++i) v[i] = a(j + 1 + i, j);
    v[0] -= alpha;
    double vnorm = 0.0;
    for (std::size_t i = 0; i < m; ++i) vnorm += std::norm(v[i]);
    vnorm = std::sqrt(vnorm);
    for (std::size_t i = 0; i < m; ++i) v[i] /= vnorm;

    // B <- H B H with H = I - 2vv*, B the trailing block.
    for (std::size_t i = 0; i < m; ++i) {
      Complex s = 0.0;
      const Complex* row = &a(j + 1 + i, j + 1);
      for (std::size_t l = 0; l < m; ++l) s += row[l] * v[l];
      p[i] = s;
    }
    double kappa = 0.0;
    for (std::size_t i = 0; i < m; ++i) kappa += (std::conj(v[i]) * p[i]).real();
    for (std::size_t i = 0; i < m; ++i) p[i] -= kappa * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      Complex* row = &a(j + 1 + i, j + 1);
      const Complex vi2 = 2.0 * v[i];
      const Complex pi2 = 2.0 * p[i];
      for (std::size_t l = 0; l < m; ++l) row[l] -= vi2 * std::conj(p[l]) + pi2 * std::conj(v[l]);
    }
    a(j + 1, j) = alpha;
    a(j, j + 1) = std::conj(alpha);
    for (std::size_t i = 1; i < m; ++i) {
      a(j + 1 + i, j) = 0.0;
      a(j, j + 1 + i) = 0.0;
    }

    if (accumulate) {
      ComplexMatrix& q = t.reflectors;
      for (std::size_t row = 0; row < n; ++row) {
        Complex* qr = &q(row, j + 1);
        Complex s = 0.0;
        for (std::size_t l = 0; l < m; ++l) s += qr[l] * v[l];
        s *= 2.0;
        for (std::size_t l = 0; l < m; ++l) qr[l] -= s * std::conj(v[l]);
      }
    }
  }

  t.diag.resize(n);
  t.off.assign(n, 0.0);
  t.phase.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Complex e = a(i + 1, i);
    const double mag = std::abs(e);
    t.off[i] = mag;
    t.phase[i + 1] = mag > 0.0 ? t.phase[i] * e / mag : t.phase[i];
  }
  return t;
}

// Implicit QL on a real symmetric tridiagonal matrix. If `zt` is non-null it
// holds the transposed eigenvector matrix (row i = vector i) and is rotated
// along with the iteration.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>* zt) {
  const std::size_t n = d.size();
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (sweeps++ == kMaxSweeps) {
        throw ConvergenceError("hermitian_eigen: QL iteration exceeded " + std::to_string(kMaxSweeps) +
                               " sweeps at eigenvalue index " + std::to_string(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t ii = m; ii-- > l;) {
        const double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        if (zt) {
          double* zi = zt->data() + ii * n;
          double* zj = zt->data() + (ii + 1) * n;
          for (std::size_t k = 0; k < n; ++k) {
            const double fk = zj[k];
            zj[k] = s * zi[k] + c * fk;
            zi[k] = c * zi[k] - s * fk;
          }
        }
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

bool ComplexMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0.0) return false;
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Complex* orow = &out(i, 0);
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Complex ail = a(i, l);
      if (ail == 0.0) continue;
      const Complex* brow = &b(l, 0);
      for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += ail * brow[j];
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DomainError("Hermitian matrix must be square");
  const double scale = std::max(m_.max_abs(), 1e-300);
  const std::size_t n = m_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex a = m_(i, j);
      const Complex b = std::conj(m_(j, i));
      if (std::abs(a - b) > tolerance * scale) {
        throw DomainError("matrix is not Hermitian at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      const Complex mean = 0.5 * (a + b);
      m_(i, j) = mean;
      m_(j, i) = std::conj(mean);
    }
    m_(i, i) = m_(i, i).real();
  }
}

EigenDecomposition hermitian_eigen(const HermitianMatrix& h) {
  const std::size_t n = h.dimension();
  Tridiagonal t = tridiagonalize(h.matrix(), true);
  std::vector<double> zt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) zt[i * n + i] = 1.0;
  tridiagonal_ql(t.diag, t.off, &zt);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return t.diag[x] < t.diag[y]; });

  EigenDecomposition out;
  out.values.resize(n);
  // vectors = Q · diag(phase) · Z
  ComplexMatrix dz(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = t.diag[src];
    for (std::size_t row = 0; row < n; ++row) dz(row, col) = t.phase[row] * zt[src * n + row];
  }
  out.vectors = t.reflectors * dz;
  return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h) {
  Tridiagonal t = tridiagonalize(h.matrix(), false);
  tridiagonal_ql(t.diag, t.off, nullptr);
  std::sort(t.diag.begin(), t.diag.end());
  return t.diag;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.rows() == m.cols() && m.is_diagonal()) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) best = std::max(best, std::abs(m(i, i)));
    return best;
  }
  const auto gram = HermitianMatrix(m.adjoint() * m, 1e-10);
  const auto values = hermitian_eigenvalues(gram);
  return values.empty() ? 0.0 : std::sqrt(std::max(values.back(), 0.0));
}

}  // namespace semipos
