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

#ifndef SEMIPOS_HERMITIAN_HPP_
#define SEMIPOS_HERMITIAN_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace semipos {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ComplexMatrix adjoint() const;
  bool is_diagonal() const;
  double max_abs() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(double s, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Square matrix with entries(i, j) == conj(entries(j, i)). Construction
/// checks the symmetry to `tolerance` times the largest entry and then
/// stores the exactly symmetrized matrix, so diagonal entries are real.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m, double tolerance = 1e-12);

  std::size_t dimension() const { return m_.rows(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column j belongs to values[j]
};

/// Householder reduction to real tridiagonal form followed by implicit
/// QL with Wilkinson shifts. At most 30 QL sweeps per eigenvalue; beyond
/// that ConvergenceError names the eigenvalue index.
EigenDecomposition hermitian_eigen(const HermitianMatrix& m);

/// Eigenvalues only (ascending); skips all vector accumulation.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

/// Largest singular value. Diagonal matrices are read off directly.
double spectral_norm(const ComplexMatrix& m);

}  // namespace semipos

#endif  // SEMIPOS_HERMITIAN_HPP_
