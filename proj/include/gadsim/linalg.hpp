// Copyright 2026 The gadsim Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <vector>

namespace gadsim {

using Complex = std::complex<double>;

// Default tolerances for the structural checks below. The largest matrix in
// this library is 8x8, so double-precision roundoff sits far below these.
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

/// Dense complex column vector.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : entries_(dim) {}
  ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {}
  explicit ComplexVector(std::vector<Complex> entries)
      : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  double norm() const;
  bool is_finite() const;

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::vector<Complex> entries_;
};

/// Dense complex matrix, row-major. No sparse paths: every matrix in this
/// library has dimension 2, 4 or 8.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  /// Build from nested row lists: ComplexMatrix::from_rows({{1,0},{0,1}}).
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_finite() const;

  ComplexVector column(std::size_t c) const;
  void set_column(std::size_t c, const ComplexVector& v);

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Arithmetic. matmul throws on inner-dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

/// Conjugate transpose. Exact involution: adjoint(adjoint(a)) == a bitwise.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Kronecker product with `a` as the more-significant factor, matching the
/// ket convention used throughout: the leftmost tensor factor owns the
/// most-significant index block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

Complex trace(const ComplexMatrix& m);

/// Outer product |a><b|.
ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);

/// <a|b> with the conjugate on the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);

/// Reduce a multipartite operator to the `keep` subsystems. `dims` lists the
/// subsystem dimensions, most-significant factor first; their product must
/// equal the matrix dimension. Trace is preserved: tr(result) == tr(m).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::set<std::size_t>& keep);

/// Extend a matrix with orthonormal columns to a full square unitary whose
/// first v.cols() columns are v's columns. Deterministic: the remaining
/// columns come from modified Gram-Schmidt over the canonical basis vectors
/// taken in index order, skipping candidates whose residual norm falls
/// below 1e-8. Throws if v's columns are not orthonormal within `tol`.
ComplexMatrix complete_isometry_to_unitary(const ComplexMatrix& v,
                                           double tol = kUnitaryTol);

bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Positive semidefiniteness of the Hermitian part: all eigenvalues >= -tol.
bool is_psd(const ComplexMatrix& m, double tol = kPsdTol);

/// Eigenvalues of the Hermitian part of m, ascending. Classical Jacobi
/// iteration; fine for dimension <= 8.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// max_ij |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij|.
double max_abs(const ComplexMatrix& m);

}  // namespace gadsim
