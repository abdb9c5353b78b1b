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

#include "gadsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gadsim {

namespace {

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

double ComplexVector::norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool ComplexVector::is_finite() const {
  for (const Complex& z : entries_) {
    if (!finite(z)) return false;
  }
  return true;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw std::invalid_argument("from_rows: ragged row lengths");
    }
    std::size_t j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

bool ComplexMatrix::is_finite() const {
  for (const Complex& z : entries_) {
    if (!finite(z)) return false;
  }
  return true;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void ComplexMatrix::set_column(std::size_t c, const ComplexVector& v) {
  if (v.dim() != rows_) {
    throw std::invalid_argument("set_column: length mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch (" +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scalar * m(i, j);
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator+: shape mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator-: shape mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.cols() != v.dim()) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("trace: non-square matrix");
  Complex sum{};
  for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
  return sum;
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  ComplexMatrix out(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::set<std::size_t>& keep) {
  if (!m.is_square()) {
    throw std::invalid_argument("partial_trace: non-square matrix");
  }
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (total != m.rows()) {
    throw std::invalid_argument(
        "partial_trace: product of dims does not match matrix dimension");
  }
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw std::invalid_argument("partial_trace: keep index out of range");
    }
  }

  const std::size_t ns = dims.size();
  std::size_t kept_dim = 1;
  for (std::size_t k : keep) kept_dim *= dims[k];

  // Mixed-radix digits, most-significant subsystem first.
  auto digits = [&](std::size_t index) {
    std::vector<std::size_t> d(ns);
    for (std::size_t s = ns; s-- > 0;) {
      d[s] = index % dims[s];
      index /= dims[s];
    }
    return d;
  };
  auto kept_index = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < ns; ++s) {
      if (keep.count(s)) idx = idx * dims[s] + d[s];
    }
    return idx;
  };

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto rd = digits(r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto cd = digits(c);
      bool traced_match = true;
      for (std::size_t s = 0; s < ns; ++s) {
        if (!keep.count(s) && rd[s] != cd[s]) {
          traced_match = false;
          break;
        }
      }
      if (traced_match) out(kept_index(rd), kept_index(cd)) += m(r, c);
    }
  }
  return out;
}

ComplexMatrix complete_isometry_to_unitary(const ComplexMatrix& v,
                                           double tol) {
  const std::size_t n = v.rows();
  const std::size_t k = v.cols();
  if (k > n) {
    throw std::invalid_argument(
        "complete_isometry_to_unitary: more columns than rows");
  }
  const ComplexMatrix gram = adjoint(v) * v;
  if (max_abs_diff(gram, ComplexMatrix::identity(k)) > tol) {
    throw std::invalid_argument(
        "complete_isometry_to_unitary: columns are not orthonormal");
  }

  ComplexMatrix u(n, n);
  std::vector<ComplexVector> cols;
  cols.reserve(n);
  for (std::size_t c = 0; c < k; ++c) cols.push_back(v.column(c));

  // Modified Gram-Schmidt over canonical basis vectors in index order.
  for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
    ComplexVector w(n);
    w[e] = 1.0;
    for (const ComplexVector& q : cols) {
      const Complex proj = inner(q, w);
      for (std::size_t i = 0; i < n; ++i) w[i] -= proj * q[i];
    }
    const double r = w.norm();
    if (r < 1e-8) continue;
    for (std::size_t i = 0; i < n; ++i) w[i] /= r;
    cols.push_back(w);
  }
  if (cols.size() != n) {
    throw std::runtime_error(
        "complete_isometry_to_unitary: completion failed");
  }
  for (std::size_t c = 0; c < n; ++c) u.set_column(c, cols[c]);
  return u;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) {
    throw std::invalid_argument("is_unitary: non-square matrix");
  }
  return max_abs_diff(adjoint(m) * m, ComplexMatrix::identity(m.rows())) <=
         tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) {
    throw std::invalid_argument("is_hermitian: non-square matrix");
  }
  return max_abs_diff(m, adjoint(m)) <= tol;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  const std::vector<double> evs = hermitian_eigenvalues(m);
  return evs.empty() || evs.front() >= -tol;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("hermitian_eigenvalues: non-square matrix");
  }
  const std::size_t n = m.rows();

  // Work on the Hermitian part; the diagonal is kept real explicitly.
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(h(i, i)));
  scale = std::max(scale, max_abs(h));
  const double stop = (scale > 0 ? scale : 1.0) * 1e-15;

  // Classical Jacobi: zero the largest off-diagonal entry per rotation.
  for (int iter = 0; iter < 200 * static_cast<int>(n * n); ++iter) {
    std::size_t p = 0, q = 1;
    double off = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(h(i, j)) > off) {
          off = std::abs(h(i, j));
          p = i;
          q = j;
        }
    if (n < 2 || off <= stop) break;

    const Complex g = h(p, q);
    const double absg = std::abs(g);
    const Complex phase = g / absg;  // e^{i phi}

    // Rotate the phase out of column q so the 2x2 block becomes real.
    for (std::size_t i = 0; i < n; ++i) {
      h(i, q) *= std::conj(phase);
      h(q, i) *= phase;
    }

    const double alpha = h(p, p).real();
    const double beta = h(q, q).real();
    const double tau = (beta - alpha) / (2.0 * absg);
    double t;
    if (std::abs(tau) > 1e8) {
      t = -1.0 / (2.0 * tau);
    } else {
      t = (tau >= 0) ? tau - std::sqrt(tau * tau + 1.0)
                     : tau + std::sqrt(tau * tau + 1.0);
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // h <- G^dagger h G with G = [[c, -s], [s, c]] on rows/cols (p, q).
    for (std::size_t i = 0; i < n; ++i) {
      const Complex hip = h(i, p);
      const Complex hiq = h(i, q);
      h(i, p) = c * hip + s * hiq;
      h(i, q) = -s * hip + c * hiq;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Complex hpi = h(p, i);
      const Complex hqi = h(q, i);
      h(p, i) = c * hpi + s * hqi;
      h(q, i) = -s * hpi + c * hqi;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
  }

  std::vector<double> evs(n);
  for (std::size_t i = 0; i < n; ++i) evs[i] = h(i, i).real();
  std::sort(evs.begin(), evs.end());
  return evs;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double out = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out = std::max(out, std::abs(a(i, j) - b(i, j)));
  return out;
}

double max_abs(const ComplexMatrix& m) {
  double out = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out = std::max(out, std::abs(m(i, j)));
  return out;
}

}  // namespace gadsim
