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

#include "gadsim/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gadsim {

namespace {

bool valid_qubit_dim(std::size_t dim) {
  return dim == 2 || dim == 4 || dim == 8;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (!valid_qubit_dim(amplitudes_.dim())) {
    throw std::invalid_argument("PureState: dimension must be 2, 4 or 8, got " +
                                std::to_string(amplitudes_.dim()));
  }
  if (!amplitudes_.is_finite()) {
    throw std::invalid_argument("PureState: non-finite amplitude");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("PureState: vector is not normalized");
  }
}

PureState PureState::ket0() { return PureState(ComplexVector{1.0, 0.0}); }
PureState PureState::ket1() { return PureState(ComplexVector{0.0, 1.0}); }

PureState PureState::plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState(ComplexVector{r, r});
}

PureState PureState::minus() {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState(ComplexVector{r, -r});
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || !valid_qubit_dim(matrix_.rows())) {
    throw std::invalid_argument("DensityOperator: matrix must be square with "
                                "dimension 2, 4 or 8");
  }
  if (!matrix_.is_finite()) {
    throw std::invalid_argument("DensityOperator: non-finite entry");
  }
  if (!is_hermitian(matrix_, kHermitianTol)) {
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  }
  if (std::abs(trace(matrix_) - Complex{1.0}) > kTraceTol) {
    throw std::invalid_argument("DensityOperator: trace is not 1");
  }
  if (!is_psd(matrix_, kPsdTol)) {
    throw std::invalid_argument(
        "DensityOperator: matrix is not positive semidefinite");
  }
}

DensityOperator pure_to_density(const PureState& s) {
  return DensityOperator(outer(s.vector(), s.vector()));
}

PureState ket_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("ket_p: p must be in [0, 1], got " +
                                std::to_string(p));
  }
  return PureState(ComplexVector{std::sqrt(p), std::sqrt(1.0 - p)});
}

DensityOperator equilibrium_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("equilibrium_state: p must be in [0, 1]");
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = p;
  m(1, 1) = 1.0 - p;
  return DensityOperator(m);
}

double overlap_probability(const DensityOperator& state,
                           const PureState& reference) {
  if (state.dim() != reference.dim()) {
    throw std::invalid_argument("overlap_probability: dimension mismatch");
  }
  const ComplexVector rho_ref = state.matrix() * reference.vector();
  const double value = inner(reference.vector(), rho_ref).real();
  if (value < -1e-8 || value > 1.0 + 1e-8) {
    throw std::runtime_error("overlap_probability: value " +
                             std::to_string(value) +
                             " is outside [0, 1] beyond tolerance");
  }
  return std::min(1.0, std::max(0.0, value));
}

PureState random_pure_state(SplitMix64& rng, std::size_t dim) {
  ComplexVector v(dim);
  double norm_sq = 0.0;
  do {
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = Complex{rng.next_double(-1.0, 1.0), rng.next_double(-1.0, 1.0)};
    }
    norm_sq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm_sq += std::norm(v[i]);
  } while (norm_sq < 1e-6);
  const double norm = std::sqrt(norm_sq);
  for (std::size_t i = 0; i < dim; ++i) v[i] /= norm;
  return PureState(std::move(v));
}

DensityOperator random_density_operator(SplitMix64& rng, std::size_t dim) {
  ComplexMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a(i, j) = Complex{rng.next_double(-1.0, 1.0),
                        rng.next_double(-1.0, 1.0)};
  ComplexMatrix rho = a * adjoint(a);
  const double tr = trace(rho).real();
  rho = Complex{1.0 / tr} * rho;
  return DensityOperator(std::move(rho));
}

}  // namespace gadsim
