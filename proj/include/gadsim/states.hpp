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

#include "gadsim/linalg.hpp"
#include "gadsim/rng.hpp"

namespace gadsim {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

/// Normalized pure state on 1-3 qubits. States are stored as given; no
/// canonical global-phase normalization (equality tests should compare
/// density operators instead).
class PureState {
 public:
  /// Throws unless dim is 2, 4 or 8 and the norm is 1 within 1e-10.
  explicit PureState(ComplexVector amplitudes);

  std::size_t dim() const { return amplitudes_.dim(); }
  const ComplexVector& vector() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  static PureState ket0();
  static PureState ket1();
  static PureState plus();
  static PureState minus();

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, PSD, trace-1 operator on 1-3 qubits. The constructor enforces
/// all three invariants (Hermitian and trace within 1e-10, eigenvalue floor
/// -1e-9).
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return matrix_(r, c);
  }

 private:
  ComplexMatrix matrix_;
};

/// |s><s|.
DensityOperator pure_to_density(const PureState& s);

/// sqrt(p)|0> + sqrt(1-p)|1>. Throws if p is outside [0, 1].
PureState ket_p(double p);

/// The thermalized mixed state diag(p, 1-p). Throws if p is outside [0, 1].
DensityOperator equilibrium_state(double p);

/// <ref| state |ref>, clamped to [0, 1]. Values outside by more than 1e-8
/// indicate a broken input and throw, so floating-point dust never leaks
/// into downstream binomial sampling.
double overlap_probability(const DensityOperator& state,
                           const PureState& reference);

/// Haar-ish random pure state: normalized vector of standard-normal-free
/// uniform complex amplitudes. Deterministic for a given generator state.
PureState random_pure_state(SplitMix64& rng, std::size_t dim);

/// Random full-rank density operator via A A^dagger / tr(A A^dagger).
DensityOperator random_density_operator(SplitMix64& rng, std::size_t dim);

}  // namespace gadsim
