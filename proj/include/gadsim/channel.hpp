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

#include <vector>

#include "gadsim/states.hpp"

namespace gadsim {

inline constexpr double kCompletenessTol = 1e-10;

/// Parameters of the generalized-amplitude-damping (thermal) channel:
/// p is the equilibrium ground-state probability, gamma the damping or
/// coupling factor. Both live in [0, 1].
struct GadParams {
  double p;
  double gamma;
};

/// Throws if either parameter is outside [0, 1] or non-finite.
void validate(const GadParams& params);

/// Ordered set of Kraus operators Lambda_1..Lambda_K. The primary
/// constructor enforces the completeness relation sum_k L_k^dagger L_k = I
/// within 1e-10; zero operators are legal members (the dilation relies on a
/// fixed operator count to keep the environment dimension fixed).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators);

  /// Skips the completeness check (still requires square, equal-dim
  /// operators). For building non-CPTP foils to feed validate_cptp.
  static KrausChannel unchecked(std::vector<ComplexMatrix> operators);

  std::size_t size() const { return operators_.size(); }
  std::size_t dim() const { return operators_.front().rows(); }
  const ComplexMatrix& operator[](std::size_t k) const {
    return operators_[k];
  }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

 private:
  struct unchecked_tag {};
  KrausChannel(std::vector<ComplexMatrix> operators, unchecked_tag);

  std::vector<ComplexMatrix> operators_;
};

/// Thermal bath connecting temperature to the equilibrium probability p.
/// The mapping only depends on energy_gap / (k_B * T); leave
/// boltzmann_constant at 1 for dimensionless ratios, or set it to the SI
/// value 1.380649e-23 J/K for physical units.
struct ThermalBathSpec {
  double energy_gap;
  double temperature;
  double boltzmann_constant = 1.0;
};

/// Interaction time t against the relaxation time constant tau1.
struct RelaxationSpec {
  double interaction_time;
  double tau1;
};

/// The four GAD Kraus operators in fixed order Lambda_1..Lambda_4:
///   L1 = sqrt(p)   [[1, 0], [0, sqrt(1-g)]]
///   L2 = sqrt(p)   [[0, sqrt(g)], [0, 0]]
///   L3 = sqrt(1-p) [[sqrt(1-g), 0], [0, 1]]
///   L4 = sqrt(1-p) [[0, 0], [sqrt(g), 0]]
/// The dilation maps this order onto the environment basis |00>..|11>.
KrausChannel gad_kraus(const GadParams& params);

/// Operator-sum application: sum_k L_k rho L_k^dagger.
DensityOperator apply_channel(const KrausChannel& ch,
                              const DensityOperator& rho);

/// Closed-form channel output for a single qubit:
///   [[(1-g) r00 + g p,        sqrt(1-g) r01       ],
///    [ sqrt(1-g) conj(r01),   1 - (1-g) r00 - g p ]]
/// Serves as the oracle for every other representation.
DensityOperator gad_closed_form(const GadParams& params,
                                const DensityOperator& rho);

/// Boltzmann map p = 1 / (1 + exp(-gap / (k_B T))). Monotone decreasing in
/// T, from 1 (T -> 0) down to 1/2 (T -> infinity). Throws on nonpositive
/// gap, temperature or k_B; use p = 1 or p = 1/2 directly instead of the
/// T = 0 / T = infinity endpoints.
double p_from_temperature(const ThermalBathSpec& bath);

/// gamma = 1 - exp(-t / tau1). Throws on t < 0 or tau1 <= 0.
double gamma_from_time(const RelaxationSpec& rel);

/// Completeness diagnostics for an arbitrary operator list.
struct CptpReport {
  double completeness_residual;        // max-norm of sum L^dag L - I
  std::vector<double> operator_norms;  // spectral norm of each operator
  bool passes;                         // residual <= tolerance
};

CptpReport validate_cptp(const std::vector<ComplexMatrix>& operators,
                         double tol = kCompletenessTol);
CptpReport validate_cptp(const KrausChannel& ch,
                         double tol = kCompletenessTol);

}  // namespace gadsim
