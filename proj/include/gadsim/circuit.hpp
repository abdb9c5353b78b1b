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

#include "gadsim/channel.hpp"

namespace gadsim {

/// One circuit gate. Wire 0 is the most-significant tensor factor,
/// consistent with the rest of the library. CONTROLLED_U exists as a testing
/// oracle; the noise-simulator constructions use only {CNOT, RY}.
struct Gate {
  enum class Kind { X, Ry, Cnot, ControlledU };

  Kind kind;
  std::size_t target = 0;
  std::size_t control = 0;  // Cnot / ControlledU
  double angle = 0.0;       // Ry, radians; no normalization applied
  ComplexMatrix unitary;    // ControlledU, 2x2

  static Gate x(std::size_t wire);
  static Gate ry(std::size_t wire, double angle);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate controlled_u(std::size_t control, std::size_t target,
                           ComplexMatrix u);
};

/// Ordered gate list over 1-3 wires. Gates apply in list order: the total
/// unitary is G_n ... G_2 G_1, matching circuit-diagram reading order.
class Circuit {
 public:
  explicit Circuit(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Validates wire bounds and control/target distinctness.
  void append(Gate gate);
  void append(const Circuit& other);

  std::size_t count(Gate::Kind kind) const;

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
};

ComplexMatrix pauli_x();

/// R_y(xi) = [[cos(xi/2), -sin(xi/2)], [sin(xi/2), cos(xi/2)]].
ComplexMatrix ry_matrix(double xi);

/// Rotation angle realizing the attenuator block: xi = -arcsin(sqrt(gamma)),
/// in [-pi/2, 0].
double xi_from_gamma(double gamma);

/// Prep-rotation angle xi_p = 2 arccos(sqrt(p)) in [0, pi], chosen so that
/// R_y(xi_p)|0> = sqrt(p)|0> + sqrt(1-p)|1>.
double xi_p_from_p(double p);

/// Controlled-Utilde from two CNOTs and two rotations, in time order:
/// CNOT, RY(-xi) on target, CNOT, RY(xi) on target. With the control at |1>
/// the target sees R_y(xi) X R_y(-xi) X = R_y(2 xi) = Utilde; with the
/// control at |0> it sees R_y(xi) R_y(-xi) = I.
Circuit controlled_u_circuit(double xi, std::size_t control,
                             std::size_t target);

/// Decomposition of u_thermal(gamma) on the wire pair (qwire, ewire):
/// CNOT(qwire -> ewire), controlled-Utilde with control ewire and target
/// qwire, CNOT(qwire -> ewire).
Circuit u_thermal_circuit(double gamma, std::size_t qwire, std::size_t ewire);

/// The full three-wire thermal-noise simulator (wires Q=0, E=1, A=2):
/// RY(xi_p) on A preparing |p>, the purifying CNOT(A -> E), then the
/// u_thermal decomposition on (Q, E). Census: 5 CNOT + 2 RY after the prep
/// rotation.
Circuit gad_simulator_circuit(const GadParams& params);

/// Variant without the prep rotation, for callers supplying the environment
/// state directly (E at |0>, A at |p>) when simulating.
Circuit gad_simulator_circuit_prepared(double gamma);

/// Product of gate embeddings in application order.
ComplexMatrix circuit_unitary(const Circuit& c);

/// Embed input_rho on the principal wire and |env_init><env_init| on the
/// remaining wires (in wire order), conjugate by the circuit unitary, and
/// trace out everything but the principal wire.
DensityOperator simulate_channel(const Circuit& c,
                                 const DensityOperator& input_rho,
                                 std::size_t principal,
                                 const PureState& env_init);

}  // namespace gadsim
