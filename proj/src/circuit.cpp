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

#include "gadsim/circuit.hpp"

#include "gadsim/dilation.hpp"

#include <cmath>
#include <stdexcept>

namespace gadsim {

Gate Gate::x(std::size_t wire) {
  Gate g;
  g.kind = Kind::X;
  g.target = wire;
  return g;
}

Gate Gate::ry(std::size_t wire, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("Gate::ry: angle must be finite");
  }
  Gate g;
  g.kind = Kind::Ry;
  g.target = wire;
  g.angle = angle;
  return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
  Gate g;
  g.kind = Kind::Cnot;
  g.control = control;
  g.target = target;
  return g;
}

Gate Gate::controlled_u(std::size_t control, std::size_t target,
                        ComplexMatrix u) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, kUnitaryTol)) {
    throw std::invalid_argument("Gate::controlled_u: u must be 2x2 unitary");
  }
  Gate g;
  g.kind = Kind::ControlledU;
  g.control = control;
  g.target = target;
  g.unitary = std::move(u);
  return g;
}

Circuit::Circuit(std::size_t width) : width_(width) {
  if (width < 1 || width > 3) {
    throw std::invalid_argument("Circuit: width must be 1, 2 or 3");
  }
}

void Circuit::append(Gate gate) {
  if (gate.target >= width_) {
    throw std::invalid_argument("Circuit::append: target wire out of range");
  }
  if (gate.kind == Gate::Kind::Cnot || gate.kind == Gate::Kind::ControlledU) {
    if (gate.control >= width_) {
      throw std::invalid_argument(
          "Circuit::append: control wire out of range");
    }
    if (gate.control == gate.target) {
      throw std::invalid_argument(
          "Circuit::append: control and target must differ");
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.width_ > width_) {
    throw std::invalid_argument("Circuit::append: width mismatch");
  }
  for (const Gate& g : other.gates_) append(g);
}

std::size_t Circuit::count(Gate::Kind kind) const {
  std::size_t n = 0;
  for (const Gate& g : gates_) {
    if (g.kind == kind) ++n;
  }
  return n;
}

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix ry_matrix(double xi) {
  if (!std::isfinite(xi)) {
    throw std::invalid_argument("ry_matrix: angle must be finite");
  }
  const double c = std::cos(xi / 2.0);
  const double s = std::sin(xi / 2.0);
  return ComplexMatrix::from_rows({{c, -s}, {s, c}});
}

double xi_from_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("xi_from_gamma: gamma must be in [0, 1]");
  }
  return -std::asin(std::sqrt(gamma));
}

double xi_p_from_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("xi_p_from_p: p must be in [0, 1]");
  }
  return 2.0 * std::acos(std::sqrt(p));
}

Circuit controlled_u_circuit(double xi, std::size_t control,
                             std::size_t target) {
  Circuit c(std::max(control, target) + 1);
  c.append(Gate::cnot(control, target));
  c.append(Gate::ry(target, -xi));
  c.append(Gate::cnot(control, target));
  c.append(Gate::ry(target, xi));
  return c;
}

Circuit u_thermal_circuit(double gamma, std::size_t qwire,
                          std::size_t ewire) {
  if (qwire == ewire) {
    throw std::invalid_argument("u_thermal_circuit: wires must differ");
  }
  const double xi = xi_from_gamma(gamma);
  Circuit c(std::max(qwire, ewire) + 1);
  c.append(Gate::cnot(qwire, ewire));
  c.append(controlled_u_circuit(xi, ewire, qwire));
  c.append(Gate::cnot(qwire, ewire));
  return c;
}

Circuit gad_simulator_circuit(const GadParams& params) {
  validate(params);
  Circuit c(3);
  c.append(Gate::ry(2, xi_p_from_p(params.p)));
  c.append(gad_simulator_circuit_prepared(params.gamma));
  return c;
}

Circuit gad_simulator_circuit_prepared(double gamma) {
  Circuit c(3);
  c.append(Gate::cnot(2, 1));  // purification: entangle A with E
  c.append(u_thermal_circuit(gamma, 0, 1));
  return c;
}

namespace {

// Tensor embedding with `factors[w]` on wire w (identity where null).
ComplexMatrix embed(std::size_t width,
                    const std::vector<const ComplexMatrix*>& factors) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  for (std::size_t w = 0; w < width; ++w) {
    out = kron(out, factors[w] ? *factors[w] : id2);
  }
  return out;
}

ComplexMatrix gate_matrix(std::size_t width, const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::X: {
      const ComplexMatrix x = pauli_x();
      std::vector<const ComplexMatrix*> f(width, nullptr);
      f[g.target] = &x;
      return embed(width, f);
    }
    case Gate::Kind::Ry: {
      const ComplexMatrix r = ry_matrix(g.angle);
      std::vector<const ComplexMatrix*> f(width, nullptr);
      f[g.target] = &r;
      return embed(width, f);
    }
    case Gate::Kind::Cnot:
    case Gate::Kind::ControlledU: {
      const ComplexMatrix u =
          g.kind == Gate::Kind::Cnot ? pauli_x() : g.unitary;
      const ComplexMatrix p0 = ComplexMatrix::from_rows({{1.0, 0.0},
                                                         {0.0, 0.0}});
      const ComplexMatrix p1 = ComplexMatrix::from_rows({{0.0, 0.0},
                                                         {0.0, 1.0}});
      std::vector<const ComplexMatrix*> f0(width, nullptr);
      f0[g.control] = &p0;
      std::vector<const ComplexMatrix*> f1(width, nullptr);
      f1[g.control] = &p1;
      f1[g.target] = &u;
      return embed(width, f0) + embed(width, f1);
    }
  }
  throw std::logic_error("gate_matrix: unknown gate kind");
}

}  // namespace

ComplexMatrix circuit_unitary(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.width();
  ComplexMatrix u = ComplexMatrix::identity(dim);
  for (const Gate& g : c.gates()) {
    u = gate_matrix(c.width(), g) * u;
  }
  return u;
}

DensityOperator simulate_channel(const Circuit& c,
                                 const DensityOperator& input_rho,
                                 std::size_t principal,
                                 const PureState& env_init) {
  if (principal >= c.width()) {
    throw std::invalid_argument("simulate_channel: principal wire out of "
                                "range");
  }
  const std::size_t dim = std::size_t{1} << c.width();
  if (input_rho.dim() * env_init.dim() != dim) {
    throw std::invalid_argument(
        "simulate_channel: input and environment dimensions do not fill "
        "the circuit");
  }
  const DilatedModel model{std::vector<std::size_t>(c.width(), 2), principal,
                           env_init, circuit_unitary(c)};
  return reduce(model, input_rho);
}

}  // namespace gadsim
