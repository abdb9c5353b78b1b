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

#include "gadsim/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gadsim {

void validate(const GadParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw std::invalid_argument("GadParams: p must be in [0, 1], got " +
                                std::to_string(params.p));
  }
  if (!(params.gamma >= 0.0 && params.gamma <= 1.0)) {
    throw std::invalid_argument("GadParams: gamma must be in [0, 1], got " +
                                std::to_string(params.gamma));
  }
}

namespace {

void check_operator_shapes(const std::vector<ComplexMatrix>& operators) {
  if (operators.empty()) {
    throw std::invalid_argument("KrausChannel: empty operator list");
  }
  const std::size_t dim = operators.front().rows();
  for (const ComplexMatrix& op : operators) {
    if (!op.is_square() || op.rows() != dim) {
      throw std::invalid_argument(
          "KrausChannel: operators must be square and share one dimension");
    }
    if (!op.is_finite()) {
      throw std::invalid_argument("KrausChannel: non-finite operator entry");
    }
  }
}

double completeness_residual(const std::vector<ComplexMatrix>& operators) {
  const std::size_t dim = operators.front().rows();
  ComplexMatrix sum(dim, dim);
  for (const ComplexMatrix& op : operators) sum = sum + adjoint(op) * op;
  return max_abs_diff(sum, ComplexMatrix::identity(dim));
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : KrausChannel(std::move(operators), unchecked_tag{}) {
  const double residual = completeness_residual(operators_);
  if (residual > kCompletenessTol) {
    throw std::invalid_argument(
        "KrausChannel: completeness violated, residual " +
        std::to_string(residual));
  }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators,
                           unchecked_tag)
    : operators_(std::move(operators)) {
  check_operator_shapes(operators_);
}

KrausChannel KrausChannel::unchecked(std::vector<ComplexMatrix> operators) {
  return KrausChannel(std::move(operators), unchecked_tag{});
}

KrausChannel gad_kraus(const GadParams& params) {
  validate(params);
  const double sp = std::sqrt(params.p);
  const double sq = std::sqrt(1.0 - params.p);
  const double sg = std::sqrt(params.gamma);
  const double sgbar = std::sqrt(1.0 - params.gamma);

  ComplexMatrix l1(2, 2), l2(2, 2), l3(2, 2), l4(2, 2);
  l1(0, 0) = sp;
  l1(1, 1) = sp * sgbar;
  l2(0, 1) = sp * sg;
  l3(0, 0) = sq * sgbar;
  l3(1, 1) = sq;
  l4(1, 0) = sq * sg;
  return KrausChannel({l1, l2, l3, l4});
}

DensityOperator apply_channel(const KrausChannel& ch,
                              const DensityOperator& rho) {
  if (ch.dim() != rho.dim()) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const ComplexMatrix& op : ch.operators()) {
    out = out + op * rho.matrix() * adjoint(op);
  }
  return DensityOperator(std::move(out));
}

DensityOperator gad_closed_form(const GadParams& params,
                                const DensityOperator& rho) {
  validate(params);
  if (rho.dim() != 2) {
    throw std::invalid_argument("gad_closed_form: input must be one qubit");
  }
  const double g = params.gamma;
  const double p = params.p;
  const Complex r00 = rho(0, 0);
  const Complex r01 = rho(0, 1);
  const double sgbar = std::sqrt(1.0 - g);

  ComplexMatrix out(2, 2);
  out(0, 0) = (1.0 - g) * r00 + g * p;
  out(0, 1) = sgbar * r01;
  out(1, 0) = sgbar * std::conj(r01);
  out(1, 1) = 1.0 - out(0, 0);
  return DensityOperator(std::move(out));
}

double p_from_temperature(const ThermalBathSpec& bath) {
  if (!(bath.energy_gap > 0.0) || !std::isfinite(bath.energy_gap)) {
    throw std::invalid_argument(
        "p_from_temperature: energy gap must be finite and positive");
  }
  if (!(bath.temperature > 0.0) || !std::isfinite(bath.temperature)) {
    throw std::invalid_argument(
        "p_from_temperature: temperature must be finite and positive");
  }
  if (!(bath.boltzmann_constant > 0.0) ||
      !std::isfinite(bath.boltzmann_constant)) {
    throw std::invalid_argument(
        "p_from_temperature: k_B must be finite and positive");
  }
  const double ratio =
      bath.energy_gap / (bath.boltzmann_constant * bath.temperature);
  return 1.0 / (1.0 + std::exp(-ratio));
}

double gamma_from_time(const RelaxationSpec& rel) {
  if (!(rel.interaction_time >= 0.0) || !std::isfinite(rel.interaction_time)) {
    throw std::invalid_argument(
        "gamma_from_time: interaction time must be finite and >= 0");
  }
  if (!(rel.tau1 > 0.0) || !std::isfinite(rel.tau1)) {
    throw std::invalid_argument("gamma_from_time: tau1 must be positive");
  }
  return -std::expm1(-rel.interaction_time / rel.tau1);
}

CptpReport validate_cptp(const std::vector<ComplexMatrix>& operators,
                         double tol) {
  check_operator_shapes(operators);
  CptpReport report;
  report.completeness_residual = completeness_residual(operators);
  report.operator_norms.reserve(operators.size());
  for (const ComplexMatrix& op : operators) {
    const std::vector<double> evs = hermitian_eigenvalues(adjoint(op) * op);
    report.operator_norms.push_back(std::sqrt(std::max(0.0, evs.back())));
  }
  report.passes = report.completeness_residual <= tol;
  return report;
}

CptpReport validate_cptp(const KrausChannel& ch, double tol) {
  return validate_cptp(ch.operators(), tol);
}

}  // namespace gadsim
