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

#include "gadsim/sweep.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "gadsim/qasm.hpp"

namespace gadsim {

namespace {

PureState two_qubit_zero() {
  ComplexVector v(4);
  v[0] = 1.0;
  return PureState(std::move(v));
}

void validate_spec(const SweepSpec& spec) {
  if (spec.grid.empty()) {
    throw std::invalid_argument("run_sweep: empty grid");
  }
  for (double v : spec.grid) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("run_sweep: grid value outside [0, 1]");
    }
  }
  if (!(spec.fixed >= 0.0 && spec.fixed <= 1.0)) {
    throw std::invalid_argument("run_sweep: fixed value outside [0, 1]");
  }
  if (spec.input_state.dim() != 2 || spec.reference_state.dim() != 2) {
    throw std::invalid_argument("run_sweep: states must be single-qubit");
  }
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  validate_spec(spec);

  const DensityOperator rho_in = pure_to_density(spec.input_state);
  const PureState env = two_qubit_zero();

  SweepResult result;
  result.seed = spec.seed;
  result.rows.reserve(spec.grid.size());
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double v = spec.grid[i];
    const GadParams params = spec.vary == SweepSpec::Vary::P
                                 ? GadParams{v, spec.fixed}
                                 : GadParams{spec.fixed, v};
    const Circuit circuit = gad_simulator_circuit(params);
    const double exact = overlap_probability(
        simulate_channel(circuit, rho_in, 0, env), spec.reference_state);
    const double theory = overlap_probability(
        gad_closed_form(params, rho_in), spec.reference_state);

    SweepRow row{v, exact, theory, std::nullopt, spec.shots};
    if (spec.shots > 0) {
      const std::uint64_t count =
          sample_shots(exact, spec.shots, SplitMix64::derive(spec.seed, i));
      row.sampled_freq = static_cast<double>(count) /
                         static_cast<double>(spec.shots);
    }
    result.rows.push_back(row);
  }
  return result;
}

std::uint64_t sample_shots(double probability, std::uint64_t shots,
                           std::uint64_t seed) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw std::invalid_argument("sample_shots: probability outside [0, 1]");
  }
  SplitMix64 rng(seed);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    if (rng.next_double() < probability) ++count;
  }
  return count;
}

std::string to_csv(const SweepResult& result) {
  if (result.rows.empty()) {
    throw std::invalid_argument("to_csv: empty sweep result");
  }
  bool sampled = false;
  for (const SweepRow& row : result.rows) {
    if (row.sampled_freq) sampled = true;
  }
  std::string out;
  if (sampled) out += "# seed=" + std::to_string(result.seed) + "\n";
  out += "param,exact,theory,sampled_freq,shots\n";
  for (const SweepRow& row : result.rows) {
    out += format_g12(row.param) + "," + format_g12(row.exact) + "," +
           format_g12(row.theory) + ",";
    if (row.sampled_freq) out += format_g12(*row.sampled_freq);
    out += "," + std::to_string(row.shots) + "\n";
  }
  return out;
}

void export_csv(const SweepResult& result, const std::string& path) {
  const std::string text = to_csv(result);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("export_csv: cannot open '" + path +
                             "' for writing");
  }
  file << text;
  file.flush();
  if (!file) {
    throw std::runtime_error("export_csv: write to '" + path + "' failed");
  }
}

EquivalenceReport four_way_equivalence(std::size_t grid_steps,
                                       std::uint64_t seed) {
  if (grid_steps < 2) {
    throw std::invalid_argument("four_way_equivalence: need >= 2 grid steps");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SplitMix64 rng(seed);
  std::vector<DensityOperator> inputs;
  inputs.push_back(pure_to_density(PureState::ket0()));
  inputs.push_back(pure_to_density(PureState::ket1()));
  inputs.push_back(pure_to_density(PureState::plus()));
  inputs.push_back(pure_to_density(PureState::minus()));
  inputs.push_back(pure_to_density(
      PureState(ComplexVector{inv_sqrt2, Complex{0.0, inv_sqrt2}})));
  inputs.push_back(random_density_operator(rng, 2));

  const PureState env = two_qubit_zero();
  EquivalenceReport report;
  report.inputs = inputs.size();

  for (std::size_t ip = 0; ip < grid_steps; ++ip) {
    for (std::size_t ig = 0; ig < grid_steps; ++ig) {
      const GadParams params{
          static_cast<double>(ip) / static_cast<double>(grid_steps - 1),
          static_cast<double>(ig) / static_cast<double>(grid_steps - 1)};
      const KrausChannel kraus = gad_kraus(params);
      const DilatedModel canonical = canonical_dilation(kraus);
      const Circuit circuit = gad_simulator_circuit(params);
      ++report.grid_points;

      for (const DensityOperator& rho : inputs) {
        const DensityOperator via_kraus = apply_channel(kraus, rho);
        const DensityOperator closed = gad_closed_form(params, rho);
        const DensityOperator via_dilation = reduce(canonical, rho);
        const DensityOperator via_circuit =
            simulate_channel(circuit, rho, 0, env);

        const double residual = std::max(
            {max_abs_diff(via_kraus.matrix(), closed.matrix()),
             max_abs_diff(via_kraus.matrix(), via_dilation.matrix()),
             max_abs_diff(via_kraus.matrix(), via_circuit.matrix()),
             max_abs_diff(closed.matrix(), via_dilation.matrix()),
             max_abs_diff(closed.matrix(), via_circuit.matrix()),
             max_abs_diff(via_dilation.matrix(), via_circuit.matrix())});
        report.max_residual = std::max(report.max_residual, residual);
      }
    }
  }
  return report;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("grid must have the form start:stop:step");
  }
  double start, stop, step;
  try {
    std::size_t used = 0;
    start = std::stod(text.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("");
    const std::string stop_str = text.substr(first + 1, second - first - 1);
    stop = std::stod(stop_str, &used);
    if (used != stop_str.size()) throw std::invalid_argument("");
    const std::string step_str = text.substr(second + 1);
    step = std::stod(step_str, &used);
    if (used != step_str.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must contain three numbers: "
                                "start:stop:step");
  }

  if (start < 0.0 || start > 1.0 || stop < 0.0 || stop > 1.0) {
    throw std::invalid_argument("grid endpoints must lie in [0, 1]");
  }
  if (stop < start) {
    throw std::invalid_argument("grid stop must be >= start");
  }
  if (start == stop) return {start};
  if (!(step > 0.0)) {
    throw std::invalid_argument("grid step must be positive");
  }

  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-12) break;
    if (std::abs(v - stop) <= 1e-12) v = stop;
    grid.push_back(v);
    if (v == stop) break;
  }
  return grid;
}

PureState parse_state_token(const std::string& token,
                            double* norm_deviation) {
  if (norm_deviation) *norm_deviation = 0.0;
  if (token == "0") return PureState::ket0();
  if (token == "1") return PureState::ket1();
  if (token == "+") return PureState::plus();
  if (token == "-") return PureState::minus();

  // Raw amplitudes: re:im,re:im.
  const auto comma = token.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument(
        "state must be one of 0, 1, +, - or an amplitude pair re:im,re:im");
  }
  auto parse_complex = [](const std::string& part) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("amplitude must have the form re:im");
    }
    try {
      std::size_t used = 0;
      const double re = std::stod(part.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
      const std::string im_str = part.substr(colon + 1);
      const double im = std::stod(im_str, &used);
      if (used != im_str.size()) throw std::invalid_argument("");
      return Complex{re, im};
    } catch (const std::exception&) {
      throw std::invalid_argument("amplitude must have the form re:im");
    }
  };
  ComplexVector v{parse_complex(token.substr(0, comma)),
                  parse_complex(token.substr(comma + 1))};
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("state amplitudes must have a positive norm");
  }
  if (norm_deviation) *norm_deviation = std::abs(norm - 1.0);
  v[0] /= norm;
  v[1] /= norm;
  return PureState(std::move(v));
}

}  // namespace gadsim
