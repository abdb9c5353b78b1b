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

#include <cstdint>
#include <optional>
#include <string>

#include "gadsim/circuit.hpp"
#include "gadsim/dilation.hpp"

namespace gadsim {

/// One parameter sweep over the noise-simulator circuit: vary p or gamma
/// over `grid` with the other parameter held at `fixed`, measuring the
/// probability of finding the noisy output in `reference_state`.
struct SweepSpec {
  enum class Vary { P, Gamma };

  Vary vary;
  std::vector<double> grid;
  double fixed;
  PureState input_state;
  PureState reference_state;  // defaults to the input in the CLI
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

struct SweepRow {
  double param;
  double exact;   // circuit-simulation probability
  double theory;  // closed-form probability
  std::optional<double> sampled_freq;
  std::uint64_t shots;
};

struct SweepResult {
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;
};

/// Evaluate the sweep: per grid point, build the simulator circuit, compute
/// the exact overlap by dense simulation, the closed-form reference, and
/// (when shots > 0) a binomial sample drawn from the exact probability with
/// a per-point stream derived from (seed, point index).
SweepResult run_sweep(const SweepSpec& spec);

/// Binomial(shots, probability) draw, deterministic for a fixed seed. The
/// sample is drawn directly from the probability, not from per-shot
/// state-vector collapse: for a single two-outcome measurement the
/// distributions are identical, and this keeps million-shot runs instant.
std::uint64_t sample_shots(double probability, std::uint64_t shots,
                           std::uint64_t seed);

/// CSV rendering: a `# seed=...` comment, the header line
/// `param,exact,theory,sampled_freq,shots`, then one row per grid point
/// with 12-significant-digit decimals and LF line endings. sampled_freq is
/// empty when the sweep ran with shots = 0.
std::string to_csv(const SweepResult& result);

/// Write to_csv(result) to `path`. Throws std::runtime_error (with the path
/// in the message) on I/O failure, std::invalid_argument on empty results.
void export_csv(const SweepResult& result, const std::string& path);

struct EquivalenceReport {
  double max_residual = 0.0;
  std::size_t grid_points = 0;
  std::size_t inputs = 0;
};

/// The four-way cross-check: Kraus operator-sum, closed form, canonical
/// dilation, and circuit simulation, compared pairwise over a
/// grid_steps x grid_steps (p, gamma) grid and six input states (the four
/// axis states, (|0>+i|1>)/sqrt(2), and one seeded random mixed state).
EquivalenceReport four_way_equivalence(std::size_t grid_steps = 11,
                                       std::uint64_t seed = 0);

/// Parse `start:stop:step` into an inclusive grid; endpoints within 1e-12
/// of `stop` snap onto it. Values must stay inside [0, 1].
std::vector<double> parse_grid(const std::string& text);

/// Parse an input-state token: named states `0`, `1`, `+`, `-`, or a raw
/// amplitude pair `re:im,re:im`. The vector is normalized; when the input
/// norm is off by more than 1e-6 the deviation is reported through
/// `norm_deviation` (callers warn on it).
PureState parse_state_token(const std::string& token,
                            double* norm_deviation = nullptr);

}  // namespace gadsim
