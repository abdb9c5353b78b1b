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

#include <doctest.h>

#include "test_helpers.hpp"

using namespace gadsim;
using gadsim::test::check_close;

TEST_SUITE_BEGIN("states");

TEST_CASE("pure_to_density projects onto the state") {
  check_close(pure_to_density(PureState::ket0()).matrix(),
              ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}), 0.0);

  check_close(pure_to_density(ket_p(0.5)).matrix(),
              ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}), 1e-15);

  // Outer product of sqrt(p)|00> + sqrt(1-p)|11> at p = 0.25, by hand.
  ComplexVector phi(4);
  phi[0] = std::sqrt(0.25);
  phi[3] = std::sqrt(0.75);
  const DensityOperator rho = pure_to_density(PureState(phi));
  const double cross = std::sqrt(0.1875);
  CHECK(rho(0, 0).real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rho(3, 3).real() == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(rho(0, 3).real() == doctest::Approx(cross).epsilon(1e-14));
  CHECK(rho(3, 0).real() == doctest::Approx(cross).epsilon(1e-14));
  CHECK(rho(1, 1) == Complex{0.0});
}

TEST_CASE("ket_p endpoints and midpoint") {
  check_close(ket_p(1.0).vector(), PureState::ket0().vector(), 0.0);
  check_close(ket_p(0.0).vector(), PureState::ket1().vector(), 0.0);
  check_close(ket_p(0.5).vector(), PureState::plus().vector(), 1e-15);
  CHECK_THROWS_AS(ket_p(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(ket_p(1.01), std::invalid_argument);
}

TEST_CASE("equilibrium_state is the diagonal mixture") {
  check_close(equilibrium_state(1.0).matrix(),
              ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}}), 0.0);
  check_close(equilibrium_state(0.5).matrix(),
              Complex{0.5} * ComplexMatrix::identity(2), 0.0);
  check_close(equilibrium_state(0.75).matrix(),
              ComplexMatrix::from_rows({{0.75, 0.0}, {0.0, 0.25}}), 0.0);
  CHECK_THROWS_AS(equilibrium_state(1.5), std::invalid_argument);
}

TEST_CASE("equilibrium_state matches the purified-pair reduction") {
  for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    ComplexVector phi(4);
    phi[0] = std::sqrt(p);
    phi[3] = std::sqrt(1.0 - p);
    const DensityOperator joint = pure_to_density(PureState(phi));
    const ComplexMatrix reduced =
        partial_trace(joint.matrix(), {2, 2}, {0});
    check_close(reduced, equilibrium_state(p).matrix(), 1e-12);
  }
}

TEST_CASE("overlap_probability") {
  CHECK(overlap_probability(pure_to_density(PureState::ket0()),
                            PureState::ket0()) == doctest::Approx(1.0));
  CHECK(overlap_probability(equilibrium_state(0.5), PureState::plus()) ==
        doctest::Approx(0.5));

  // Closed-form channel output on |+><+| at gamma = 0.75 (any p): the
  // overlap with |+> is 0.5 + sqrt(1 - gamma)/2 = 0.75. Matrix by hand.
  const double g = 0.75, p = 0.33;
  const ComplexMatrix noisy =
      ComplexMatrix::from_rows({{(1 - g) * 0.5 + g * p, std::sqrt(1 - g) / 2},
                                {std::sqrt(1 - g) / 2,
                                 1 - (1 - g) * 0.5 - g * p}});
  CHECK(overlap_probability(DensityOperator(noisy), PureState::plus()) ==
        doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_AS(
      overlap_probability(equilibrium_state(0.5),
                          PureState(ComplexVector{1.0, 0.0, 0.0, 0.0})),
      std::invalid_argument);
}

TEST_CASE("overlap_probability clamps floating-point dust") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0 + 5e-11;
  m(1, 1) = -5e-11;
  const double value =
      overlap_probability(DensityOperator(m), PureState::ket0());
  CHECK(value == 1.0);
  CHECK(overlap_probability(DensityOperator(m), PureState::ket1()) == 0.0);
}

TEST_CASE("overlap_probability stays in range for random inputs") {
  SplitMix64 rng(29);
  for (int round = 0; round < 200; ++round) {
    const DensityOperator rho = random_density_operator(rng, 2);
    const PureState ref = random_pure_state(rng, 2);
    const double value = overlap_probability(rho, ref);
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);
  }
}

TEST_CASE("PureState validation") {
  CHECK_THROWS_AS(PureState(ComplexVector{1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PureState(ComplexVector{1.0, 0.0, 0.0}),
                  std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(PureState(ComplexVector{nan, 0.0}), std::invalid_argument);
  // Global phase is preserved as given.
  const Complex i{0.0, 1.0};
  const PureState s(ComplexVector{0.0, i});
  CHECK(s[1] == i);
}

TEST_CASE("DensityOperator validation") {
  // Not Hermitian.
  CHECK_THROWS_AS(
      DensityOperator(ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 0.0}})),
      std::invalid_argument);
  // Trace 2.
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix::identity(2)),
                  std::invalid_argument);
  // Negative eigenvalue beyond the floor.
  CHECK_THROWS_AS(
      DensityOperator(ComplexMatrix::from_rows({{1.5, 0.0}, {0.0, -0.5}})),
      std::invalid_argument);
  // Valid rank-1 projector passes.
  CHECK_NOTHROW(pure_to_density(PureState::minus()));
}

TEST_CASE("random states satisfy the invariants") {
  SplitMix64 rng(31);
  for (std::size_t dim : {std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
    for (int round = 0; round < 20; ++round) {
      const PureState s = random_pure_state(rng, dim);
      CHECK(std::abs(s.vector().norm() - 1.0) <= 1e-12);
      CHECK_NOTHROW(pure_to_density(s));
      CHECK_NOTHROW(random_density_operator(rng, dim));
    }
  }
}

TEST_SUITE_END();
