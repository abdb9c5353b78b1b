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

#include "gadsim/dilation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gadsim {

ComplexVector canonical_image(const KrausChannel& ch, const ComplexVector& q) {
  const std::size_t d = ch.dim();
  const std::size_t k_count = ch.size();
  if (q.dim() != d) {
    throw std::invalid_argument("canonical_image: state dimension mismatch");
  }
  ComplexVector image(d * k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    const ComplexVector mapped = ch[k] * q;
    for (std::size_t j = 0; j < d; ++j) {
      image[j * k_count + k] += mapped[j];
    }
  }
  return image;
}

DilatedModel canonical_dilation(const KrausChannel& ch) {
  const std::size_t d = ch.dim();
  const std::size_t k_count = ch.size();
  const std::size_t n = d * k_count;

  // Defining columns: images of the system basis states tensored with |e_0>.
  ComplexMatrix isometry(n, d);
  for (std::size_t i = 0; i < d; ++i) {
    ComplexVector basis(d);
    basis[i] = 1.0;
    isometry.set_column(i, canonical_image(ch, basis));
  }
  const ComplexMatrix gram = adjoint(isometry) * isometry;
  if (max_abs_diff(gram, ComplexMatrix::identity(d)) > 1e-12) {
    throw std::invalid_argument(
        "canonical_dilation: Kraus set is not complete (defining columns "
        "are not orthonormal)");
  }

  // Complete, then move the defining columns to the |i> (x) |e_0| positions
  // i * K; the filler columns take the remaining positions in index order.
  const ComplexMatrix completed = complete_isometry_to_unitary(isometry);
  std::vector<std::size_t> dest;
  dest.reserve(n);
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < d; ++i) {
    dest.push_back(i * k_count);
    taken[i * k_count] = true;
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (!taken[pos]) dest.push_back(pos);
  }
  ComplexMatrix joint(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    joint.set_column(dest[c], completed.column(c));
  }

  ComplexVector env(k_count);
  env[0] = 1.0;
  return DilatedModel{{d, k_count}, 0, PureState(std::move(env)),
                      std::move(joint)};
}

namespace {

// Permutation matrix mapping the (principal-first) layout onto the model's
// declared subsystem order. Identity when the principal factor leads.
ComplexMatrix layout_permutation(const std::vector<std::size_t>& dims,
                                 std::size_t principal) {
  const std::size_t ns = dims.size();
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;

  // Source layout subsystem order: principal, then the rest as listed.
  std::vector<std::size_t> src_order;
  src_order.push_back(principal);
  for (std::size_t s = 0; s < ns; ++s) {
    if (s != principal) src_order.push_back(s);
  }

  ComplexMatrix perm(total, total);
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t rem = src;
    std::vector<std::size_t> digit(ns);
    for (std::size_t pos = ns; pos-- > 0;) {
      const std::size_t sub = src_order[pos];
      digit[sub] = rem % dims[sub];
      rem /= dims[sub];
    }
    std::size_t dst = 0;
    for (std::size_t s = 0; s < ns; ++s) dst = dst * dims[s] + digit[s];
    perm(dst, src) = 1.0;
  }
  return perm;
}

}  // namespace

DensityOperator reduce(const DilatedModel& model, const DensityOperator& rho) {
  const auto& dims = model.subsystem_dims;
  if (model.principal_index >= dims.size()) {
    throw std::invalid_argument("reduce: principal index out of range");
  }
  if (rho.dim() != dims[model.principal_index]) {
    throw std::invalid_argument(
        "reduce: input dimension does not match the principal subsystem");
  }
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (model.joint_unitary.rows() != total ||
      model.environment_initial.dim() * rho.dim() != total) {
    throw std::invalid_argument("reduce: inconsistent model dimensions");
  }
  if (!is_unitary(model.joint_unitary, kUnitaryTol)) {
    throw std::invalid_argument("reduce: joint evolution is not unitary");
  }

  const ComplexMatrix env_proj = outer(model.environment_initial.vector(),
                                       model.environment_initial.vector());
  ComplexMatrix joint = kron(rho.matrix(), env_proj);
  if (model.principal_index != 0) {
    const ComplexMatrix perm =
        layout_permutation(dims, model.principal_index);
    joint = perm * joint * adjoint(perm);
  }

  const ComplexMatrix evolved =
      model.joint_unitary * joint * adjoint(model.joint_unitary);
  return DensityOperator(
      partial_trace(evolved, dims, {model.principal_index}));
}

ComplexMatrix u_thermal(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("u_thermal: gamma must be in [0, 1]");
  }
  const double sg = std::sqrt(gamma);
  const double sgbar = std::sqrt(1.0 - gamma);
  ComplexMatrix u(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = sgbar;
  u(1, 2) = sg;
  u(2, 1) = -sg;
  u(2, 2) = sgbar;
  u(3, 3) = 1.0;
  return u;
}

ComplexMatrix u_tilde(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("u_tilde: gamma must be in [0, 1]");
  }
  const double sg = std::sqrt(gamma);
  const double sgbar = std::sqrt(1.0 - gamma);
  return ComplexMatrix::from_rows({{sgbar, sg}, {-sg, sgbar}});
}

DilatedModel attenuator_model(const GadParams& params) {
  validate(params);
  ComplexVector env(4);
  env[0] = std::sqrt(params.p);
  env[3] = std::sqrt(1.0 - params.p);
  return DilatedModel{{2, 2, 2},
                      0,
                      PureState(std::move(env)),
                      kron(u_thermal(params.gamma),
                           ComplexMatrix::identity(2))};
}

bool check_subspace_property(const KrausChannel& ch, int samples,
                             std::uint64_t seed) {
  if (ch.dim() != 2 || ch.size() != 4) {
    throw std::invalid_argument(
        "check_subspace_property: expects four 2x2 Kraus operators");
  }
  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const PureState q = random_pure_state(rng, 2);
    const ComplexVector image = canonical_image(ch, q.vector());
    // |011> -> index 3, |101> -> index 5 in the (Q, E1, E2) ordering.
    if (std::abs(image[3]) >= 1e-12 || std::abs(image[5]) >= 1e-12) {
      return false;
    }
  }
  return true;
}

}  // namespace gadsim
