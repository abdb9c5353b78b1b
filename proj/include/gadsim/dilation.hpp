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

/// A unitary environment model for a channel: the environment starts in the
/// pure state `environment_initial`, the compound evolves under
/// `joint_unitary`, and the channel output is recovered by partial-tracing
/// the environment away.
///
/// `subsystem_dims` orders the tensor factors most-significant first;
/// `principal_index` names the factor carrying the input state. The
/// environment state spans all remaining factors in their listed order.
struct DilatedModel {
  std::vector<std::size_t> subsystem_dims;
  std::size_t principal_index;
  PureState environment_initial;
  ComplexMatrix joint_unitary;
};

/// The joint image sum_k Lambda_k |q> (x) |e_k> of a pure system state under
/// the canonical dilation, with the environment basis |e_1..e_K> mapped to
/// indices 0..K-1 (for K = 4: |00>, |01>, |10>, |11>).
ComplexVector canonical_image(const KrausChannel& ch, const ComplexVector& q);

/// Canonical Stinespring dilation of a K-operator channel on a d-dim system:
/// environment of dimension K starting at index 0 (|e_0> = |00>), and a
/// (d*K)-dim joint unitary whose action on the {|q> (x) |e_0>} subspace is
/// canonical_image. The defining columns must form an isometry (checked to
/// 1e-12, which completeness guarantees); the remaining columns come from
/// the deterministic canonical completion and carry no meaning beyond
/// unitarity.
DilatedModel canonical_dilation(const KrausChannel& ch);

/// rho' = tr_E[ U (rho (x) |e0><e0|) U^dagger ].
DensityOperator reduce(const DilatedModel& model, const DensityOperator& rho);

/// The two-qubit thermal-attenuator unitary
///   [[1, 0,           0,          0],
///    [0, sqrt(1-g),   sqrt(g),    0],
///    [0, -sqrt(g),    sqrt(1-g),  0],
///    [0, 0,           0,          1]].
ComplexMatrix u_thermal(double gamma);

/// The two-level block of u_thermal acting on the {|01>, |10>} components:
///   [[sqrt(1-g), sqrt(g)], [-sqrt(g), sqrt(1-g)]].
ComplexMatrix u_tilde(double gamma);

/// Purified attenuator model on three qubits (Q, E, A): the environment pair
/// (E, A) starts in sqrt(p)|00> + sqrt(1-p)|11>, and the joint unitary is
/// u_thermal(gamma) on (Q, E) tensored with identity on A. Tracing A alone
/// would leave E in the thermalized mixed state diag(p, 1-p).
DilatedModel attenuator_model(const GadParams& params);

/// True iff the canonical image keeps amplitude below 1e-12 on the basis
/// kets |011> and |101> for `samples` random input states. Holds for every
/// GAD channel; a generic 4-operator channel may fail it.
bool check_subspace_property(const KrausChannel& ch, int samples = 100,
                             std::uint64_t seed = 0x5d1a7ed0u);

}  // namespace gadsim
