// Copyright 2026 The Oneway Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONEWAY_GADGETS_TESTING_H
#define ONEWAY_GADGETS_TESTING_H

#include <random>
#include <vector>

#include "oneway/cluster/cluster_state.h"
#include "oneway/gadgets/pattern.h"
#include "oneway/qsim/circuit.h"

namespace oneway {

/// Random normalized single-qubit state.
QubitPrep random_qubit(std::mt19937_64 &rng);

/// Bounding-box lattice of the pattern's region with every other site left empty.
Lattice region_lattice(const MeasurementPattern &p);

/// Entangles `lattice` with each wire's input site holding X^x Z^z |input>, where (x, z) come
/// from frame_in.
ClusterState prepare_gadget_cluster(
    const Lattice &lattice,
    const MeasurementPattern &p,
    const std::vector<QubitPrep> &inputs,
    const PauliFrame &frame_in,
    EntanglingConvention convention = EntanglingConvention::kControlledZ);

/// Reference output: the gadget's intended unitary (on wires 0..k-1) applied to the inputs.
StateRegister oracle_output(const std::vector<QubitPrep> &inputs, const Matrix &unitary);

}  // namespace oneway

#endif
