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

#ifndef ONEWAY_CLUSTER_CLUSTER_STATE_H
#define ONEWAY_CLUSTER_CLUSTER_STATE_H

#include <map>
#include <vector>

#include "oneway/cluster/lattice.h"
#include "oneway/qsim/state_register.h"

namespace oneway {

/// Which two-qubit phase gate is applied along each lattice edge.
enum class EntanglingConvention : uint8_t {
    /// Controlled-Z: phase -1 on |11>.
    kControlledZ,
    /// Projector interaction (1 + Z_a)/2 (1 - Z_b)/2 integrated to pi, with a < b: phase -1 on
    /// |a=0, b=1>. Equals CZ followed by Z on the larger endpoint.
    kIsingProjector,
};

/// A register holding the qubits of the live (entangled, not yet measured) lattice sites.
///
/// z_bits[label] records a pending Z on that site relative to the ideal CZ cluster state. It is
/// set by the Ising convention and by Z-measurement outcomes of carved neighbors. The eigenvalue
/// of the correlation operator at a is (-1)^z_bits[a].
struct ClusterState {
    StateRegister reg;
    /// Bounds and labels of the whole region; occupancy marks live sites only.
    Lattice lattice;
    std::vector<uint8_t> z_bits;
    EntanglingConvention convention = EntanglingConvention::kControlledZ;

    Label label(const Site &s) const {
        return lattice.label(s);
    }
    bool live(const Site &s) const {
        return lattice.occupied(s);
    }
};

/// sigma_x on the center times sigma_z on each live neighbor.
struct CorrelationOperator {
    Site center;
    std::vector<Site> neighbors;
    int expected_sign = 1;
};

/// Prepares each occupied site (|+> unless listed in preps) and entangles every edge once.
ClusterState entangle_cluster(
    const Lattice &lattice,
    const std::map<Site, QubitPrep> &preps = {},
    EntanglingConvention convention = EntanglingConvention::kControlledZ);

/// Applies the convention's phase gate along the given edges (in the given order).
void entangle_edges(ClusterState &cs, const std::vector<std::pair<Site, Site>> &edges);

/// Adds qubits for unoccupied in-bounds sites and entangles them with every live neighbor.
/// Sites are added in the given order; edges are applied in lexicographic order.
void add_sites(ClusterState &cs, const std::vector<Site> &sites, const std::map<Site, QubitPrep> &preps = {});

CorrelationOperator correlation_operator(const ClusterState &cs, const Site &a);

/// Applies the correlation operator at a and returns +1 or -1 if the state is an eigenstate
/// (compared amplitude-wise within 1e-10). Throws std::runtime_error otherwise.
int verify_correlation(const ClusterState &cs, const Site &a);

/// (-1)^z_bits[a].
int expected_sign(const ClusterState &cs, const Site &a);

/// Measures the sites in Z (in the given order), removes them, and toggles the z-bits of their
/// live neighbors by the outcome.
std::vector<Outcome> carve(ClusterState &cs, const std::vector<Site> &sites, OutcomeSource &src);

/// Removes one live site by measuring it, keeping lattice occupancy and z-bits in sync. The caller
/// is responsible for any frame bookkeeping beyond the Z-outcome neighbor update.
Outcome measure_site(
    ClusterState &cs, const Site &s, MeasurementDirection dir, const OutcomeSource &src, uint64_t key);

}  // namespace oneway

#endif
