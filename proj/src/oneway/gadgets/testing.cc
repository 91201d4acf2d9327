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

#include "oneway/gadgets/testing.h"

#include <algorithm>

namespace oneway {

QubitPrep random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Complex a(g(rng), g(rng));
    Complex b(g(rng), g(rng));
    double n = std::sqrt(std::norm(a) + std::norm(b));
    return QubitPrep::state(a / n, b / n);
}

Lattice region_lattice(const MeasurementPattern &p) {
    auto region = p.region();
    std::vector<int> extents = {1, 1};
    for (const auto &s : region) {
        extents[0] = std::max(extents[0], s[0] + 1);
        extents[1] = std::max(extents[1], s[1] + 1);
    }
    Lattice lat(extents);
    for (Label l = 0; l < lat.site_count(); l++) {
        Site s = lat.site(l);
        lat.set_occupied(s, std::binary_search(region.begin(), region.end(), s));
    }
    return lat;
}

ClusterState prepare_gadget_cluster(
    const Lattice &lattice,
    const MeasurementPattern &p,
    const std::vector<QubitPrep> &inputs,
    const PauliFrame &frame_in,
    EntanglingConvention convention) {
    std::map<Site, QubitPrep> preps;
    for (size_t w = 0; w < p.wires.size(); w++) {
        QubitPrep q = inputs.at(w);
        if (frame_in.z[w]) {
            q.beta = -q.beta;
        }
        if (frame_in.x[w]) {
            std::swap(q.alpha, q.beta);
        }
        preps[p.wires[w].input] = q;
    }
    return entangle_cluster(lattice, preps, convention);
}

StateRegister oracle_output(const std::vector<QubitPrep> &inputs, const Matrix &unitary) {
    StateRegister r = init_register(inputs);
    std::vector<Label> all;
    for (size_t k = 0; k < inputs.size(); k++) {
        all.push_back((Label)k);
    }
    apply_matrix(r, unitary, all);
    return r;
}

}  // namespace oneway
