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

#include "oneway/cluster/cluster_state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oneway {

namespace {

constexpr double kEigenTolerance = 1e-10;

void require_live(const ClusterState &cs, const Site &s) {
    if (!cs.live(s)) {
        throw std::invalid_argument("Site (" + cs.lattice.format(s) + ") is not in the cluster.");
    }
}

}  // namespace

ClusterState entangle_cluster(
    const Lattice &lattice, const std::map<Site, QubitPrep> &preps, EntanglingConvention convention) {
    auto sites = lattice.occupied_sites();
    if (sites.empty()) {
        throw std::invalid_argument("Cannot entangle an empty lattice.");
    }
    for (const auto &[s, _] : preps) {
        if (!lattice.occupied(s)) {
            throw std::invalid_argument("Input state given for unoccupied site (" + lattice.format(s) + ").");
        }
    }
    ClusterState cs;
    cs.lattice = lattice;
    cs.convention = convention;
    cs.z_bits.assign(lattice.site_count(), 0);
    std::vector<QubitPrep> qubit_preps;
    std::vector<Label> labels;
    for (const auto &s : sites) {
        auto it = preps.find(s);
        qubit_preps.push_back(it == preps.end() ? QubitPrep::plus() : it->second);
        labels.push_back(lattice.label(s));
    }
    cs.reg = init_register(qubit_preps, labels);
    entangle_edges(cs, lattice.edges());
    return cs;
}

void entangle_edges(ClusterState &cs, const std::vector<std::pair<Site, Site>> &edges) {
    for (auto [a, b] : edges) {
        require_live(cs, a);
        require_live(cs, b);
        if (b < a) {
            std::swap(a, b);
        }
        Label la = cs.label(a);
        Label lb = cs.label(b);
        if (cs.convention == EntanglingConvention::kControlledZ) {
            entangle_phase(cs.reg, la, lb, std::numbers::pi);
        } else {
            entangle_ising_projector(cs.reg, la, lb, std::numbers::pi);
            cs.z_bits[lb] ^= 1;
        }
    }
}

void add_sites(ClusterState &cs, const std::vector<Site> &sites, const std::map<Site, QubitPrep> &preps) {
    for (const auto &s : sites) {
        if (!cs.lattice.in_bounds(s) || cs.live(s)) {
            throw std::invalid_argument("Site (" + cs.lattice.format(s) + ") cannot be added.");
        }
    }
    for (const auto &s : sites) {
        auto it = preps.find(s);
        if (cs.reg.labels.empty()) {
            cs.reg.amplitudes = {1};
        }
        append_qubit(cs.reg, cs.label(s), it == preps.end() ? QubitPrep::plus() : it->second);
        cs.lattice.set_occupied(s, true);
        cs.z_bits[cs.label(s)] = 0;
    }
    std::vector<std::pair<Site, Site>> edges;
    for (const auto &a : sites) {
        for (const auto &b : cs.lattice.neighbors(a)) {
            bool b_new = std::find(sites.begin(), sites.end(), b) != sites.end();
            if (!b_new || a < b) {
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    entangle_edges(cs, edges);
}

CorrelationOperator correlation_operator(const ClusterState &cs, const Site &a) {
    require_live(cs, a);
    return {a, cs.lattice.neighbors(a), expected_sign(cs, a)};
}

int expected_sign(const ClusterState &cs, const Site &a) {
    require_live(cs, a);
    return cs.z_bits[cs.label(a)] ? -1 : 1;
}

int verify_correlation(const ClusterState &cs, const Site &a) {
    auto op = correlation_operator(cs, a);
    const auto &reg = cs.reg;
    size_t flip = size_t{1} << reg.bit(cs.label(a));
    size_t z_mask = 0;
    for (const auto &n : op.neighbors) {
        z_mask |= size_t{1} << reg.bit(cs.label(n));
    }
    double diff_plus = 0;
    double diff_minus = 0;
    for (size_t i = 0; i < reg.amplitudes.size(); i++) {
        // (K psi)[i] = sign(i ^ flip) psi[i ^ flip], with the Z signs read after the X flip.
        size_t j = i ^ flip;
        Complex k = reg.amplitudes[j];
        if (std::popcount(j & z_mask) & 1) {
            k = -k;
        }
        diff_plus = std::max(diff_plus, std::abs(k - reg.amplitudes[i]));
        diff_minus = std::max(diff_minus, std::abs(k + reg.amplitudes[i]));
    }
    if (diff_plus <= kEigenTolerance) {
        return +1;
    }
    if (diff_minus <= kEigenTolerance) {
        return -1;
    }
    throw std::runtime_error(
        "Cluster state is not an eigenstate of the correlation operator at (" + cs.lattice.format(a) + ").");
}

Outcome measure_site(
    ClusterState &cs, const Site &s, MeasurementDirection dir, const OutcomeSource &src, uint64_t key) {
    require_live(cs, s);
    Label l = cs.label(s);
    auto nbrs = cs.lattice.neighbors(s);
    Outcome r = measure_and_discard(cs.reg, l, dir, src, key);
    cs.lattice.set_occupied(s, false);
    cs.z_bits[l] = 0;
    if (dir.kind == MeasurementDirection::Kind::kZ && r) {
        for (const auto &n : nbrs) {
            cs.z_bits[cs.label(n)] ^= 1;
        }
    }
    return r;
}

std::vector<Outcome> carve(ClusterState &cs, const std::vector<Site> &sites, OutcomeSource &src) {
    for (const auto &s : sites) {
        require_live(cs, s);
    }
    std::vector<Outcome> out;
    for (const auto &s : sites) {
        out.push_back(measure_site(cs, s, MeasurementDirection::z(), src, src.next_key()));
    }
    return out;
}

}  // namespace oneway
