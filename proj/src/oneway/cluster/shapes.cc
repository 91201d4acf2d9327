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

#include "oneway/cluster/shapes.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oneway {

namespace {

using Cells = std::vector<Site>;

void check_rank(size_t rank) {
    if (rank < 1 || rank > 3) {
        throw std::invalid_argument("Shapes need 1 to 3 axes.");
    }
}

Cells normalized(Cells cells, size_t rank) {
    for (size_t a = 0; a < rank; a++) {
        int lo = cells[0][a];
        for (const auto &s : cells) {
            lo = std::min(lo, s[a]);
        }
        for (auto &s : cells) {
            s[a] -= lo;
        }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Site> unit_neighbors(const Site &s, size_t rank) {
    std::vector<Site> out;
    for (size_t a = 0; a < rank; a++) {
        for (int step : {-1, 1}) {
            Site n = s;
            n[a] += step;
            out.push_back(n);
        }
    }
    return out;
}

}  // namespace

Lattice shape_lattice(const std::vector<Site> &sites, size_t rank) {
    check_rank(rank);
    if (sites.empty()) {
        throw std::invalid_argument("A shape needs at least one site.");
    }
    Cells cells = normalized(sites, rank);
    std::vector<int> extents(rank, 1);
    for (const auto &s : cells) {
        for (size_t a = 0; a < rank; a++) {
            extents[a] = std::max(extents[a], s[a] + 1);
        }
    }
    Lattice lattice(extents);
    for (const auto &s : lattice.occupied_sites()) {
        lattice.set_occupied(s, false);
    }
    for (const auto &s : cells) {
        lattice.set_occupied(s, true);
    }
    return lattice;
}

std::vector<Lattice> enumerate_shapes(size_t rank, size_t max_sites) {
    check_rank(rank);
    std::vector<Lattice> result;
    std::set<Cells> level;
    if (max_sites >= 1) {
        level.insert(Cells{Site()});
    }
    for (size_t n = 1; n <= max_sites; n++) {
        for (const auto &cells : level) {
            result.push_back(shape_lattice(cells, rank));
        }
        if (n == max_sites) {
            break;
        }
        std::set<Cells> next;
        for (const auto &cells : level) {
            for (const auto &s : cells) {
                for (const auto &nb : unit_neighbors(s, rank)) {
                    if (std::binary_search(cells.begin(), cells.end(), nb)) {
                        continue;
                    }
                    Cells grown = cells;
                    grown.push_back(nb);
                    next.insert(normalized(std::move(grown), rank));
                }
            }
        }
        level = std::move(next);
    }
    return result;
}

Lattice random_connected_shape(std::mt19937_64 &rng, size_t rank, size_t sites) {
    check_rank(rank);
    if (sites == 0) {
        throw std::invalid_argument("A shape needs at least one site.");
    }
    Cells cells{Site()};
    std::set<Site> taken{Site()};
    while (cells.size() < sites) {
        const Site &base = cells[rng() % cells.size()];
        auto options = unit_neighbors(base, rank);
        const Site &pick = options[rng() % options.size()];
        if (taken.insert(pick).second) {
            cells.push_back(pick);
        }
    }
    return shape_lattice(cells, rank);
}

std::vector<Lattice> correlation_suite_shapes(size_t max_sites, size_t random_count, uint64_t seed) {
    std::vector<Lattice> shapes = enumerate_shapes(1, max_sites);
    for (auto &s : enumerate_shapes(2, std::min(max_sites, kEnumeratedPlanarSites))) {
        shapes.push_back(std::move(s));
    }
    for (auto &s : enumerate_shapes(3, std::min(max_sites, kEnumeratedSolidSites))) {
        shapes.push_back(std::move(s));
    }
    int n = (int)max_sites;
    for (int a = 2; a <= n; a++) {
        for (int b = 2; a * b <= n; b++) {
            shapes.push_back(Lattice({a, b}));
            for (int c = 2; a * b * c <= n; c++) {
                shapes.push_back(Lattice({a, b, c}));
            }
        }
    }
    std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32)};
    std::mt19937_64 rng(seq);
    for (size_t k = 0; k < random_count && max_sites > 0; k++) {
        size_t rank = 1 + rng() % 3;
        size_t sites = 1 + rng() % max_sites;
        shapes.push_back(random_connected_shape(rng, rank, sites));
    }
    return shapes;
}

}  // namespace oneway
