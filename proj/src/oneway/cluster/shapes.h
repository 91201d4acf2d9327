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

#ifndef ONEWAY_CLUSTER_SHAPES_H
#define ONEWAY_CLUSTER_SHAPES_H

#include <random>
#include <vector>

#include "oneway/cluster/lattice.h"

namespace oneway {

/// Bounding-box lattice of the sites (shifted so every axis starts at 0), with every other
/// site empty.
Lattice shape_lattice(const std::vector<Site> &sites, size_t rank);

/// Every connected site set with 1 to max_sites sites on `rank` axes, up to translation
/// (fixed polyominoes for rank 2, polycubes for rank 3), ordered by size.
std::vector<Lattice> enumerate_shapes(size_t rank, size_t max_sites);

/// Connected shape grown from one site by repeatedly adding a random empty neighbor.
Lattice random_connected_shape(std::mt19937_64 &rng, size_t rank, size_t sites);

/// Largest shapes enumerated exhaustively on two and three axes.
constexpr size_t kEnumeratedPlanarSites = 8;
constexpr size_t kEnumeratedSolidSites = 6;

/// Shapes for checking cluster-state correlations up to max_sites sites: all chains, all
/// planar shapes up to kEnumeratedPlanarSites sites, all solid shapes up to
/// kEnumeratedSolidSites sites, every full box with at most max_sites sites, and
/// random_count random connected shapes on 1 to 3 axes.
std::vector<Lattice> correlation_suite_shapes(size_t max_sites, size_t random_count, uint64_t seed);

}  // namespace oneway

#endif
