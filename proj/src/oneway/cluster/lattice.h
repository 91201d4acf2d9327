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

#ifndef ONEWAY_CLUSTER_LATTICE_H
#define ONEWAY_CLUSTER_LATTICE_H

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oneway/qsim/state_register.h"

namespace oneway {

/// Integer lattice coordinates. Axes beyond the lattice rank are zero.
struct Site {
    std::array<int, 3> c{};

    Site() = default;
    Site(int x) : c{x, 0, 0} {
    }
    Site(int x, int y) : c{x, y, 0} {
    }
    Site(int x, int y, int z) : c{x, y, z} {
    }

    int operator[](size_t axis) const {
        return c[axis];
    }
    int &operator[](size_t axis) {
        return c[axis];
    }
    auto operator<=>(const Site &other) const = default;
    bool operator==(const Site &other) const = default;
};

/// Rectangular grid with 1 to 3 axes and a per-site occupancy flag.
///
/// Sites are labeled by their row-major linear index, so label order is lexicographic coordinate
/// order. Neighbors are occupied sites at unit Manhattan distance.
class Lattice {
   public:
    Lattice() = default;
    /// Full occupancy. Throws std::invalid_argument unless 1-3 positive extents are given.
    explicit Lattice(std::vector<int> extents);

    size_t rank() const {
        return extents_.size();
    }
    const std::vector<int> &extents() const {
        return extents_;
    }
    size_t site_count() const {
        return occupied_.size();
    }
    size_t occupied_count() const;

    bool in_bounds(const Site &s) const;
    bool occupied(const Site &s) const;
    /// Throws std::invalid_argument for out-of-bounds sites.
    void set_occupied(const Site &s, bool value);

    Label label(const Site &s) const;
    Site site(Label label) const;

    /// Occupied sites in lexicographic order.
    std::vector<Site> occupied_sites() const;
    /// Occupied unit-distance neighbors in lexicographic order. Throws if s is unoccupied.
    std::vector<Site> neighbors(const Site &s) const;
    /// Each edge (a, b) between occupied sites once, with a < b, sorted.
    std::vector<std::pair<Site, Site>> edges() const;

    /// Coordinates separated by commas, using only the lattice's axes (e.g. "2,5").
    std::string format(const Site &s) const;

    /// Text form: "lattice <dx> [<dy> [<dz>]]" then one "hole <x> [<y> [<z>]]" line per empty site.
    static Lattice parse(std::string_view text);
    std::string str() const;

    bool operator==(const Lattice &other) const = default;

   private:
    std::vector<int> extents_;
    std::vector<bool> occupied_;
};

}  // namespace oneway

#endif
