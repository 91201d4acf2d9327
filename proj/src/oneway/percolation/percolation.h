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

#ifndef ONEWAY_PERCOLATION_PERCOLATION_H
#define ONEWAY_PERCOLATION_PERCOLATION_H

#include <cstdint>
#include <string>
#include <vector>

namespace oneway {

/// Site occupancy of an L^d grid (d = 2 or 3), row-major with axis 0 slowest.
struct OccupancyGrid {
    std::vector<int> dims;
    std::vector<uint8_t> occupied;
    double p = 0;
    uint64_t seed = 0;

    size_t site_count() const {
        return occupied.size();
    }
    size_t occupied_count() const;
    /// Coordinate of site i along axis 0.
    int axis0(size_t i) const;
    /// Calls f(j) for each neighbour index j of site i (occupied or not).
    template <typename F>
    void for_each_neighbor(size_t i, F f) const {
        size_t stride = 1;
        for (size_t a = dims.size(); a-- > 0;) {
            int c = (int)((i / stride) % (size_t)dims[a]);
            if (c > 0) {
                f(i - stride);
            }
            if (c + 1 < dims[a]) {
                f(i + stride);
            }
            stride *= (size_t)dims[a];
        }
    }
};

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
   public:
    explicit UnionFind(size_t n);
    size_t find(size_t x);
    /// Returns the new root.
    size_t unite(size_t a, size_t b);
    size_t size(size_t x) {
        return size_[find(x)];
    }

   private:
    std::vector<size_t> parent_;
    std::vector<size_t> size_;
};

/// Uniform draws in [0, 1) for every site of an L^d grid; the grid at probability p occupies
/// exactly the sites with u < p, so grids for different p under one seed are coupled.
std::vector<double> site_uniforms(int L, int d, uint64_t seed);

/// Throws std::invalid_argument unless 0 <= p <= 1, L >= 2 and d is 2 or 3.
OccupancyGrid sample_grid(int L, int d, double p, uint64_t seed);

struct ClusterStats {
    size_t occupied = 0;
    size_t components = 0;
    size_t largest = 0;
    /// Some component touches both faces perpendicular to axis 0.
    bool spanning = false;
};

ClusterStats analyze(const OccupancyGrid &grid);

/// Component of each site as the smallest site index in it, or -1 for empty sites.
std::vector<int64_t> component_labels(const OccupancyGrid &grid);

/// Fraction of `trials` grids that span; trial t uses seed + t.
double spanning_probability(int L, int d, double p, size_t trials, uint64_t seed);

/// Smallest p at which the grid drawn with this seed spans (adding sites in order of their
/// uniform draw). The grid spans at p exactly when p is above the returned value.
double critical_probability(int L, int d, uint64_t seed);

struct Crossing {
    int L = 0;
    /// p at which half of the trials span.
    double p = 0;
    /// Bootstrap standard error of p.
    double stderr = 0;
};

struct ThresholdEstimate {
    /// Crossing at the largest L.
    double p_c = 0;
    double stderr = 0;
    std::vector<Crossing> crossings;
};

/// 50% spanning crossing for each L, from per-trial critical probabilities (trial t uses seed + t),
/// located by bisection. The estimate is the crossing at the largest L.
///
/// Throws std::invalid_argument for fewer than two sizes, and std::runtime_error if independently
/// sampled spanning fractions around a crossing decrease with p by more than sampling noise.
ThresholdEstimate estimate_threshold(int d, const std::vector<int> &Ls, size_t trials, uint64_t seed);

struct SpanningRow {
    int d = 0;
    int L = 0;
    double p = 0;
    size_t trials = 0;
    double fraction = 0;
    /// Binomial standard error of the fraction.
    double stderr = 0;
};

SpanningRow spanning_row(int L, int d, double p, size_t trials, uint64_t seed);

/// Tab-separated table with a "# d L p trials spanning_fraction stderr" header line.
std::string format_table(const std::vector<SpanningRow> &rows);

}  // namespace oneway

#endif
