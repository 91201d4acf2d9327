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

#include "oneway/percolation/percolation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace oneway {

namespace {

void check_grid_args(int L, int d) {
    if (L < 2) {
        throw std::invalid_argument("Grid side length must be at least 2, got " + std::to_string(L) + ".");
    }
    if (d != 2 && d != 3) {
        throw std::invalid_argument("Grid dimension must be 2 or 3, got " + std::to_string(d) + ".");
    }
}

size_t power(int L, int d) {
    size_t n = 1;
    for (int k = 0; k < d; k++) {
        n *= (size_t)L;
    }
    return n;
}

double crossing_of(std::vector<double> critical) {
    std::sort(critical.begin(), critical.end());
    auto fraction_below = [&](double p) {
        return (double)(std::lower_bound(critical.begin(), critical.end(), p) - critical.begin()) /
               (double)critical.size();
    };
    double lo = 0;
    double hi = 1;
    for (int k = 0; k < 60; k++) {
        double mid = (lo + hi) / 2;
        if (fraction_below(mid) >= 0.5) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

constexpr size_t kBootstrapSamples = 400;
constexpr double kCheckOffsets[] = {-0.06, -0.03, 0, 0.03, 0.06};

}  // namespace

size_t OccupancyGrid::occupied_count() const {
    return (size_t)std::count(occupied.begin(), occupied.end(), 1);
}

int OccupancyGrid::axis0(size_t i) const {
    size_t stride = 1;
    for (size_t a = 1; a < dims.size(); a++) {
        stride *= (size_t)dims[a];
    }
    return (int)(i / stride);
}

UnionFind::UnionFind(size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

size_t UnionFind::find(size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

size_t UnionFind::unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return a;
    }
    if (size_[a] < size_[b]) {
        std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
}

std::vector<double> site_uniforms(int L, int d, uint64_t seed) {
    check_grid_args(L, d);
    std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<double> u(power(L, d));
    for (auto &v : u) {
        v = (double)(rng() >> 11) * 0x1.0p-53;
    }
    return u;
}

OccupancyGrid sample_grid(int L, int d, double p, uint64_t seed) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("Occupation probability must be in [0, 1].");
    }
    std::vector<double> u = site_uniforms(L, d, seed);
    OccupancyGrid grid;
    grid.dims.assign((size_t)d, L);
    grid.p = p;
    grid.seed = seed;
    grid.occupied.resize(u.size());
    for (size_t i = 0; i < u.size(); i++) {
        grid.occupied[i] = u[i] < p;
    }
    return grid;
}

std::vector<int64_t> component_labels(const OccupancyGrid &grid) {
    size_t n = grid.site_count();
    UnionFind uf(n);
    for (size_t i = 0; i < n; i++) {
        if (!grid.occupied[i]) {
            continue;
        }
        grid.for_each_neighbor(i, [&](size_t j) {
            if (j > i && grid.occupied[j]) {
                uf.unite(i, j);
            }
        });
    }
    std::vector<int64_t> smallest(n, -1);
    std::vector<int64_t> labels(n, -1);
    for (size_t i = 0; i < n; i++) {
        if (grid.occupied[i]) {
            size_t r = uf.find(i);
            if (smallest[r] < 0) {
                smallest[r] = (int64_t)i;
            }
            labels[i] = smallest[r];
        }
    }
    return labels;
}

ClusterStats analyze(const OccupancyGrid &grid) {
    std::vector<int64_t> labels = component_labels(grid);
    size_t n = grid.site_count();
    int last = grid.dims.empty() ? 0 : grid.dims[0] - 1;
    std::vector<size_t> size(n, 0);
    std::vector<uint8_t> faces(n, 0);
    ClusterStats stats;
    for (size_t i = 0; i < n; i++) {
        if (labels[i] < 0) {
            continue;
        }
        size_t c = (size_t)labels[i];
        stats.occupied++;
        if (c == i) {
            stats.components++;
        }
        size[c]++;
        stats.largest = std::max(stats.largest, size[c]);
        int x = grid.axis0(i);
        faces[c] |= (x == 0 ? 1 : 0) | (x == last ? 2 : 0);
        stats.spanning |= faces[c] == 3;
    }
    return stats;
}

double spanning_probability(int L, int d, double p, size_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("spanning_probability needs at least one trial.");
    }
    size_t spanning = 0;
    for (size_t t = 0; t < trials; t++) {
        spanning += analyze(sample_grid(L, d, p, seed + t)).spanning;
    }
    return (double)spanning / (double)trials;
}

double critical_probability(int L, int d, uint64_t seed) {
    std::vector<double> u = site_uniforms(L, d, seed);
    OccupancyGrid grid;
    grid.dims.assign((size_t)d, L);
    grid.occupied.assign(u.size(), 0);
    std::vector<size_t> order(u.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return u[a] < u[b];
    });
    UnionFind uf(u.size());
    std::vector<uint8_t> faces(u.size(), 0);
    for (size_t i : order) {
        grid.occupied[i] = 1;
        int x = grid.axis0(i);
        faces[i] = (x == 0 ? 1 : 0) | (x == L - 1 ? 2 : 0);
        grid.for_each_neighbor(i, [&](size_t j) {
            if (grid.occupied[j]) {
                uint8_t merged = faces[uf.find(i)] | faces[uf.find(j)];
                faces[uf.unite(i, j)] = merged;
            }
        });
        if (faces[uf.find(i)] == 3) {
            return u[i];
        }
    }
    return 1;
}

ThresholdEstimate estimate_threshold(int d, const std::vector<int> &Ls, size_t trials, uint64_t seed) {
    if (Ls.size() < 2) {
        throw std::invalid_argument("estimate_threshold needs at least two lattice sizes.");
    }
    if (trials < 2) {
        throw std::invalid_argument("estimate_threshold needs at least two trials per size.");
    }
    std::vector<int> sizes = Ls;
    std::sort(sizes.begin(), sizes.end());
    ThresholdEstimate result;
    for (int L : sizes) {
        std::vector<double> critical(trials);
        for (size_t t = 0; t < trials; t++) {
            critical[t] = critical_probability(L, d, seed + t);
        }
        Crossing c;
        c.L = L;
        c.p = crossing_of(critical);

        std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (uint64_t)L));
        std::uniform_int_distribution<size_t> pick(0, trials - 1);
        double sum = 0;
        double sum_sq = 0;
        std::vector<double> resample(trials);
        for (size_t b = 0; b < kBootstrapSamples; b++) {
            for (auto &v : resample) {
                v = critical[pick(rng)];
            }
            double x = crossing_of(resample);
            sum += x;
            sum_sq += x * x;
        }
        double mean = sum / kBootstrapSamples;
        c.stderr = std::sqrt(std::max(0.0, sum_sq / kBootstrapSamples - mean * mean));

        // Independent grids around the crossing must not lose spanning as p grows.
        std::vector<double> fractions;
        uint64_t check_seed = seed + trials;
        for (double offset : kCheckOffsets) {
            double p = std::clamp(c.p + offset, 0.0, 1.0);
            fractions.push_back(spanning_probability(L, d, p, trials, check_seed));
            check_seed += trials;
        }
        for (size_t k = 0; k + 1 < fractions.size(); k++) {
            double a = fractions[k];
            double b = fractions[k + 1];
            double noise = std::sqrt((a * (1 - a) + b * (1 - b) + 2.0 / (double)trials) / (double)trials);
            if (b < a - 4 * noise) {
                std::stringstream msg;
                msg << "Spanning fraction drops from " << a << " to " << b << " as p increases near " << c.p
                    << " (L=" << L << ").";
                throw std::runtime_error(msg.str());
            }
        }
        result.crossings.push_back(c);
    }
    result.p_c = result.crossings.back().p;
    result.stderr = result.crossings.back().stderr;
    return result;
}

SpanningRow spanning_row(int L, int d, double p, size_t trials, uint64_t seed) {
    SpanningRow row;
    row.d = d;
    row.L = L;
    row.p = p;
    row.trials = trials;
    row.fraction = spanning_probability(L, d, p, trials, seed);
    row.stderr = std::sqrt(row.fraction * (1 - row.fraction) / (double)trials);
    return row;
}

std::string format_table(const std::vector<SpanningRow> &rows) {
    std::stringstream out;
    out << "# d\tL\tp\ttrials\tspanning_fraction\tstderr\n";
    for (const auto &r : rows) {
        out << r.d << "\t" << r.L << "\t" << r.p << "\t" << r.trials << "\t" << r.fraction << "\t" << r.stderr << "\n";
    }
    return out.str();
}

}  // namespace oneway
