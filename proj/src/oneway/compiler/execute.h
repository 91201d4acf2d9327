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

#ifndef ONEWAY_COMPILER_EXECUTE_H
#define ONEWAY_COMPILER_EXECUTE_H

#include <map>
#include <string>
#include <vector>

#include "oneway/compiler/layout.h"
#include "oneway/frame/pauli_frame.h"

namespace oneway {

/// How the lattice is entangled over the course of a run.
struct ExecutionStrategy {
    enum class Kind : uint8_t { kEntangleOnce, kStaged };
    Kind kind = Kind::kEntangleOnce;
    /// Staged only: stage k entangles the sites in columns (b[k-1], b[k]] (column 0 goes to
    /// stage 0) and measures the sites in columns [b[k-1], b[k]). The sites in column b[k] stay
    /// live and carry the logical state into the next stage.
    std::vector<int> boundaries;

    static ExecutionStrategy entangle_once();
    /// Throws std::invalid_argument unless boundaries are strictly increasing and positive.
    static ExecutionStrategy staged(std::vector<int> boundaries);
    std::string str() const;
};

/// Columns at which a staged run may cut the plan: columns where every wire is between two
/// gadgets.
std::vector<int> gadget_boundaries(const LayoutPlan &plan);

/// Largest number of simultaneously live qubits a run needs.
size_t peak_live_qubits(const LayoutPlan &plan, const ExecutionStrategy &strategy);

struct ExecutionOptions {
    /// Basis the final logical qubits are read out in (after frame adjustment).
    MeasurementDirection readout = MeasurementDirection::z();
    /// Runs that would hold more live qubits than this are refused.
    size_t max_live_qubits = 26;
};

struct ShotRecord {
    /// Raw outcome of each lowered program step, by step index.
    std::vector<Outcome> outcomes;
    /// Pauli frame of the logical qubits at the readout sites.
    PauliFrame frame;
    /// Reported readout bit of each wire, with the frame already accounted for.
    std::vector<Outcome> readout;
};

struct ExecutionResult {
    std::vector<ShotRecord> shots;
    /// Count of each readout string; character w is wire w's bit.
    std::map<std::string, size_t> histogram() const;
};

/// Runs the plan's program shot by shot.
///
/// With a sampled source, shot i draws from OutcomeSource::sampled(src.seed() + i); other sources
/// are used as given for every shot. Step k draws with key k, and the readout of wire w with key
/// step_count + w, so both strategies see the same outcomes.
ExecutionResult execute(
    const LayoutPlan &plan,
    const ExecutionStrategy &strategy,
    const OutcomeSource &src,
    size_t shots,
    const ExecutionOptions &options = {});

/// A run stopped just before readout.
struct Branch {
    ShotRecord record;
    ClusterState cluster;
};

/// Runs every program step once and returns the cluster holding only the readout sites.
Branch run_branch(
    const LayoutPlan &plan,
    const ExecutionStrategy &strategy,
    const OutcomeSource &src,
    const ExecutionOptions &options = {});

/// Logical output state of a branch with its frame undone, labeled by wire (wire 0 first).
StateRegister corrected_state(const LayoutPlan &plan, const Branch &branch);

/// Exact Z-basis readout distribution of a circuit, keyed like ExecutionResult::histogram.
std::map<std::string, double> oracle_distribution(const LogicalCircuit &circuit);

/// Total-variation distance between an empirical histogram and a distribution.
double total_variation(const std::map<std::string, size_t> &counts, const std::map<std::string, double> &p);

}  // namespace oneway

#endif
