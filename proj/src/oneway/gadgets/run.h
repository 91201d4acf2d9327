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

#ifndef ONEWAY_GADGETS_RUN_H
#define ONEWAY_GADGETS_RUN_H

#include <functional>
#include <vector>

#include "oneway/cluster/cluster_state.h"
#include "oneway/gadgets/pattern.h"

namespace oneway {

struct GadgetReport {
    /// Raw outcome of each step, in step order.
    std::vector<Outcome> outcomes;
    /// Outgoing frame of each pattern wire.
    PauliFrame frame;
    /// Register labels of the wires' output sites, in wire order.
    std::vector<Label> output_labels;
};

/// Value of a lowered pattern's signal given raw outcomes so far and the incoming frame.
uint8_t signal_value(Signal s, const std::vector<Outcome> &outcomes, const PauliFrame &frame_in);

/// Evaluates a lowered frame script.
PauliFrame evaluate_frame(const ParityFrame &script, const std::vector<Outcome> &outcomes, const PauliFrame &frame_in);

/// Measures one step of a lowered pattern, choosing the sign from earlier raw outcomes.
Outcome run_lowered_step(
    ClusterState &cs,
    const MeasurementStep &step,
    const std::vector<Outcome> &outcomes,
    const PauliFrame &frame_in,
    const OutcomeSource &src,
    uint64_t key);

/// Executes a pattern on a cluster whose live sites include the pattern's region.
///
/// `frame_in` is the frame carried by each pattern wire at its input site. Step k draws its
/// outcome with key `key_offset + k`. The pattern is lowered against the cluster's live
/// adjacency and pending z-bits first; output sites' z-bits are folded into the returned frame.
GadgetReport run_pattern(
    ClusterState &cs,
    const MeasurementPattern &pattern,
    const PauliFrame &frame_in,
    OutcomeSource &src,
    uint64_t key_offset = 0);

/// Visits every outcome branch of a pattern with nonzero probability, depth first.
///
/// The callback sees the branch's report, the cluster after all steps, and the branch's
/// probability. The input cluster is not modified.
void sweep_branches(
    const ClusterState &cs,
    const MeasurementPattern &pattern,
    const PauliFrame &frame_in,
    const std::function<void(const GadgetReport &, const ClusterState &, double)> &callback);

/// Output state with the frame's byproducts undone, labeled by wire index.
///
/// The register must hold exactly the output sites.
StateRegister corrected_output(const ClusterState &cs, const GadgetReport &report);

}  // namespace oneway

#endif
