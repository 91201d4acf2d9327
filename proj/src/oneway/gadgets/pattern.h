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

#ifndef ONEWAY_GADGETS_PATTERN_H
#define ONEWAY_GADGETS_PATTERN_H

#include <functional>
#include <string>
#include <vector>

#include "oneway/cluster/lattice.h"
#include "oneway/frame/parity.h"
#include "oneway/frame/pauli_frame.h"
#include "oneway/qsim/state_register.h"

namespace oneway {

/// One single-qubit measurement of a pattern.
///
/// The measured direction is `base`, with the XY angle negated when `sign_dep` evaluates to 1.
/// sign_dep may read outcomes of earlier steps (Signal::outcome) and the incoming frame of the
/// pattern's wires (Signal::frame_x / frame_z).
struct MeasurementStep {
    Site site;
    MeasurementDirection base;
    Parity sign_dep;
    uint32_t round = 0;

    MeasurementDirection direction(uint8_t flip) const;
};

/// A logical qubit passing through a pattern, entering at `input` and leaving at `output`.
struct PatternWire {
    Site input;
    Site output;
};

/// A measurement program over lattice sites.
///
/// Patterns are written against an idealized cluster: every site in the pattern region is
/// entangled with its region neighbors under CZ, Z-measured sites are absent, and no site
/// carries a pending Z. Outcome signals in such a pattern mean "the outcome the idealized
/// cluster would have shown". `lower` rewrites a pattern into terms of the raw outcomes
/// observed on a concrete cluster.
///
/// frame_script gives each wire's outgoing frame as a parity over outcomes and incoming frame
/// bits.
struct MeasurementPattern {
    std::vector<MeasurementStep> steps;
    std::vector<PatternWire> wires;
    ParityFrame frame_script;

    /// Sites that are measured or that hold outputs.
    std::vector<Site> region() const;
    bool is_output(const Site &s) const;
};

/// Throws std::invalid_argument describing the first structural problem found:
/// duplicate sites, measured outputs, dependencies on same-or-later steps or on unknown wires,
/// sign dependencies on Z/X steps, or a frame script of the wrong width.
void validate(const MeasurementPattern &p);

/// One line per step: "step <idx> site=<coords> basis=<Z|X|XY:angle> sign_dep=<expr>".
std::string dump_pattern(const MeasurementPattern &p, const Lattice &coords);

/// Same pattern with every site moved by `offset`.
MeasurementPattern translate(const MeasurementPattern &p, const Site &offset);

/// Same pattern with axis-0 coordinates mirrored: x -> x0 + x1 - x.
MeasurementPattern reflect_axis0(const MeasurementPattern &p, int x0, int x1);

/// Rewrites an idealized pattern into raw-outcome form for a concrete cluster.
///
/// `adjacency` gives the neighbor relation of the region actually entangled (pattern sites and
/// any other sites that are Z-measured by the pattern). `pending_z` is the Z byproduct each site
/// carries before the pattern starts. Every outcome of an X/XY step becomes its raw outcome
/// XOR the raw outcomes of adjacent Z steps XOR its pending Z, and each output's frame z-bit
/// absorbs the same corrections. Rounds are recomputed. Throws if a Z step would have to be
/// read before it is measured, or an X/XY step has a neighbor outside the pattern.
MeasurementPattern lower(
    const MeasurementPattern &p, const Lattice &adjacency, const std::function<uint8_t(const Site &)> &pending_z);

/// Sets each step's round to one more than the largest round its sign dependency reads (0 if
/// it reads no outcomes). Returns the number of rounds.
uint32_t assign_rounds(MeasurementPattern &p);

/// Builds a pattern by chaining gadgets along logical wires.
///
/// Each wire starts at an input site with a symbolic incoming frame (fx<w>, fz<w>). Appending a
/// gadget checks that its input sites are the current positions of the wires it acts on, renumbers
/// its outcomes after the steps already present, replaces its incoming frame signals with the
/// wires' current frames, and moves the wires to the gadget's outputs.
class PatternBuilder {
   public:
    explicit PatternBuilder(std::vector<Site> inputs);

    /// gadget wire k acts on builder wire wire_map[k].
    void append(const MeasurementPattern &gadget, const std::vector<size_t> &wire_map);
    /// Adds Z steps removing the given sites.
    void append_carving(const std::vector<Site> &sites);

    const std::vector<Site> &positions() const {
        return positions_;
    }
    size_t step_count() const {
        return result_.steps.size();
    }
    MeasurementPattern build() const;

   private:
    std::vector<Site> positions_;
    MeasurementPattern result_;
};

}  // namespace oneway

#endif
