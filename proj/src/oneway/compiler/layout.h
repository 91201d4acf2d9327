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

#ifndef ONEWAY_COMPILER_LAYOUT_H
#define ONEWAY_COMPILER_LAYOUT_H

#include <stdexcept>
#include <string>
#include <vector>

#include "oneway/cluster/cluster_state.h"
#include "oneway/gadgets/pattern.h"
#include "oneway/qsim/circuit.h"

namespace oneway {

/// Raised when a circuit does not fit the lattice. Carries the smallest lattice that would work.
struct LayoutError : std::runtime_error {
    LayoutError(const std::string &message, int rows, int columns)
        : std::runtime_error(message), min_rows(rows), min_columns(columns) {
    }
    int min_rows;
    int min_columns;
};

/// One gadget placed on the lattice.
struct GatePlacement {
    enum class Kind : uint8_t { kPrep, kRotation, kCnot, kPad };
    Kind kind = Kind::kPad;
    /// Index into LayoutPlan::circuit.gates, or -1 for preps and pads.
    int gate = -1;
    std::vector<size_t> wires;
    int first_column = 0;
    int last_column = 0;
    /// Sites the gadget measures or outputs to, including its input sites.
    std::vector<Site> sites;
    /// Step index range [first_step, first_step + step_count) in the program.
    size_t first_step = 0;
    size_t step_count = 0;
};

struct LayoutOptions {
    EntanglingConvention convention = EntanglingConvention::kControlledZ;
    /// Prepare inputs with measurement-only rotation gadgets instead of writing them onto the
    /// input sites.
    bool measured_prep = false;
};

/// A circuit placed on a lattice, together with its measurement program.
struct LayoutPlan {
    Lattice lattice;
    /// The circuit as given.
    LogicalCircuit source;
    /// The circuit actually laid out: CNOTs between non-neighbouring wires are rewritten into
    /// CNOTs between neighbours.
    LogicalCircuit circuit;
    LayoutOptions options;
    std::vector<int> wire_rows;
    std::vector<Site> inputs;
    std::vector<Site> readouts;
    std::vector<GatePlacement> placements;
    std::vector<Site> carved;
    /// Composition of all gadgets, written against the idealized cluster.
    MeasurementPattern program;
    /// The program lowered onto this lattice and convention; this is what gets executed.
    MeasurementPattern lowered;
    /// Column of the readout sites.
    int last_column = 0;

    /// What each input site holds before entangling.
    QubitPrep input_prep(size_t wire) const;
};

/// Rewrites CNOTs between wires that are not neighbours as products of neighbour CNOTs.
LogicalCircuit expand_circuit(const LogicalCircuit &circuit);

/// Rows and columns a circuit needs.
std::pair<int, int> required_dims(const LogicalCircuit &circuit, const LayoutOptions &options = {});

/// Smallest lattice for the circuit with every site no gadget needs left as a hole.
Lattice minimal_lattice(const LogicalCircuit &circuit, const LayoutOptions &options = {});

/// Places the circuit on the lattice (rank 1 or 2; rank 1 is a single row).
///
/// Wire w runs along row 2w from column 0. Rotations take 5-site row segments, CNOTs the
/// 3 x 7 composable region between neighbouring wires, and lagging wires are padded with
/// odd-length X chains. Every occupied site not used by a gadget is Z-measured first.
/// Throws LayoutError if the lattice is too small or a hole sits on a site a gadget needs.
LayoutPlan layout(const LogicalCircuit &circuit, const Lattice &lattice, const LayoutOptions &options = {});

/// Throws std::logic_error if gadget regions overlap other than output-to-input, or if carved,
/// gadget and readout sites do not partition the occupied sites.
void check_plan(const LayoutPlan &plan);

/// Measurement rounds: rounds[r] lists the step indices measured in round r.
struct Schedule {
    std::vector<std::vector<size_t>> rounds;
    size_t step_count() const;
};

/// Groups the lowered program's steps into rounds. Round r holds the steps whose sign
/// dependencies only read outcomes of rounds < r.
Schedule schedule(const LayoutPlan &plan);

/// Throws std::logic_error if a step reads an outcome from its own round or a later one.
void check_schedule(const LayoutPlan &plan, const Schedule &s);

/// Deterministic line-oriented description of a plan.
std::string dump_plan(const LayoutPlan &plan);
/// One "round <r> <step> <step> ..." line per round.
std::string dump_schedule(const Schedule &s);

/// Pending z-bits a freshly entangled site starts with under the convention.
uint8_t initial_z_bit(const Lattice &lattice, const Site &s, EntanglingConvention convention);

}  // namespace oneway

#endif
