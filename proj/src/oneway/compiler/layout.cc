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

#include "oneway/compiler/layout.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "oneway/gadgets/library.h"

namespace oneway {

namespace {

constexpr int kRotationWidth = 5;

const char *kind_name(GatePlacement::Kind kind) {
    switch (kind) {
        case GatePlacement::Kind::kPrep:
            return "prep";
        case GatePlacement::Kind::kRotation:
            return "rot";
        case GatePlacement::Kind::kCnot:
            return "cnot";
        default:
            return "pad";
    }
}

void append_cnot(LogicalCircuit &out, size_t c, size_t t) {
    if (c + 1 == t || t + 1 == c) {
        out.gates.push_back(GateSpec::cnot((Label)c, (Label)t));
        return;
    }
    // CNOT(c, t) = CNOT(c, m) CNOT(m, t) CNOT(c, m) CNOT(m, t) with m the neighbour of c toward t.
    size_t m = c < t ? c + 1 : c - 1;
    for (int k = 0; k < 2; k++) {
        append_cnot(out, m, t);
        append_cnot(out, c, m);
    }
}

Lattice as_two_axes(const Lattice &lattice) {
    if (lattice.rank() == 2) {
        return lattice;
    }
    if (lattice.rank() != 1) {
        throw std::invalid_argument("Circuits can only be laid out on 1D or 2D lattices.");
    }
    Lattice result({1, lattice.extents()[0]});
    for (int x = 0; x < lattice.extents()[0]; x++) {
        result.set_occupied(Site(0, x), lattice.occupied(Site(x)));
    }
    return result;
}

// Column bookkeeping shared by required_dims and layout.
struct Placer {
    size_t wires;
    bool measured_prep;
    std::vector<int> column;
    std::vector<GatePlacement> placements;
    std::vector<MeasurementPattern> gadgets;
    std::vector<std::vector<size_t>> wire_maps;

    Placer(size_t wires, bool measured_prep) : wires(wires), measured_prep(measured_prep), column(wires, 0) {
    }

    void place(
        GatePlacement::Kind kind, int gate, std::vector<size_t> wire_map, int width, const MeasurementPattern &gadget,
        int row, int first) {
        GatePlacement p;
        p.kind = kind;
        p.gate = gate;
        p.wires = wire_map;
        p.first_column = first;
        p.last_column = first + width - 1;
        MeasurementPattern moved = translate(gadget, Site(row, first));
        p.sites = moved.region();
        placements.push_back(std::move(p));
        gadgets.push_back(std::move(moved));
        wire_maps.push_back(std::move(wire_map));
    }

    void pad(size_t w, int to) {
        int length = to - column[w] + 1;
        if (length > 1) {
            place(GatePlacement::Kind::kPad, -1, {w}, length, build_wire(length), 2 * (int)w, column[w]);
            column[w] = to;
        }
    }

    void run(const LogicalCircuit &circuit) {
        if (measured_prep) {
            for (size_t w = 0; w < wires; w++) {
                QubitPrep in = circuit.input(w);
                place(GatePlacement::Kind::kPrep, -1, {w}, kRotationWidth, build_input_prep(in.alpha, in.beta),
                      2 * (int)w, 0);
                column[w] = kRotationWidth - 1;
            }
        }
        for (size_t g = 0; g < circuit.gates.size(); g++) {
            const GateSpec &gate = circuit.gates[g];
            if (gate.kind == GateSpec::Kind::kEulerRotation) {
                size_t w = gate.operands[0];
                place(GatePlacement::Kind::kRotation, (int)g, {w}, kRotationWidth,
                      build_rotation(gate.xi, gate.eta, gate.zeta), 2 * (int)w, column[w]);
                column[w] += kRotationWidth - 1;
            } else {
                size_t c = gate.operands[0];
                size_t t = gate.operands[1];
                int start = std::max(column[c], column[t]);
                pad(c, start);
                pad(t, start);
                MeasurementPattern gadget = build_cnot_composable();
                if (c > t) {
                    gadget = reflect_axis0(gadget, 0, 2);
                }
                place(GatePlacement::Kind::kCnot, (int)g, {c, t}, kComposableCnotWidth, gadget,
                      2 * (int)std::min(c, t), start);
                column[c] = column[t] = start + kComposableCnotWidth - 1;
            }
        }
        int last = *std::max_element(column.begin(), column.end());
        for (size_t w = 0; w < wires; w++) {
            pad(w, last);
        }
    }

    int last_column() const {
        return column.empty() ? 0 : column[0];
    }
};

// Inputs enter the program with no byproduct, so the symbolic incoming frame is zero.
MeasurementPattern without_input_frame(MeasurementPattern p) {
    auto zero_frame = [](Signal s) -> Parity {
        if (s.kind == Signal::Kind::kOutcome) {
            return s;
        }
        return Parity();
    };
    for (auto &step : p.steps) {
        step.sign_dep = step.sign_dep.substitute(zero_frame);
    }
    for (size_t w = 0; w < p.wires.size(); w++) {
        p.frame_script.x[w] = p.frame_script.x[w].substitute(zero_frame);
        p.frame_script.z[w] = p.frame_script.z[w].substitute(zero_frame);
    }
    return p;
}

void check_circuit(const LogicalCircuit &circuit) {
    circuit.validate();
    if (circuit.wires == 0) {
        throw std::invalid_argument("Circuit has no wires.");
    }
    for (const auto &g : circuit.gates) {
        if (g.kind == GateSpec::Kind::kRawUnitary) {
            throw std::invalid_argument("Only Euler rotations and CNOTs can be laid out, not " + g.str() + ".");
        }
    }
}

}  // namespace

QubitPrep LayoutPlan::input_prep(size_t wire) const {
    return options.measured_prep ? QubitPrep::plus() : source.input(wire);
}

LogicalCircuit expand_circuit(const LogicalCircuit &circuit) {
    check_circuit(circuit);
    LogicalCircuit out;
    out.wires = circuit.wires;
    out.inputs = circuit.inputs;
    for (const auto &g : circuit.gates) {
        if (g.kind == GateSpec::Kind::kCnot) {
            append_cnot(out, g.operands[0], g.operands[1]);
        } else {
            out.gates.push_back(g);
        }
    }
    return out;
}

std::pair<int, int> required_dims(const LogicalCircuit &circuit, const LayoutOptions &options) {
    LogicalCircuit expanded = expand_circuit(circuit);
    Placer placer(expanded.wires, options.measured_prep);
    placer.run(expanded);
    return {2 * (int)expanded.wires - 1, placer.last_column() + 1};
}

Lattice minimal_lattice(const LogicalCircuit &circuit, const LayoutOptions &options) {
    LogicalCircuit expanded = expand_circuit(circuit);
    Placer placer(expanded.wires, options.measured_prep);
    placer.run(expanded);
    Lattice result({2 * (int)expanded.wires - 1, placer.last_column() + 1});
    for (const auto &s : result.occupied_sites()) {
        result.set_occupied(s, false);
    }
    for (size_t w = 0; w < expanded.wires; w++) {
        result.set_occupied(Site(2 * (int)w, 0), true);
        result.set_occupied(Site(2 * (int)w, placer.last_column()), true);
    }
    for (const auto &p : placer.placements) {
        for (const auto &s : p.sites) {
            result.set_occupied(s, true);
        }
    }
    return result;
}

LayoutPlan layout(const LogicalCircuit &circuit, const Lattice &lattice_in, const LayoutOptions &options) {
    LayoutPlan plan;
    plan.source = circuit;
    plan.circuit = expand_circuit(circuit);
    plan.options = options;
    plan.lattice = as_two_axes(lattice_in);
    const Lattice &lattice = plan.lattice;
    size_t wires = plan.circuit.wires;

    Placer placer(wires, options.measured_prep);
    placer.run(plan.circuit);
    plan.last_column = placer.last_column();
    int rows = 2 * (int)wires - 1;
    int columns = plan.last_column + 1;
    const auto &ext = lattice.extents();
    if (ext[0] < rows || ext[1] < columns) {
        std::stringstream msg;
        msg << "Circuit needs a " << rows << " x " << columns << " lattice but the lattice is " << ext[0] << " x "
            << ext[1] << ".";
        throw LayoutError(msg.str(), rows, columns);
    }

    for (size_t w = 0; w < wires; w++) {
        plan.wire_rows.push_back(2 * (int)w);
        plan.inputs.push_back(Site(2 * (int)w, 0));
        plan.readouts.push_back(Site(2 * (int)w, plan.last_column));
    }
    std::set<Site> used(plan.readouts.begin(), plan.readouts.end());
    used.insert(plan.inputs.begin(), plan.inputs.end());
    for (const auto &p : placer.placements) {
        used.insert(p.sites.begin(), p.sites.end());
    }
    for (const auto &s : used) {
        if (!lattice.occupied(s)) {
            throw LayoutError(
                "Site (" + lattice.format(s) + ") is needed by the layout but is a hole; routing around holes is "
                "not supported.",
                rows, columns);
        }
    }
    for (const auto &s : lattice.occupied_sites()) {
        if (!used.count(s)) {
            plan.carved.push_back(s);
        }
    }

    PatternBuilder builder(plan.inputs);
    builder.append_carving(plan.carved);
    for (size_t k = 0; k < placer.placements.size(); k++) {
        GatePlacement p = placer.placements[k];
        p.first_step = builder.step_count();
        builder.append(placer.gadgets[k], placer.wire_maps[k]);
        p.step_count = builder.step_count() - p.first_step;
        plan.placements.push_back(std::move(p));
    }
    plan.program = without_input_frame(builder.build());
    plan.lowered = lower(plan.program, lattice, [&](const Site &s) {
        return initial_z_bit(lattice, s, options.convention);
    });
    return plan;
}

uint8_t initial_z_bit(const Lattice &lattice, const Site &s, EntanglingConvention convention) {
    if (convention == EntanglingConvention::kControlledZ) {
        return 0;
    }
    uint8_t parity = 0;
    for (const auto &n : lattice.neighbors(s)) {
        parity ^= (uint8_t)(n < s);
    }
    return parity;
}

void check_plan(const LayoutPlan &plan) {
    const Lattice &lat = plan.lattice;
    std::vector<std::set<Site>> outputs(plan.placements.size());
    for (size_t k = 0; k < plan.placements.size(); k++) {
        const auto &p = plan.placements[k];
        outputs[k].insert(p.sites.begin(), p.sites.end());
        for (size_t j = p.first_step; j < p.first_step + p.step_count; j++) {
            outputs[k].erase(plan.program.steps[j].site);
        }
    }
    std::map<Site, size_t> owner;
    for (size_t k = 0; k < plan.placements.size(); k++) {
        for (const auto &s : plan.placements[k].sites) {
            auto it = owner.find(s);
            if (it != owner.end() && !outputs[it->second].count(s)) {
                throw std::logic_error("Gadget regions overlap at (" + lat.format(s) + ").");
            }
            owner[s] = k;
        }
    }
    std::set<Site> used(plan.inputs.begin(), plan.inputs.end());
    used.insert(plan.readouts.begin(), plan.readouts.end());
    for (const auto &entry : owner) {
        used.insert(entry.first);
    }
    std::set<Site> all = used;
    for (const auto &s : plan.carved) {
        if (used.count(s)) {
            throw std::logic_error("Carved site (" + lat.format(s) + ") is also used by a gadget.");
        }
        if (!all.insert(s).second) {
            throw std::logic_error("Site (" + lat.format(s) + ") is carved twice.");
        }
    }
    std::vector<Site> occupied = lat.occupied_sites();
    if (all != std::set<Site>(occupied.begin(), occupied.end())) {
        throw std::logic_error("Carved, gadget and readout sites do not cover exactly the occupied sites.");
    }
}

size_t Schedule::step_count() const {
    size_t n = 0;
    for (const auto &r : rounds) {
        n += r.size();
    }
    return n;
}

Schedule schedule(const LayoutPlan &plan) {
    MeasurementPattern p = plan.lowered;
    uint32_t count = assign_rounds(p);
    Schedule s;
    s.rounds.resize(count);
    for (size_t k = 0; k < p.steps.size(); k++) {
        s.rounds[p.steps[k].round].push_back(k);
    }
    check_schedule(plan, s);
    return s;
}

void check_schedule(const LayoutPlan &plan, const Schedule &s) {
    const auto &steps = plan.lowered.steps;
    std::vector<int64_t> round_of(steps.size(), -1);
    for (size_t r = 0; r < s.rounds.size(); r++) {
        for (size_t k : s.rounds[r]) {
            if (k >= steps.size() || round_of[k] != -1) {
                throw std::logic_error("Schedule lists step " + std::to_string(k) + " twice or out of range.");
            }
            round_of[k] = (int64_t)r;
        }
    }
    for (size_t k = 0; k < steps.size(); k++) {
        if (round_of[k] < 0) {
            throw std::logic_error("Schedule is missing step " + std::to_string(k) + ".");
        }
        for (const auto &t : steps[k].sign_dep.terms()) {
            if (t.kind == Signal::Kind::kOutcome && round_of[t.index] >= round_of[k]) {
                throw std::logic_error(
                    "Step " + std::to_string(k) + " in round " + std::to_string(round_of[k]) + " reads " + t.str() +
                    " from round " + std::to_string(round_of[t.index]) + ".");
            }
        }
    }
}

std::string dump_plan(const LayoutPlan &plan) {
    std::stringstream out;
    const Lattice &lat = plan.lattice;
    out << "lattice " << lat.extents()[0] << " " << lat.extents()[1] << "\n";
    out << "convention "
        << (plan.options.convention == EntanglingConvention::kControlledZ ? "cz" : "ising") << "\n";
    out << "prep " << (plan.options.measured_prep ? "measured" : "written") << "\n";
    for (size_t w = 0; w < plan.inputs.size(); w++) {
        out << "wire " << w << " input=" << lat.format(plan.inputs[w]) << " readout=" << lat.format(plan.readouts[w])
            << "\n";
    }
    for (const auto &p : plan.placements) {
        out << "place " << kind_name(p.kind) << " gate=";
        if (p.gate < 0) {
            out << "-";
        } else {
            out << p.gate;
        }
        out << " wires=";
        for (size_t k = 0; k < p.wires.size(); k++) {
            out << (k ? "," : "") << p.wires[k];
        }
        out << " columns=" << p.first_column << "-" << p.last_column;
        out << " steps=" << p.first_step << "+" << p.step_count << "\n";
    }
    for (const auto &s : plan.carved) {
        out << "carve " << lat.format(s) << "\n";
    }
    out << dump_pattern(plan.lowered, lat);
    for (size_t w = 0; w < plan.lowered.wires.size(); w++) {
        out << "frame " << w << " x=" << plan.lowered.frame_script.x[w].str()
            << " z=" << plan.lowered.frame_script.z[w].str() << "\n";
    }
    return out.str();
}

std::string dump_schedule(const Schedule &s) {
    std::stringstream out;
    for (size_t r = 0; r < s.rounds.size(); r++) {
        out << "round " << r;
        for (size_t k : s.rounds[r]) {
            out << " " << k;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace oneway
