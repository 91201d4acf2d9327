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

#include "oneway/cli/cli.h"

#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "oneway/cluster/cluster_state.h"
#include "oneway/cluster/shapes.h"
#include "oneway/compiler/execute.h"
#include "oneway/gadgets/library.h"
#include "oneway/gadgets/run.h"
#include "oneway/gadgets/testing.h"
#include "oneway/percolation/percolation.h"
#include "oneway/qsim/gates.h"

namespace oneway {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_number(const std::string &word, const std::string &what) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(word, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != word.size() || !std::isfinite(v)) {
        throw std::invalid_argument("expected a number for " + what + " but got '" + word + "'");
    }
    return v;
}

size_t parse_index(const std::string &word, const std::string &what) {
    size_t used = 0;
    long long v = -1;
    try {
        v = std::stoll(word, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != word.size() || v < 0) {
        throw std::invalid_argument("expected a non-negative integer for " + what + " but got '" + word + "'");
    }
    return (size_t)v;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

EntanglingConvention parse_convention(const std::string &name) {
    if (name == "cz") {
        return EntanglingConvention::kControlledZ;
    }
    if (name == "ising") {
        return EntanglingConvention::kIsingProjector;
    }
    throw UsageError("unknown convention '" + name + "' (expected cz or ising)");
}

const char *convention_name(EntanglingConvention c) {
    return c == EntanglingConvention::kControlledZ ? "cz" : "ising";
}

MeasurementDirection parse_readout(const std::string &text) {
    if (text == "z") {
        return MeasurementDirection::z();
    }
    if (text == "x") {
        return MeasurementDirection::x();
    }
    if (text.rfind("xy:", 0) == 0) {
        try {
            return MeasurementDirection::xy(parse_number(text.substr(3), "readout angle"));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("unknown readout basis '" + text + "' (expected z, x or xy:<angle>)");
}

ExecutionStrategy parse_strategy(const std::string &text, const LayoutPlan &plan) {
    if (text == "once") {
        return ExecutionStrategy::entangle_once();
    }
    if (text == "staged") {
        return ExecutionStrategy::staged(gadget_boundaries(plan));
    }
    if (text.rfind("staged:", 0) == 0) {
        std::vector<int> cuts;
        std::stringstream list(text.substr(7));
        std::string item;
        while (std::getline(list, item, ',')) {
            try {
                cuts.push_back((int)parse_index(item, "stage boundary"));
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
        return ExecutionStrategy::staged(cuts);
    }
    throw UsageError("unknown strategy '" + text + "' (expected once, staged or staged:<c1>,<c2>,...)");
}

Lattice parse_dims(const std::string &text) {
    std::vector<int> extents;
    std::stringstream list(text);
    std::string item;
    while (std::getline(list, item, 'x')) {
        try {
            extents.push_back((int)parse_index(item, "lattice dimension"));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    return Lattice(extents);
}

std::string dims_str(const Lattice &lattice) {
    std::string s;
    for (size_t a = 0; a < lattice.rank(); a++) {
        s += (a ? "x" : "") + std::to_string(lattice.extents()[a]);
    }
    return s;
}

struct SimulateArgs {
    std::string circuit;
    uint64_t seed = 1;
    size_t shots = 1000;
    std::string strategy = "once";
    std::string lattice;
    std::string dims;
    std::string convention = "cz";
    std::string readout = "z";
    bool measured_prep = false;
};

int simulate(const SimulateArgs &a, bool trace, std::ostream &out, std::ostream &err) {
    LogicalCircuit circuit;
    try {
        circuit = parse_circuit(read_file(a.circuit));
    } catch (const CircuitParseError &e) {
        throw UsageError(a.circuit + ": " + e.what());
    }
    LayoutOptions options{parse_convention(a.convention), a.measured_prep};
    Lattice lattice;
    if (!a.lattice.empty()) {
        try {
            lattice = Lattice::parse(read_file(a.lattice));
        } catch (const std::invalid_argument &e) {
            throw UsageError(a.lattice + ": " + e.what());
        }
    } else if (!a.dims.empty()) {
        lattice = parse_dims(a.dims);
    } else {
        auto [rows, columns] = required_dims(circuit, options);
        lattice = Lattice({rows, columns});
    }
    LayoutPlan plan;
    try {
        plan = layout(circuit, lattice, options);
    } catch (const LayoutError &e) {
        throw UsageError(
            std::string(e.what()) + " Minimal lattice: " + std::to_string(e.min_rows) + "x" +
            std::to_string(e.min_columns) + ".");
    }
    ExecutionStrategy strategy = parse_strategy(a.strategy, plan);
    ExecutionOptions exec;
    exec.readout = parse_readout(a.readout);
    if (trace) {
        err << dump_plan(plan) << dump_schedule(schedule(plan));
    }
    auto result = execute(plan, strategy, OutcomeSource::sampled(a.seed), a.shots, exec);
    if (trace) {
        for (size_t s = 0; s < result.shots.size(); s++) {
            err << "shot " << s << " readout=";
            for (Outcome b : result.shots[s].readout) {
                err << (int)b;
            }
            err << "\n" << dump_frame(result.shots[s].frame);
        }
    }
    out << "# simulate circuit=" << a.circuit << " seed=" << a.seed << " shots=" << a.shots
        << " strategy=" << strategy.str() << " convention=" << convention_name(options.convention)
        << " readout=" << exec.readout.str() << " lattice=" << dims_str(plan.lattice)
        << " qubits=" << plan.lattice.occupied_count() << "\n";
    out << "# readout\tcount\n";
    auto counts = result.histogram();
    for (const auto &[bits, count] : counts) {
        out << bits << "\t" << count << "\n";
    }
    if (exec.readout.kind == MeasurementDirection::Kind::kZ && a.shots > 0) {
        out << "# total_variation_vs_oracle=" << total_variation(counts, oracle_distribution(circuit)) << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    size_t max_qubits = 8;
    size_t random = 200;
    uint64_t seed = 1;
};

int verify(const VerifyArgs &a, std::ostream &out) {
    if (a.max_qubits < 1 || a.max_qubits > 16) {
        throw UsageError("--max-qubits must be between 1 and 16");
    }
    auto shapes = correlation_suite_shapes(a.max_qubits, a.random, a.seed);
    out << "# verify max_qubits=" << a.max_qubits << " random=" << a.random << " seed=" << a.seed << "\n";
    out << "# id\trank\tsites\textents\tconvention\tresult\n";
    size_t failures = 0;
    size_t checked = 0;
    for (size_t id = 0; id < shapes.size(); id++) {
        for (auto convention : {EntanglingConvention::kControlledZ, EntanglingConvention::kIsingProjector}) {
            auto cs = entangle_cluster(shapes[id], {}, convention);
            bool ok = true;
            for (const auto &s : shapes[id].occupied_sites()) {
                try {
                    ok &= verify_correlation(cs, s) == expected_sign(cs, s);
                } catch (const std::runtime_error &) {
                    ok = false;
                }
                if (convention == EntanglingConvention::kControlledZ) {
                    ok &= expected_sign(cs, s) == 1;
                }
            }
            checked++;
            failures += !ok;
            out << id << "\t" << shapes[id].rank() << "\t" << shapes[id].occupied_count() << "\t"
                << dims_str(shapes[id]) << "\t" << convention_name(convention) << "\t" << (ok ? "pass" : "FAIL")
                << "\n";
        }
    }
    out << "# clusters=" << checked << " failures=" << failures << "\n";
    return failures ? kExitVerificationFailed : kExitOk;
}

struct GadgetArgs {
    std::string kind;
    std::vector<std::string> params;
    size_t inputs = 3;
    uint64_t seed = 1;
    std::string convention = "cz";
};

int gadget_test(const GadgetArgs &a, std::ostream &out) {
    std::vector<double> values;
    for (size_t k = 0; k < a.params.size(); k++) {
        try {
            values.push_back(parse_number(a.params[k], a.kind + " parameter " + std::to_string(k + 1)));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    auto expect_params = [&](size_t lo, size_t hi) {
        if (values.size() < lo || values.size() > hi) {
            throw UsageError(
                "gadget '" + a.kind + "' takes " + std::to_string(lo) +
                (hi > lo ? " to " + std::to_string(hi) : "") + " parameters");
        }
    };
    MeasurementPattern pattern;
    Matrix unitary;
    bool prep = false;
    QubitPrep target;
    if (a.kind == "wire") {
        expect_params(0, 1);
        double n = values.empty() ? 5 : values[0];
        if (n < 1 || n > 15 || n != std::floor(n)) {
            throw UsageError("wire length must be an integer from 1 to 15");
        }
        pattern = build_wire((int)n);
        unitary = (int)n % 2 ? Matrix::identity(2) : even_wire_unitary();
    } else if (a.kind == "rot") {
        expect_params(3, 3);
        pattern = build_rotation(values[0], values[1], values[2]);
        unitary = euler_rotation(values[0], values[1], values[2]);
    } else if (a.kind == "cnot") {
        expect_params(0, 0);
        pattern = build_cnot_composable();
        unitary = cnot_matrix();
    } else if (a.kind == "cnot-minimal") {
        expect_params(0, 0);
        pattern = build_cnot_minimal();
        unitary = cnot_matrix();
    } else if (a.kind == "prep") {
        expect_params(4, 4);
        target = QubitPrep::state({values[0], values[1]}, {values[2], values[3]});
        pattern = build_input_prep(target.alpha, target.beta);
        prep = true;
    } else {
        throw UsageError("unknown gadget '" + a.kind + "' (expected wire, rot, cnot, cnot-minimal or prep)");
    }
    auto convention = parse_convention(a.convention);
    Lattice lattice = region_lattice(pattern);
    std::seed_seq seq{(uint32_t)a.seed, (uint32_t)(a.seed >> 32)};
    std::mt19937_64 rng(seq);
    size_t wires = pattern.wires.size();

    out << "# gadget-test kind=" << a.kind;
    for (const auto &p : a.params) {
        out << " " << p;
    }
    out << " inputs=" << (prep ? 1 : a.inputs) << " seed=" << a.seed << " convention=" << convention_name(convention)
        << " steps=" << pattern.steps.size() << "\n";
    out << "# input\tbranches\ttotal_probability\tworst_fidelity\n";
    double worst = 1;
    for (size_t k = 0; k < (prep ? 1 : a.inputs); k++) {
        std::vector<QubitPrep> in;
        for (size_t w = 0; w < wires; w++) {
            in.push_back(prep ? QubitPrep::plus() : random_qubit(rng));
        }
        StateRegister expected = prep ? init_register({target}) : oracle_output(in, unitary);
        PauliFrame frame_in(wires);
        auto cs = prepare_gadget_cluster(lattice, pattern, in, frame_in, convention);
        size_t branches = 0;
        double total = 0;
        double worst_here = 1;
        sweep_branches(cs, pattern, frame_in, [&](const GadgetReport &report, const ClusterState &done, double p) {
            branches++;
            total += p;
            worst_here = std::min(worst_here, fidelity_up_to_phase(corrected_output(done, report), expected));
        });
        worst = std::min(worst, worst_here);
        out << k << "\t" << branches << "\t" << total << "\t" << worst_here << "\n";
    }
    out.precision(17);
    out << "# worst_fidelity=" << worst << "\n";
    return worst >= 1 - 1e-10 ? kExitOk : kExitVerificationFailed;
}

struct PercolateArgs {
    int d = 3;
    std::vector<int> L{32};
    std::vector<double> p{0.44};
    size_t trials = 200;
    uint64_t seed = 1;
    bool threshold = false;
};

int percolate(const PercolateArgs &a, std::ostream &out) {
    if (a.trials == 0) {
        throw UsageError("--trials must be positive");
    }
    if (a.threshold) {
        ThresholdEstimate est;
        try {
            est = estimate_threshold(a.d, a.L, a.trials, a.seed);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        out << "# percolate threshold d=" << a.d << " trials=" << a.trials << " seed=" << a.seed << "\n";
        out << "# d\tL\tcrossing\tstderr\n";
        for (const auto &c : est.crossings) {
            out << a.d << "\t" << c.L << "\t" << c.p << "\t" << c.stderr << "\n";
        }
        out << "# estimate p_c=" << est.p_c << " stderr=" << est.stderr << "\n";
        return kExitOk;
    }
    std::vector<SpanningRow> rows;
    for (int L : a.L) {
        for (double p : a.p) {
            try {
                rows.push_back(spanning_row(L, a.d, p, a.trials, a.seed));
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
    }
    out << "# percolate seed=" << a.seed << "\n" << format_table(rows);
    return kExitOk;
}

}  // namespace

LogicalCircuit parse_circuit(std::string_view text) {
    std::stringstream in{std::string(text)};
    std::string line;
    LogicalCircuit circuit;
    bool have_wires = false;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        line = line.substr(0, line.find('#'));
        std::stringstream words(line);
        std::vector<std::string> w;
        std::string word;
        while (words >> word) {
            w.push_back(word);
        }
        if (w.empty()) {
            continue;
        }
        auto fail = [&](const std::string &msg) {
            throw CircuitParseError(line_number, msg);
        };
        auto arity = [&](size_t n) {
            if (w.size() != n + 1) {
                fail("'" + w[0] + "' takes " + std::to_string(n) + " arguments but got " +
                     std::to_string(w.size() - 1));
            }
        };
        auto number = [&](size_t k) {
            try {
                return parse_number(w[k], "'" + w[0] + "'");
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
            return 0.0;
        };
        auto wire = [&](size_t k) {
            size_t q = 0;
            try {
                q = parse_index(w[k], "a wire");
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
            if (q >= circuit.wires) {
                fail("wire " + std::to_string(q) + " out of range (the circuit has " + std::to_string(circuit.wires) +
                     " wires)");
            }
            return (Label)q;
        };
        if (w[0] == "wires") {
            arity(1);
            if (have_wires) {
                fail("duplicate 'wires' line");
            }
            size_t n = 0;
            try {
                n = parse_index(w[1], "'wires'");
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
            if (n == 0) {
                fail("a circuit needs at least one wire");
            }
            circuit.wires = n;
            have_wires = true;
            continue;
        }
        if (!have_wires) {
            fail("expected 'wires <n>' before '" + w[0] + "'");
        }
        if (w[0] == "rot") {
            arity(4);
            Label q = wire(1);
            circuit.gates.push_back(GateSpec::rotation(q, number(2), number(3), number(4)));
        } else if (w[0] == "cnot") {
            arity(2);
            Label c = wire(1);
            Label t = wire(2);
            if (c == t) {
                fail("cnot control and target must differ");
            }
            circuit.gates.push_back(GateSpec::cnot(c, t));
        } else if (w[0] == "prep") {
            arity(5);
            Label q = wire(1);
            if (circuit.inputs.size() < circuit.wires) {
                circuit.inputs.resize(circuit.wires, QubitPrep::plus());
            }
            try {
                circuit.inputs[q] = QubitPrep::state({number(2), number(3)}, {number(4), number(5)});
            } catch (const CircuitParseError &) {
                throw;
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
        } else {
            fail("unknown instruction '" + w[0] + "'");
        }
    }
    if (!have_wires) {
        throw CircuitParseError(line_number, "missing 'wires <n>' line");
    }
    return circuit;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulates measurement-based quantum computation on cluster states.", "oneway"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool trace = false;
    std::string output;
    app.add_flag("--trace", trace, "Write plans, schedules and per-shot frames to stderr");
    app.add_option("--output", output, "Write results to this file instead of stdout");

    SimulateArgs sim_args;
    auto *sim = app.add_subcommand("simulate", "Compile a circuit onto a cluster and sample readouts");
    sim->add_option("circuit", sim_args.circuit, "Circuit file")->required();
    sim->add_option("--seed", sim_args.seed, "Base seed; shot i uses seed + i")->capture_default_str();
    sim->add_option("--shots", sim_args.shots, "Number of shots")->capture_default_str();
    sim->add_option("--strategy", sim_args.strategy, "once, staged, or staged:<c1>,<c2>,...")->capture_default_str();
    sim->add_option("--lattice", sim_args.lattice, "Lattice file (default: the smallest full lattice)");
    sim->add_option("--dims", sim_args.dims, "Lattice extents, e.g. 3x12");
    sim->add_option("--convention", sim_args.convention, "cz or ising")->capture_default_str();
    sim->add_option("--readout", sim_args.readout, "z, x or xy:<angle>")->capture_default_str();
    sim->add_flag("--measured-prep", sim_args.measured_prep, "Prepare inputs with measurement gadgets");

    VerifyArgs verify_args;
    auto *ver = app.add_subcommand("verify", "Check cluster-state correlations on many cluster shapes");
    ver->add_option("--max-qubits", verify_args.max_qubits, "Largest cluster size")->capture_default_str();
    ver->add_option("--random", verify_args.random, "Number of random shapes")->capture_default_str();
    ver->add_option("--seed", verify_args.seed, "Seed for random shapes")->capture_default_str();

    GadgetArgs gadget_args;
    auto *gad = app.add_subcommand("gadget-test", "Check every outcome branch of a gadget against its gate");
    gad->add_option("kind", gadget_args.kind, "wire [n] | rot xi eta zeta | cnot | cnot-minimal | prep a b c d")
        ->required();
    gad->add_option("params", gadget_args.params, "Gadget parameters");
    gad->add_option("--inputs", gadget_args.inputs, "Random input states")->capture_default_str();
    gad->add_option("--seed", gadget_args.seed, "Seed for the input states")->capture_default_str();
    gad->add_option("--convention", gadget_args.convention, "cz or ising")->capture_default_str();

    PercolateArgs perc_args;
    auto *perc = app.add_subcommand("percolate", "Site-percolation spanning fractions and threshold");
    perc->add_option("--d", perc_args.d, "Grid dimension (2 or 3)")->capture_default_str();
    perc->add_option("--L", perc_args.L, "Side lengths")->capture_default_str();
    perc->add_option("--p", perc_args.p, "Occupation probabilities")->capture_default_str();
    perc->add_option("--trials", perc_args.trials, "Grids per point")->capture_default_str();
    perc->add_option("--seed", perc_args.seed, "Base seed; trial t uses seed + t")->capture_default_str();
    perc->add_flag("--threshold", perc_args.threshold, "Estimate the 50% spanning crossing over the sizes in --L");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "oneway: cannot write '" << output << "'\n";
            return kExitUsage;
        }
        sink = &file;
    }
    try {
        if (*sim) {
            return simulate(sim_args, trace, *sink, err);
        }
        if (*ver) {
            return verify(verify_args, *sink);
        }
        if (*gad) {
            return gadget_test(gadget_args, *sink);
        }
        return percolate(perc_args, *sink);
    } catch (const UsageError &e) {
        err << "oneway: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "oneway: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "oneway: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace oneway
