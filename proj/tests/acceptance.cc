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

// Acceptance suite. Runs every acceptance criterion at its stated tolerance and time limit and
// prints one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oneway/cluster/cluster_state.h"
#include "oneway/cluster/shapes.h"
#include "oneway/compiler/execute.h"
#include "oneway/compiler/testing.h"
#include "oneway/frame/pauli_frame.h"
#include "oneway/gadgets/library.h"
#include "oneway/gadgets/run.h"
#include "oneway/gadgets/testing.h"
#include "oneway/percolation/percolation.h"
#include "oneway/qsim/gates.h"

using namespace oneway;

namespace {

// Collects failures and a one-line summary for a criterion.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok) {
            failures_++;
            if (first_failure_.empty()) {
                first_failure_ = what;
            }
        }
    }
    void note(const std::string &text) {
        notes_ += (notes_.empty() ? "" : ", ") + text;
    }
    bool ok() const {
        return failures_ == 0;
    }
    std::string summary() const {
        std::string s = notes_;
        if (failures_) {
            s += "; " + std::to_string(failures_) + " failure(s), first: " + first_failure_;
        }
        return s;
    }

   private:
    size_t failures_ = 0;
    std::string first_failure_;
    std::string notes_;
};

std::string fmt(double v, int precision = 6) {
    std::stringstream ss;
    ss.precision(precision);
    ss << v;
    return ss.str();
}

// Largest entry-wise difference after aligning the global phase of a to b.
double phase_aligned_diff(const Matrix &a, const Matrix &b) {
    Complex t = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            t += std::conj(a(i, j)) * b(i, j);
        }
    }
    Complex phase = std::abs(t) > 0 ? t / std::abs(t) : Complex(1);
    return (a * phase).max_abs_diff(b);
}

struct SweepStats {
    double worst = 1;
    size_t branches = 0;
    double total_probability = 0;
};

SweepStats sweep(
    const MeasurementPattern &p,
    const std::vector<QubitPrep> &inputs,
    const PauliFrame &frame_in,
    const StateRegister &expected,
    EntanglingConvention convention = EntanglingConvention::kControlledZ) {
    auto cs = prepare_gadget_cluster(region_lattice(p), p, inputs, frame_in, convention);
    SweepStats s;
    sweep_branches(cs, p, frame_in, [&](const GadgetReport &report, const ClusterState &done, double prob) {
        s.branches++;
        s.total_probability += prob;
        s.worst = std::min(s.worst, fidelity_up_to_phase(corrected_output(done, report), expected));
    });
    return s;
}

PauliFrame random_frame(std::mt19937_64 &rng, size_t wires) {
    PauliFrame f(wires);
    for (size_t w = 0; w < wires; w++) {
        f.x[w] = rng() & 1;
        f.z[w] = rng() & 1;
    }
    return f;
}

Matrix power(const Matrix &m, int k) {
    return k % 2 ? m : Matrix::identity(2);
}

void correlation_suite(Check &check) {
    auto shapes = correlation_suite_shapes(12, 200, 2026);
    size_t sites = 0;
    size_t largest = 0;
    for (size_t id = 0; id < shapes.size(); id++) {
        const Lattice &shape = shapes[id];
        largest = std::max(largest, shape.occupied_count());
        auto cz = entangle_cluster(shape, {}, EntanglingConvention::kControlledZ);
        auto ising = entangle_cluster(shape, {}, EntanglingConvention::kIsingProjector);
        for (const auto &s : shape.occupied_sites()) {
            sites++;
            int sign = 0;
            try {
                sign = verify_correlation(cz, s);
            } catch (const std::runtime_error &) {
            }
            check.expect(sign == 1, "shape " + std::to_string(id) + " site " + shape.format(s) + " under CZ");
            int ising_sign = 0;
            try {
                ising_sign = verify_correlation(ising, s);
            } catch (const std::runtime_error &) {
            }
            check.expect(
                ising_sign == expected_sign(ising, s),
                "shape " + std::to_string(id) + " site " + shape.format(s) + " under the projector convention");
        }
    }
    check.note(std::to_string(shapes.size()) + " clusters");
    check.note(std::to_string(sites) + " sites");
    check.note("largest " + std::to_string(largest) + " sites");
}

void wire_suite(Check &check) {
    std::mt19937_64 rng(2);
    double worst = 1;
    size_t branches = 0;
    for (int n : {3, 5, 7, 9}) {
        auto p = build_wire(n);
        Matrix u = n % 2 ? Matrix::identity(2) : even_wire_unitary();
        for (int k = 0; k < 20; k++) {
            std::vector<QubitPrep> in{random_qubit(rng)};
            auto s = sweep(p, in, random_frame(rng, 1), oracle_output(in, u));
            check.expect(s.branches == (size_t)1 << (n - 1), "wire " + std::to_string(n) + " branch count");
            check.expect(std::abs(s.total_probability - 1) < 1e-10, "wire probabilities sum to 1");
            check.expect(s.worst >= 1 - 1e-10, "wire " + std::to_string(n) + " fidelity " + fmt(s.worst, 17));
            worst = std::min(worst, s.worst);
            branches += s.branches;
        }
    }
    check.note(std::to_string(branches) + " branches");
    check.note("worst fidelity " + fmt(worst, 17));
}

void rotation_suite(Check &check) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 1;
    size_t branches = 0;
    for (int trial = 0; trial < 50; trial++) {
        double xi = angle(rng);
        double eta = angle(rng);
        double zeta = angle(rng);
        auto p = build_rotation(xi, eta, zeta);
        Matrix u = euler_rotation(xi, eta, zeta);
        for (int k = 0; k < 5; k++) {
            std::vector<QubitPrep> in{random_qubit(rng)};
            auto s = sweep(p, in, random_frame(rng, 1), oracle_output(in, u));
            check.expect(s.branches == 16, "rotation branch count");
            check.expect(s.worst >= 1 - 1e-10, "rotation (" + fmt(xi) + ", " + fmt(eta) + ", " + fmt(zeta) +
                                                   ") fidelity " + fmt(s.worst, 17));
            worst = std::min(worst, s.worst);
            branches += s.branches;
        }
    }
    check.note(std::to_string(branches) + " branches");
    check.note("worst fidelity " + fmt(worst, 17));
}

void cnot_suite(Check &check) {
    auto p = build_cnot_minimal();
    // Wire 0 is the control qubit at (0,1); wire 1 is the target, running from (1,0) to (1,2).
    size_t cases = 0;
    double worst = 1;
    for (auto convention : {EntanglingConvention::kIsingProjector, EntanglingConvention::kControlledZ}) {
        bool ising = convention == EntanglingConvention::kIsingProjector;
        for (int i1 = 0; i1 < 2; i1++) {
            for (int i4 = 0; i4 < 2; i4++) {
                for (Outcome s1 : {0, 1}) {
                    for (Outcome s2 : {0, 1}) {
                        std::vector<QubitPrep> in{
                            i4 ? QubitPrep::one() : QubitPrep::zero(), i1 ? QubitPrep::one() : QubitPrep::zero()};
                        auto cs = prepare_gadget_cluster(region_lattice(p), p, in, PauliFrame(2), convention);
                        auto src = OutcomeSource::forced({s1, s2});
                        auto report = run_pattern(cs, p, PauliFrame(2), src);
                        auto out = cs.reg.reordered(report.output_labels);
                        // Z_t^(s1+1) X_t^s2 Z_c^s1 under the projector interaction; the constant
                        // Z_t is absent under CZ.
                        Matrix target = power(pauli_z(), s1 + (ising ? 1 : 0)) * power(pauli_x(), s2);
                        Matrix byproduct = power(pauli_z(), s1).kron(target);
                        auto expected = init_register(
                            {in[0], (i1 ^ i4) ? QubitPrep::one() : QubitPrep::zero()}, out.labels);
                        apply_matrix(expected, byproduct, out.labels);
                        double f = fidelity_up_to_phase(out, expected);
                        check.expect(
                            f >= 1 - 1e-10, std::string(ising ? "projector" : "CZ") + " case i1=" +
                                                std::to_string(i1) + " i4=" + std::to_string(i4) + " s1=" +
                                                std::to_string(s1) + " s2=" + std::to_string(s2));
                        worst = std::min(worst, f);
                        cases++;
                    }
                }
            }
        }
    }
    // Entangling inputs: control |+>, target |0> gives a Bell pair; plus random product inputs.
    std::mt19937_64 rng(4);
    size_t branches = 0;
    for (int k = 0; k < 6; k++) {
        std::vector<QubitPrep> in =
            k == 0 ? std::vector<QubitPrep>{QubitPrep::plus(), QubitPrep::zero()}
                   : std::vector<QubitPrep>{random_qubit(rng), random_qubit(rng)};
        for (auto convention : {EntanglingConvention::kControlledZ, EntanglingConvention::kIsingProjector}) {
            auto s = sweep(p, in, PauliFrame(2), oracle_output(in, cnot_matrix()), convention);
            check.expect(s.branches == 4, "minimal CNOT has 4 branches");
            check.expect(s.worst >= 1 - 1e-10, "minimal CNOT oracle fidelity " + fmt(s.worst, 17));
            worst = std::min(worst, s.worst);
            branches += s.branches;
        }
    }
    check.note(std::to_string(cases) + " formula cases");
    check.note(std::to_string(branches) + " oracle branches");
    check.note("worst fidelity " + fmt(worst, 17));
}

struct TrialCircuit {
    LogicalCircuit circuit;
    LayoutPlan plan;
};

// Random circuit that fits the qubit budget once laid out on its minimal lattice.
TrialCircuit fitting_circuit(
    std::mt19937_64 &rng, size_t wires, size_t max_gates, size_t min_gates, size_t max_qubits,
    const LayoutOptions &options, const std::function<bool(const LayoutPlan &)> &accept) {
    for (int attempt = 0;; attempt++) {
        size_t gates = min_gates + rng() % (max_gates - min_gates + 1);
        LogicalCircuit c = random_circuit(rng, wires, gates);
        Lattice lattice = minimal_lattice(c, options);
        if (wires == 1 && rng() % 2) {
            // Also exercise carving: a full lattice with a spare row below the wire.
            auto dims = required_dims(c, options);
            lattice = Lattice({2, dims.second});
        }
        if (lattice.occupied_count() > max_qubits) {
            continue;
        }
        LayoutPlan plan = layout(c, lattice, options);
        if (accept(plan)) {
            return {c, plan};
        }
        if (attempt > 10000) {
            throw std::runtime_error("could not find a fitting circuit");
        }
    }
}

void strategy_suite(Check &check) {
    std::mt19937_64 rng(5);
    size_t compared = 0;
    for (int trial = 0; trial < 20; trial++) {
        LayoutOptions options{
            trial % 2 ? EntanglingConvention::kIsingProjector : EntanglingConvention::kControlledZ, trial % 5 == 4};
        size_t wires = 1 + trial % 2;
        auto t = fitting_circuit(rng, wires, 4, 1, 22, options, [](const LayoutPlan &plan) {
            return !gadget_boundaries(plan).empty();
        });
        auto cuts = gadget_boundaries(t.plan);
        int cut = cuts[rng() % cuts.size()];
        auto once = execute(t.plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(1000 + trial), 40);
        auto staged = execute(t.plan, ExecutionStrategy::staged({cut}), OutcomeSource::sampled(1000 + trial), 40);
        for (size_t s = 0; s < once.shots.size(); s++) {
            check.expect(
                once.shots[s].readout == staged.shots[s].readout && once.shots[s].outcomes == staged.shots[s].outcomes &&
                    once.shots[s].frame.x == staged.shots[s].frame.x && once.shots[s].frame.z == staged.shots[s].frame.z,
                "circuit " + std::to_string(trial) + " shot " + std::to_string(s) + " differs");
            compared++;
        }
    }
    check.note("20 circuits");
    check.note(std::to_string(compared) + " shot records identical");
}

void compiler_suite(Check &check) {
    std::mt19937_64 rng(6);
    double worst_fidelity = 1;
    double worst_tv = 0;
    size_t branches = 0;
    size_t max_qubits = 0;
    for (int trial = 0; trial < 25; trial++) {
        size_t wires = 1 + trial % 3;
        LayoutOptions options{
            trial % 4 == 3 ? EntanglingConvention::kIsingProjector : EntanglingConvention::kControlledZ,
            wires == 1 && trial % 2 == 0};
        auto t = fitting_circuit(rng, wires, 5, 1, 22, options, [](const LayoutPlan &) {
            return true;
        });
        check_plan(t.plan);
        check_schedule(t.plan, schedule(t.plan));
        max_qubits = std::max(max_qubits, t.plan.lattice.occupied_count());
        auto expected = apply_circuit_direct(t.circuit, input_state(t.circuit));
        for (int b = 0; b < 3; b++) {
            auto bits = random_bits(rng, t.plan.lowered.steps.size());
            Branch branch = run_branch(t.plan, ExecutionStrategy::entangle_once(), OutcomeSource::forced(bits));
            double f = fidelity_up_to_phase(corrected_state(t.plan, branch), expected);
            check.expect(f >= 1 - 1e-8, "circuit " + std::to_string(trial) + " forced fidelity " + fmt(f, 17));
            worst_fidelity = std::min(worst_fidelity, f);
            branches++;
        }
        auto result = execute(t.plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(5000 + trial), 2000);
        double tv = total_variation(result.histogram(), oracle_distribution(t.circuit));
        check.expect(tv <= 0.05, "circuit " + std::to_string(trial) + " total variation " + fmt(tv));
        worst_tv = std::max(worst_tv, tv);
    }
    check.note("25 circuits up to " + std::to_string(max_qubits) + " qubits");
    check.note(std::to_string(branches) + " forced branches, worst fidelity " + fmt(worst_fidelity, 17));
    check.note("worst total variation " + fmt(worst_tv, 4));
}

void percolation_suite(Check &check) {
    auto est = estimate_threshold(3, {12, 16, 24}, 300, 7);
    check.expect(std::abs(est.p_c - 0.31) <= 0.02, "threshold " + fmt(est.p_c));
    double fraction = spanning_probability(32, 3, 0.44, 200, 8);
    check.expect(fraction >= 0.99, "spanning fraction at p=0.44 is " + fmt(fraction));
    check.note("3D crossing " + fmt(est.p_c, 4) + " +- " + fmt(est.stderr, 2) + " at L=24");
    check.note("spanning fraction " + fmt(fraction) + " at p=0.44, L=32");
}

void frame_suite(Check &check) {
    constexpr double kTol = 1e-12;
    double worst = 0;
    auto two_wire = [](const PauliFrame &f, size_t c, size_t t) {
        return frame_as_unitary(f, c).kron(frame_as_unitary(f, t));
    };
    size_t identities = 0;
    for (int bits = 0; bits < 16; bits++) {
        for (auto [c, t] : {std::pair<size_t, size_t>{0, 1}, {1, 0}}) {
            PauliFrame in(2);
            in.x[c] = bits & 1;
            in.z[c] = (bits >> 1) & 1;
            in.x[t] = (bits >> 2) & 1;
            in.z[t] = (bits >> 3) & 1;
            auto out = propagate_through_cnot(in, c, t);
            double d = phase_aligned_diff(cnot_matrix() * two_wire(in, c, t), two_wire(out, c, t) * cnot_matrix());
            check.expect(d <= kTol, "CNOT rule for frame bits " + std::to_string(bits));
            worst = std::max(worst, d);
            identities++;
        }
    }
    // CNOT(c,t) Z_t = Z_c Z_t CNOT(c,t), exactly.
    Matrix zt = Matrix::identity(2).kron(pauli_z());
    Matrix zczt = pauli_z().kron(pauli_z());
    double quoted_cnot = (cnot_matrix() * zt).max_abs_diff(zczt * cnot_matrix());
    check.expect(quoted_cnot <= kTol, "quoted CNOT relation");
    PauliFrame zt_frame(2);
    zt_frame.z[1] = 1;
    auto pushed = propagate_through_cnot(zt_frame, 0, 1);
    check.expect(pushed.z[0] == 1 && pushed.z[1] == 1 && !pushed.x[0] && !pushed.x[1], "CNOT pushes Z_t to Z_c Z_t");
    identities++;

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double quoted_rotation = 0;
    for (int trial = 0; trial < 50; trial++) {
        std::array<double, 3> a = {angle(rng), angle(rng), angle(rng)};
        // U_x(zeta) U_z(eta) U_x(xi) Z = Z U_x(-zeta) U_z(eta) U_x(-xi), exactly.
        double q = (euler_rotation(a[0], a[1], a[2]) * pauli_z()).max_abs_diff(pauli_z() * euler_rotation(-a[0], a[1], -a[2]));
        quoted_rotation = std::max(quoted_rotation, q);
        check.expect(q <= kTol, "quoted rotation relation");
        identities++;
        for (uint8_t x = 0; x < 2; x++) {
            for (uint8_t z = 0; z < 2; z++) {
                auto r = propagate_through_rotation(x, z, a);
                PauliFrame f(1);
                f.x[0] = x;
                f.z[0] = z;
                Matrix u = frame_as_unitary(f, 0);
                double d = phase_aligned_diff(
                    euler_rotation(r.angles[0], r.angles[1], r.angles[2]) * u, u * euler_rotation(a[0], a[1], a[2]));
                check.expect(d <= kTol && r.x == x && r.z == z, "rotation rule");
                worst = std::max(worst, d);
                identities++;
            }
        }
    }
    // Readout adjustment: measuring the adjusted basis on the framed state reproduces the ideal
    // outcome distribution.
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 40; trial++) {
        Complex a(g(rng), g(rng));
        Complex b(g(rng), g(rng));
        double n = std::sqrt(std::norm(a) + std::norm(b));
        auto psi = init_register({QubitPrep::state(a / n, b / n)});
        for (const auto &dir : {MeasurementDirection::z(), MeasurementDirection::x(), MeasurementDirection::xy(angle(rng))}) {
            double ideal = outcome_probability(psi, 0, dir);
            for (int bits = 0; bits < 4; bits++) {
                PauliFrame f(1);
                f.x[0] = bits & 1;
                f.z[0] = bits >> 1;
                auto physical = psi;
                apply_matrix(physical, frame_as_unitary(f, 0), {0});
                auto adj = readout_adjust(f, 0, dir);
                double raw = outcome_probability(physical, 0, adj.direction);
                double d = std::abs((adj.flip ? 1 - raw : raw) - ideal);
                check.expect(d <= kTol, "readout adjustment");
                worst = std::max(worst, d);
                identities++;
            }
        }
    }
    check.note(std::to_string(identities) + " identities");
    check.note("worst deviation " + fmt(std::max({worst, quoted_cnot, quoted_rotation}), 3));
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Check &)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "correlation operators on clusters up to 12 sites", 60, correlation_suite},
        {2, "wire branches", 60, wire_suite},
        {3, "rotation branches", 120, rotation_suite},
        {4, "minimal CNOT output formula and oracle", 10, cnot_suite},
        {5, "entangle-once vs staged equivalence", 120, strategy_suite},
        {6, "end-to-end compiler vs oracle", 600, compiler_suite},
        {7, "percolation threshold and spanning at p=0.44", 300, percolation_suite},
        {8, "Pauli frame rules", 1, frame_suite},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(check);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.expect(seconds < c.limit_seconds, "took " + fmt(seconds, 3) + " s, limit " + fmt(c.limit_seconds) + " s");
        bool ok = check.ok();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << check.summary()
                  << "; " << fmt(seconds, 3) << " s)" << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - (size_t)failed << "/" << criteria.size()
              << std::endl;
    return failed ? 1 : 0;
}
