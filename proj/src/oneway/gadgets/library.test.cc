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

#include "oneway/gadgets/library.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oneway/gadgets/run.h"
#include "oneway/gadgets/testing.h"
#include "oneway/qsim/gates.h"

using namespace oneway;

namespace {

struct SweepResult {
    double worst_fidelity = 1;
    size_t branches = 0;
    double total_probability = 0;
    double max_probability_error = 0;
};

/// Runs every branch of the pattern on its own region and compares the corrected output with
/// the intended unitary.
SweepResult sweep_against_oracle(
    const MeasurementPattern &p,
    const Lattice &lattice,
    const std::vector<QubitPrep> &inputs,
    const PauliFrame &frame_in,
    const Matrix &unitary,
    EntanglingConvention convention = EntanglingConvention::kControlledZ) {
    auto cs = prepare_gadget_cluster(lattice, p, inputs, frame_in, convention);
    auto expected = oracle_output(inputs, unitary);
    SweepResult r;
    double uniform = std::pow(0.5, (double)p.steps.size());
    sweep_branches(cs, p, frame_in, [&](const GadgetReport &report, const ClusterState &done, double probability) {
        r.worst_fidelity = std::min(r.worst_fidelity, fidelity_up_to_phase(corrected_output(done, report), expected));
        r.branches++;
        r.total_probability += probability;
        r.max_probability_error = std::max(r.max_probability_error, std::abs(probability - uniform));
    });
    return r;
}

PauliFrame frame_from_bits(size_t wires, int bits) {
    PauliFrame f(wires);
    for (size_t w = 0; w < wires; w++) {
        f.x[w] = (bits >> (2 * w)) & 1;
        f.z[w] = (bits >> (2 * w + 1)) & 1;
    }
    return f;
}

}  // namespace

TEST(gadgets, wire_all_lengths_all_branches) {
    std::mt19937_64 rng(51);
    for (int n = 1; n <= 9; n++) {
        auto p = build_wire(n);
        EXPECT_EQ(p.steps.size(), (size_t)(n - 1));
        Matrix u = n % 2 ? Matrix::identity(2) : even_wire_unitary();
        for (int bits = 0; bits < 4; bits++) {
            auto r = sweep_against_oracle(p, region_lattice(p), {random_qubit(rng)}, frame_from_bits(1, bits), u);
            EXPECT_EQ(r.branches, size_t{1} << (n - 1));
            EXPECT_GE(r.worst_fidelity, 1 - 1e-10) << n;
            EXPECT_LT(r.max_probability_error, 1e-10);
        }
    }
    EXPECT_THROW(build_wire(0), std::invalid_argument);
}

TEST(gadgets, wire_three_forced_zero) {
    auto p = build_wire(3);
    auto cs = prepare_gadget_cluster(region_lattice(p), p, {QubitPrep::zero()}, PauliFrame(1));
    auto src = OutcomeSource::forced({0, 0});
    auto report = run_pattern(cs, p, PauliFrame(1), src);
    EXPECT_EQ(report.frame, PauliFrame(1));
    auto out = corrected_output(cs, report);
    EXPECT_NEAR(fidelity_up_to_phase(out, init_register({QubitPrep::zero()})), 1, 1e-12);
}

TEST(gadgets, even_wire_constant_is_outcome_independent) {
    // The corrected map of a two-site wire, determined column by column from basis inputs.
    auto p = build_wire(2);
    for (Outcome s : {0, 1}) {
        Matrix m(2);
        for (int col = 0; col < 2; col++) {
            auto cs = prepare_gadget_cluster(region_lattice(p), p, {col ? QubitPrep::one() : QubitPrep::zero()}, PauliFrame(1));
            auto src = OutcomeSource::forced({s});
            auto report = run_pattern(cs, p, PauliFrame(1), src);
            auto out = corrected_output(cs, report);
            m(0, col) = out.amplitudes[0];
            m(1, col) = out.amplitudes[1];
        }
        EXPECT_NEAR(overlap_up_to_phase(m, even_wire_unitary()), 1, 1e-12);
    }
}

TEST(gadgets, wire_composition) {
    std::mt19937_64 rng(52);
    for (int n = 2; n <= 5; n++) {
        for (int m = 2; m <= 5; m++) {
            PatternBuilder b({Site(0, 0)});
            b.append(build_wire(n), {0});
            b.append(translate(build_wire(m), Site(0, n - 1)), {0});
            auto joined = b.build();
            auto direct = build_wire(n + m - 1);
            EXPECT_EQ(joined.frame_script, direct.frame_script);
            Matrix u = (n + m - 1) % 2 ? Matrix::identity(2) : even_wire_unitary();
            auto r = sweep_against_oracle(joined, region_lattice(joined), {random_qubit(rng)}, PauliFrame(1), u);
            EXPECT_GE(r.worst_fidelity, 1 - 1e-10);
        }
    }
}

TEST(gadgets, rotation_examples) {
    auto zero = build_rotation(0, 0, 0);
    std::mt19937_64 rng(53);
    auto r = sweep_against_oracle(zero, region_lattice(zero), {random_qubit(rng)}, PauliFrame(1), Matrix::identity(2));
    EXPECT_EQ(r.branches, 16u);
    EXPECT_GE(r.worst_fidelity, 1 - 1e-10);

    auto quarter = build_rotation(std::numbers::pi / 2, 0, 0);
    auto cs = prepare_gadget_cluster(region_lattice(quarter), quarter, {QubitPrep::zero()}, PauliFrame(1));
    auto src = OutcomeSource::forced({0, 0, 0, 0});
    auto report = run_pattern(cs, quarter, PauliFrame(1), src);
    auto expected = oracle_output({QubitPrep::zero()}, rot_x(std::numbers::pi / 2));
    EXPECT_NEAR(fidelity_up_to_phase(corrected_output(cs, report), expected), 1, 1e-10);
}

TEST(gadgets, rotation_random_angles_frames_and_conventions) {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 20; trial++) {
        double a = angle(rng), b = angle(rng), c = angle(rng);
        auto p = build_rotation(a, b, c);
        for (auto convention : {EntanglingConvention::kControlledZ, EntanglingConvention::kIsingProjector}) {
            auto r = sweep_against_oracle(
                p, region_lattice(p), {random_qubit(rng)}, frame_from_bits(1, trial % 4), euler_rotation(a, b, c), convention);
            EXPECT_EQ(r.branches, 16u);
            EXPECT_GE(r.worst_fidelity, 1 - 1e-10);
        }
    }
}

TEST(gadgets, rotation_rounds_and_dump) {
    auto p = build_rotation(0.5, -1.25, 2);
    EXPECT_EQ(assign_rounds(p), 4u);
    std::vector<uint32_t> rounds;
    for (const auto &s : p.steps) {
        rounds.push_back(s.round);
    }
    EXPECT_EQ(rounds, (std::vector<uint32_t>{0, 1, 2, 3}));
    EXPECT_EQ(
        dump_pattern(p, Lattice({1, 5})),
        "step 0 site=0,0 basis=X sign_dep=0\n"
        "step 1 site=0,1 basis=XY:-0.5 sign_dep=s0^fz0\n"
        "step 2 site=0,2 basis=XY:1.25 sign_dep=s1^fx0\n"
        "step 3 site=0,3 basis=XY:-2 sign_dep=s0^s2^fz0\n");
}

// Re-derives the rotation's sign dependencies: every combination of dependency subsets is tried,
// and only combinations whose raw output equals some Pauli times the intended output on every
// branch and every incoming frame survive.
TEST(gadgets, rotation_sign_rules_are_the_unique_solution) {
    std::mt19937_64 rng(55);
    double xi = 0.7, eta = -1.9, zeta = 2.4;
    QubitPrep input = random_qubit(rng);
    auto expected = oracle_output({input}, euler_rotation(xi, eta, zeta));
    std::vector<Matrix> paulis = {Matrix::identity(2), pauli_x(), pauli_z(), pauli_x() * pauli_z()};

    // Candidate signals for each adaptive step: earlier outcomes and the incoming frame.
    auto subset = [](const std::vector<Parity> &pool, int mask) {
        Parity p;
        for (size_t k = 0; k < pool.size(); k++) {
            if ((mask >> k) & 1) {
                p ^= pool[k];
            }
        }
        return p;
    };
    Parity fx = Signal::frame_x(0), fz = Signal::frame_z(0);
    std::vector<Parity> pool2 = {Signal::outcome(0), fx, fz};
    std::vector<Parity> pool3 = {Signal::outcome(0), Signal::outcome(1), fx, fz};
    std::vector<Parity> pool4 = {Signal::outcome(0), Signal::outcome(1), Signal::outcome(2), fx, fz};

    std::vector<std::array<Parity, 3>> survivors;
    for (int m2 = 0; m2 < 8; m2++) {
        for (int m3 = 0; m3 < 16; m3++) {
            for (int m4 = 0; m4 < 32; m4++) {
                MeasurementPattern p = build_rotation(xi, eta, zeta);
                p.steps[1].sign_dep = subset(pool2, m2);
                p.steps[2].sign_dep = subset(pool3, m3);
                p.steps[3].sign_dep = subset(pool4, m4);
                bool ok = true;
                for (int bits = 0; bits < 4 && ok; bits++) {
                    auto frame_in = frame_from_bits(1, bits);
                    auto cs = prepare_gadget_cluster(region_lattice(p), p, {input}, frame_in);
                    sweep_branches(cs, p, frame_in, [&](const GadgetReport &, const ClusterState &done, double) {
                        if (!ok) {
                            return;
                        }
                        StateRegister raw = done.reg;
                        raw.labels = {0};
                        bool any = false;
                        for (const auto &pauli : paulis) {
                            StateRegister fixed = raw;
                            apply_matrix(fixed, pauli.adjoint(), {0});
                            any |= fidelity_up_to_phase(fixed, expected) > 1 - 1e-9;
                        }
                        ok = any;
                    });
                }
                if (ok) {
                    survivors.push_back({p.steps[1].sign_dep, p.steps[2].sign_dep, p.steps[3].sign_dep});
                }
            }
        }
    }
    ASSERT_EQ(survivors.size(), 1u);
    auto frozen = build_rotation(xi, eta, zeta);
    EXPECT_EQ(survivors[0][0], frozen.steps[1].sign_dep);
    EXPECT_EQ(survivors[0][1], frozen.steps[2].sign_dep);
    EXPECT_EQ(survivors[0][2], frozen.steps[3].sign_dep);
}

TEST(gadgets, cnot_minimal_examples) {
    auto p = build_cnot_minimal();
    auto lattice = region_lattice(p);
    EXPECT_EQ(lattice.occupied_count(), 4u);
    // Wire 0 is the control (site 4), wire 1 the target (site 1 in, site 3 out).
    for (int s1 = 0; s1 < 2; s1++) {
        for (int s2 = 0; s2 < 2; s2++) {
            auto cs = prepare_gadget_cluster(lattice, p, {QubitPrep::one(), QubitPrep::zero()}, PauliFrame(2));
            auto src = OutcomeSource::forced({(Outcome)s1, (Outcome)s2});
            auto report = run_pattern(cs, p, PauliFrame(2), src);
            auto out = corrected_output(cs, report);
            EXPECT_NEAR(std::norm(out.amplitudes[3]), 1, 1e-12);  // |c=1, t=1>
        }
    }
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 4; trial++) {
        auto target = random_qubit(rng);
        auto r = sweep_against_oracle(p, lattice, {QubitPrep::zero(), target}, PauliFrame(2), cnot_matrix());
        EXPECT_EQ(r.branches, 4u);
        EXPECT_GE(r.worst_fidelity, 1 - 1e-10);
    }
    auto bell = sweep_against_oracle(p, lattice, {QubitPrep::plus(), QubitPrep::zero()}, PauliFrame(2), cnot_matrix());
    EXPECT_GE(bell.worst_fidelity, 1 - 1e-10);
}

TEST(gadgets, cnot_minimal_random_inputs_and_frames) {
    std::mt19937_64 rng(57);
    auto p = build_cnot_minimal();
    for (int bits = 0; bits < 16; bits++) {
        for (auto convention : {EntanglingConvention::kControlledZ, EntanglingConvention::kIsingProjector}) {
            auto r = sweep_against_oracle(
                p, region_lattice(p), {random_qubit(rng), random_qubit(rng)}, frame_from_bits(2, bits), cnot_matrix(), convention);
            EXPECT_GE(r.worst_fidelity, 1 - 1e-10);
        }
    }
}

TEST(gadgets, cnot_composable_all_branches) {
    std::mt19937_64 rng(58);
    auto p = build_cnot_composable();
    validate(p);
    EXPECT_EQ(p.steps.size(), 17u);
    EXPECT_EQ(assign_rounds(p), 1u);
    Lattice lattice({3, kComposableCnotWidth});
    lattice.set_occupied(Site(1, 0), false);
    lattice.set_occupied(Site(1, 6), false);
    auto r = sweep_against_oracle(p, lattice, {random_qubit(rng), random_qubit(rng)}, frame_from_bits(2, 9), cnot_matrix());
    EXPECT_EQ(r.branches, size_t{1} << 17);
    EXPECT_GE(r.worst_fidelity, 1 - 1e-10);
    EXPECT_NEAR(r.total_probability, 1, 1e-9);
}

TEST(gadgets, cnot_composable_truth_table_and_interface_carving) {
    std::mt19937_64 rng(59);
    auto p = build_cnot_composable();
    Lattice lattice({3, kComposableCnotWidth});
    for (int c = 0; c < 2; c++) {
        for (int t = 0; t < 2; t++) {
            for (int trial = 0; trial < 8; trial++) {
                std::vector<QubitPrep> in = {c ? QubitPrep::one() : QubitPrep::zero(), t ? QubitPrep::one() : QubitPrep::zero()};
                auto frame_in = frame_from_bits(2, rng() % 16);
                auto convention = trial % 2 ? EntanglingConvention::kIsingProjector : EntanglingConvention::kControlledZ;
                auto cs = prepare_gadget_cluster(lattice, p, in, frame_in, convention);
                auto src = OutcomeSource::sampled(rng());
                carve(cs, {Site(1, 0), Site(1, 6)}, src);
                auto report = run_pattern(cs, p, frame_in, src, 100);
                auto out = corrected_output(cs, report);
                size_t expected_index = c * 2 + (c ^ t);
                ASSERT_NEAR(std::norm(out.amplitudes[expected_index]), 1, 1e-10);
            }
        }
    }
}

// Re-derives the composable CNOT byproduct table: the byproduct of each single-outcome branch
// relative to the all-zero branch, found by matching Paulis against the oracle.
TEST(gadgets, cnot_composable_byproducts_fit_the_oracle) {
    std::mt19937_64 rng(60);
    auto p = build_cnot_composable();
    Lattice lattice({3, kComposableCnotWidth});
    lattice.set_occupied(Site(1, 0), false);
    lattice.set_occupied(Site(1, 6), false);
    std::vector<QubitPrep> in = {random_qubit(rng), random_qubit(rng)};
    auto expected = oracle_output(in, cnot_matrix());
    std::vector<Matrix> paulis = {Matrix::identity(2), pauli_x(), pauli_z(), pauli_x() * pauli_z()};
    auto byproduct = [&](const std::vector<Outcome> &branch) {
        auto cs = prepare_gadget_cluster(lattice, p, in, PauliFrame(2));
        auto src = OutcomeSource::forced(branch);
        auto report = run_pattern(cs, p, PauliFrame(2), src);
        StateRegister raw = cs.reg.reordered(report.output_labels);
        raw.labels = {0, 1};
        PauliFrame found(2);
        int matches = 0;
        for (int pc = 0; pc < 4; pc++) {
            for (int pt = 0; pt < 4; pt++) {
                StateRegister fixed = raw;
                apply_matrix(fixed, paulis[pc].kron(paulis[pt]).adjoint(), {0, 1});
                if (fidelity_up_to_phase(fixed, expected) > 1 - 1e-9) {
                    found.x = {(uint8_t)(pc & 1), (uint8_t)(pt & 1)};
                    found.z = {(uint8_t)(pc >> 1), (uint8_t)(pt >> 1)};
                    matches++;
                }
            }
        }
        EXPECT_EQ(matches, 1);
        return std::make_pair(found, report);
    };
    std::vector<Outcome> zeros(p.steps.size(), 0);
    auto [base, base_report] = byproduct(zeros);
    EXPECT_EQ(base, base_report.frame);
    for (size_t k = 4; k < p.steps.size(); k++) {
        auto branch = zeros;
        branch[k] = 1;
        auto [found, report] = byproduct(branch);
        EXPECT_EQ(found, report.frame) << "step " << k;
    }
}

TEST(gadgets, input_prep) {
    auto plus = build_input_prep(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2);
    for (size_t k = 1; k < 4; k++) {
        EXPECT_NEAR(plus.steps[k].base.angle, 0, 1e-12);
    }
    std::mt19937_64 rng(61);
    std::vector<QubitPrep> targets = {QubitPrep::zero(), QubitPrep::one(), QubitPrep::minus()};
    for (int k = 0; k < 10; k++) {
        targets.push_back(random_qubit(rng));
    }
    for (const auto &t : targets) {
        auto p = build_input_prep(t.alpha, t.beta);
        auto cs = prepare_gadget_cluster(region_lattice(p), p, {QubitPrep::plus()}, PauliFrame(1));
        auto expected = init_register({t});
        double worst = 1;
        sweep_branches(cs, p, PauliFrame(1), [&](const GadgetReport &report, const ClusterState &done, double) {
            worst = std::min(worst, fidelity_up_to_phase(corrected_output(done, report), expected));
        });
        EXPECT_GE(worst, 1 - 1e-10);
    }
    EXPECT_THROW(build_input_prep(1, 1), std::invalid_argument);
}

namespace {

/// Map from (control, target) basis inputs to the uncorrected outputs (control site, target
/// output site) of the minimal CNOT on one forced branch.
Matrix minimal_cnot_branch_map(EntanglingConvention convention, Outcome s1, Outcome s2) {
    auto p = build_cnot_minimal();
    Matrix m(4);
    for (int col = 0; col < 4; col++) {
        std::vector<QubitPrep> in = {
            col >> 1 ? QubitPrep::one() : QubitPrep::zero(), col & 1 ? QubitPrep::one() : QubitPrep::zero()};
        auto cs = prepare_gadget_cluster(region_lattice(p), p, in, PauliFrame(2), convention);
        auto src = OutcomeSource::forced({s1, s2});
        auto report = run_pattern(cs, p, PauliFrame(2), src);
        auto out = cs.reg.reordered(report.output_labels);
        for (int row = 0; row < 4; row++) {
            m(row, col) = out.amplitudes[row];
        }
    }
    return m;
}

Matrix power(const Matrix &m, int k) {
    return k % 2 ? m : Matrix::identity(2);
}

}  // namespace

TEST(gadgets, cnot_minimal_reproduces_output_formula) {
    for (Outcome s1 : {0, 1}) {
        for (Outcome s2 : {0, 1}) {
            // Projector interaction: Z_3^(s1+1) X_3^s2 Z_4^s1 after the CNOT.
            Matrix byproduct = power(pauli_z(), s1).kron(power(pauli_z(), s1 + 1) * power(pauli_x(), s2));
            Matrix ising = minimal_cnot_branch_map(EntanglingConvention::kIsingProjector, s1, s2);
            EXPECT_NEAR(overlap_up_to_phase(ising, byproduct * cnot_matrix()), 1, 1e-12);
            // Under CZ the constant Z_3 disappears.
            Matrix cz_byproduct = power(pauli_z(), s1).kron(power(pauli_z(), s1) * power(pauli_x(), s2));
            Matrix cz = minimal_cnot_branch_map(EntanglingConvention::kControlledZ, s1, s2);
            EXPECT_NEAR(overlap_up_to_phase(cz, cz_byproduct * cnot_matrix()), 1, 1e-12);
            EXPECT_LT(overlap_up_to_phase(cz, byproduct * cnot_matrix()), 0.1);
        }
    }
}
