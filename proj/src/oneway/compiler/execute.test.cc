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

#include "oneway/compiler/execute.h"

#include <random>

#include "gtest/gtest.h"
#include "oneway/compiler/testing.h"

using namespace oneway;

namespace {

LogicalCircuit bell_circuit() {
    LogicalCircuit c;
    c.wires = 2;
    c.inputs = {QubitPrep::plus(), QubitPrep::zero()};
    c.gates = {GateSpec::cnot(0, 1)};
    return c;
}

LogicalCircuit rotations(size_t count, std::mt19937_64 &rng) {
    LogicalCircuit c = random_circuit(rng, 1, count);
    return c;
}

double forced_fidelity(const LayoutPlan &plan, const ExecutionStrategy &strategy, std::mt19937_64 &rng) {
    auto expected = apply_circuit_direct(plan.source, input_state(plan.source));
    auto bits = random_bits(rng, plan.lowered.steps.size());
    Branch branch = run_branch(plan, strategy, OutcomeSource::forced(bits));
    return fidelity_up_to_phase(corrected_state(plan, branch), expected);
}

}  // namespace

TEST(execute, bell_readouts_agree_and_split_evenly) {
    auto c = bell_circuit();
    auto plan = layout(c, Lattice({3, 7}));
    auto result = execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(7), 400);
    auto counts = result.histogram();
    EXPECT_EQ(counts.size(), 2u);
    EXPECT_EQ(counts["00"] + counts["11"], 400u);
    EXPECT_GT(counts["00"], 150u);
    EXPECT_GT(counts["11"], 150u);
    EXPECT_LT(total_variation(counts, oracle_distribution(c)), 0.1);
}

TEST(execute, single_wire_reproduces_the_input_bit) {
    for (auto prep : {QubitPrep::zero(), QubitPrep::one()}) {
        LogicalCircuit c;
        c.wires = 1;
        c.inputs = {prep};
        for (const auto &lattice : {Lattice({1, 5}), Lattice({3, 4})}) {
            auto plan = layout(c, lattice);
            auto result = execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(1), 50);
            for (const auto &shot : result.shots) {
                EXPECT_EQ(shot.readout, (std::vector<Outcome>{prep == QubitPrep::one()}));
            }
        }
    }
}

TEST(execute, readout_basis_follows_the_frame) {
    LogicalCircuit c;
    c.wires = 1;
    c.inputs = {QubitPrep::minus()};
    c.gates = {GateSpec::rotation(0, 0, 0, 0), GateSpec::rotation(0, 0, 0, 0)};
    auto plan = layout(c, Lattice({1, 9}));
    ExecutionOptions options;
    options.readout = MeasurementDirection::x();
    auto result = execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(4), 60, options);
    std::set<uint8_t> frames_x;
    for (const auto &shot : result.shots) {
        EXPECT_EQ(shot.readout, std::vector<Outcome>{1});
        frames_x.insert(shot.frame.z[0]);
    }
    EXPECT_EQ(frames_x.size(), 2u);
}

TEST(execute, staged_matches_entangle_once_bit_for_bit) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 8; trial++) {
        LogicalCircuit c = trial < 4 ? rotations(2 + trial, rng) : random_circuit(rng, 2, 2 + trial % 2);
        auto convention = trial % 2 ? EntanglingConvention::kIsingProjector : EntanglingConvention::kControlledZ;
        auto plan = layout(c, minimal_lattice(c), {convention, false});
        auto cuts = gadget_boundaries(plan);
        if (plan.lattice.occupied_count() > 22) {
            continue;
        }
        auto once = execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(100 + trial), 20);
        auto staged = execute(plan, ExecutionStrategy::staged(cuts), OutcomeSource::sampled(100 + trial), 20);
        for (size_t s = 0; s < once.shots.size(); s++) {
            EXPECT_EQ(once.shots[s].outcomes, staged.shots[s].outcomes);
            EXPECT_EQ(once.shots[s].readout, staged.shots[s].readout);
            EXPECT_EQ(once.shots[s].frame, staged.shots[s].frame);
        }
    }
}

TEST(execute, prefix_cache_does_not_change_records) {
    std::mt19937_64 rng(8);
    LogicalCircuit c = rotations(4, rng);
    auto plan = layout(c, Lattice({1, 20}));
    ASSERT_GT(plan.lattice.occupied_count(), 14u);
    auto together = execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(50), 12);
    for (size_t s = 0; s < 12; s++) {
        auto alone = execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(50 + s), 1);
        EXPECT_EQ(alone.shots[0].outcomes, together.shots[s].outcomes);
        EXPECT_EQ(alone.shots[0].readout, together.shots[s].readout);
    }
}

TEST(execute, forced_branches_match_the_oracle) {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 24; trial++) {
        LogicalCircuit c = random_circuit(rng, 1 + trial % 2, 1 + trial % 4);
        LayoutOptions options{
            trial % 3 == 0 ? EntanglingConvention::kIsingProjector : EntanglingConvention::kControlledZ,
            trial % 4 == 1};
        Lattice lattice = minimal_lattice(c, options);
        if (lattice.occupied_count() > 18) {
            continue;
        }
        auto plan = layout(c, lattice, options);
        checked++;
        EXPECT_GT(forced_fidelity(plan, ExecutionStrategy::entangle_once(), rng), 1 - 1e-8) << c.str();
        EXPECT_GT(forced_fidelity(plan, ExecutionStrategy::staged(gadget_boundaries(plan)), rng), 1 - 1e-8)
            << c.str();
    }
    EXPECT_GE(checked, 12);
}

TEST(execute, carved_lattice_matches_the_oracle) {
    std::mt19937_64 rng(2);
    LogicalCircuit c = rotations(1, rng);
    auto plan = layout(c, Lattice({3, 5}));
    for (int k = 0; k < 4; k++) {
        EXPECT_GT(forced_fidelity(plan, ExecutionStrategy::entangle_once(), rng), 1 - 1e-8);
    }
    auto sampled = execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(3), 800);
    EXPECT_LT(total_variation(sampled.histogram(), oracle_distribution(c)), 0.07);
}

TEST(execute, stage_boundaries_must_fall_between_gadgets) {
    std::mt19937_64 rng(1);
    auto plan = layout(rotations(2, rng), Lattice({1, 9}));
    EXPECT_EQ(gadget_boundaries(plan), (std::vector<int>{4}));
    EXPECT_THROW(execute(plan, ExecutionStrategy::staged({3}), OutcomeSource::sampled(0), 1), std::invalid_argument);
    EXPECT_THROW(ExecutionStrategy::staged({4, 4}), std::invalid_argument);
    EXPECT_THROW(ExecutionStrategy::staged({0}), std::invalid_argument);
    EXPECT_EQ(ExecutionStrategy::staged({4}).str(), "staged:4");
}

TEST(execute, staging_lowers_the_live_qubit_count) {
    std::mt19937_64 rng(1);
    auto plan = layout(rotations(5, rng), Lattice({3, 21}));
    EXPECT_EQ(peak_live_qubits(plan, ExecutionStrategy::entangle_once()), 63u);
    auto staged = ExecutionStrategy::staged(gadget_boundaries(plan));
    EXPECT_EQ(peak_live_qubits(plan, staged), 3u * 5);
    EXPECT_THROW(execute(plan, ExecutionStrategy::entangle_once(), OutcomeSource::sampled(0), 1), std::invalid_argument);
    auto result = execute(plan, staged, OutcomeSource::sampled(0), 3);
    EXPECT_EQ(result.shots.size(), 3u);
}

TEST(total_variation, compares_counts_with_probabilities) {
    std::map<std::string, size_t> counts{{"0", 3}, {"1", 1}};
    EXPECT_DOUBLE_EQ(total_variation(counts, {{"0", 0.5}, {"1", 0.5}}), 0.25);
    EXPECT_DOUBLE_EQ(total_variation(counts, {{"2", 1.0}}), 1.0);
    EXPECT_THROW(total_variation({}, {{"0", 1.0}}), std::invalid_argument);
}
