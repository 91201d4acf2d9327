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

#include "oneway/qsim/circuit.h"

#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace oneway;

TEST(circuit, empty_circuit_is_identity) {
    LogicalCircuit c{.wires = 2, .gates = {}, .inputs = {QubitPrep::zero(), QubitPrep::one()}};
    auto in = input_state(c);
    EXPECT_EQ(apply_circuit_direct(c, in).amplitudes, in.amplitudes);
}

TEST(circuit, bell) {
    LogicalCircuit c{
        .wires = 2, .gates = {GateSpec::cnot(0, 1)}, .inputs = {QubitPrep::plus(), QubitPrep::zero()}};
    auto out = apply_circuit_direct(c, input_state(c));
    double h = std::numbers::sqrt2 / 2;
    EXPECT_NEAR(std::abs(out.amplitudes[0] - h), 0, 1e-15);
    EXPECT_NEAR(std::abs(out.amplitudes[3] - h), 0, 1e-15);
    EXPECT_EQ(out.amplitudes[1], Complex(0));
    EXPECT_EQ(out.amplitudes[2], Complex(0));
}

TEST(circuit, quarter_turns_act_as_hadamard_on_zero) {
    double q = std::numbers::pi / 2;
    LogicalCircuit c{.wires = 1, .gates = {GateSpec::rotation(0, q, q, q)}, .inputs = {QubitPrep::zero()}};
    auto out = apply_circuit_direct(c, input_state(c));
    auto plus = init_register({QubitPrep::plus()});
    EXPECT_NEAR(fidelity_up_to_phase(out, plus), 1, 1e-14);
}

TEST(circuit, gate_then_inverse_is_identity) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> angle(-4, 4);
    for (int trial = 0; trial < 20; trial++) {
        double a = angle(rng), b = angle(rng), c = angle(rng);
        auto g = GateSpec::rotation(trial % 3, a, b, c);
        auto inv = GateSpec::unitary(g.matrix().adjoint(), g.operands);
        LogicalCircuit circ{.wires = 3, .gates = {g, GateSpec::cnot(1, 2), GateSpec::cnot(1, 2), inv}};
        circ.inputs = {QubitPrep::state(0.6, Complex(0, 0.8)), QubitPrep::plus(), QubitPrep::one()};
        auto in = input_state(circ);
        auto out = apply_circuit_direct(circ, in);
        for (size_t k = 0; k < in.amplitudes.size(); k++) {
            ASSERT_LT(std::abs(out.amplitudes[k] - in.amplitudes[k]), 1e-10);
        }
    }
}

TEST(circuit, validation) {
    LogicalCircuit c{.wires = 1, .gates = {GateSpec::cnot(0, 1)}};
    EXPECT_THROW(c.validate(), std::invalid_argument);
    LogicalCircuit none{.wires = 0};
    EXPECT_THROW(none.validate(), std::invalid_argument);
}
