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

#ifndef ONEWAY_QSIM_STATE_REGISTER_H
#define ONEWAY_QSIM_STATE_REGISTER_H

#include <cstdint>
#include <string>
#include <vector>

#include "oneway/qsim/matrix.h"
#include "oneway/qsim/outcome_source.h"

namespace oneway {

/// External identifier of a qubit (a lattice site label or a circuit wire index).
using Label = uint32_t;

/// Single-qubit product-state factor alpha|0> + beta|1>.
struct QubitPrep {
    Complex alpha = 1;
    Complex beta = 0;

    static QubitPrep zero();
    static QubitPrep one();
    static QubitPrep plus();
    static QubitPrep minus();
    /// Throws std::invalid_argument unless |alpha|^2 + |beta|^2 = 1 within 1e-10.
    static QubitPrep state(Complex alpha, Complex beta);

    bool operator==(const QubitPrep &other) const = default;
};

/// Basis of a single-qubit projective measurement.
///
/// XY(phi) measures cos(phi) X + sin(phi) Y. Its outcome-s eigenstate is
/// (|0> + (-1)^s e^{i phi} |1>) / sqrt(2). X is the same measurement as XY(0).
struct MeasurementDirection {
    enum class Kind : uint8_t { kZ, kX, kXY };
    Kind kind = Kind::kZ;
    /// Only meaningful for kXY. Always normalized into [-pi, pi).
    double angle = 0;

    static MeasurementDirection z();
    static MeasurementDirection x();
    static MeasurementDirection xy(double angle);

    bool operator==(const MeasurementDirection &other) const = default;
    /// "Z", "X", or "XY:<angle>".
    std::string str() const;
};

/// Reduces an angle into [-pi, pi).
double normalize_angle(double angle);

/// A gate with its operands. Operands are labels of the register the gate is applied to.
struct GateSpec {
    enum class Kind : uint8_t { kEulerRotation, kCnot, kRawUnitary };
    Kind kind = Kind::kEulerRotation;
    std::vector<Label> operands;
    double xi = 0, eta = 0, zeta = 0;
    Matrix raw;

    /// U_x(zeta) U_z(eta) U_x(xi) on one qubit.
    static GateSpec rotation(Label q, double xi, double eta, double zeta);
    static GateSpec cnot(Label control, Label target);
    /// Checks unitarity within 1e-10 and that the dimension matches the operand count.
    static GateSpec unitary(Matrix m, std::vector<Label> operands);

    Matrix matrix() const;
    std::string str() const;
};

/// State vector over labeled qubits. The first label is the most significant bit of the index.
struct StateRegister {
    std::vector<Complex> amplitudes;
    std::vector<Label> labels;

    size_t qubit_count() const {
        return labels.size();
    }
    /// Position of the label in tensor order. Throws std::invalid_argument if absent.
    size_t position(Label label) const;
    bool contains(Label label) const;
    /// Index bit corresponding to the label.
    size_t bit(Label label) const {
        return qubit_count() - 1 - position(label);
    }
    double norm_squared() const;
    /// Same state with the qubits permuted into the given label order.
    StateRegister reordered(const std::vector<Label> &order) const;
};

/// Product state. Labels default to 0..n-1.
StateRegister init_register(const std::vector<QubitPrep> &preps, std::vector<Label> labels = {});

/// Tensors a new qubit onto the least significant end of the register.
void append_qubit(StateRegister &state, Label label, const QubitPrep &prep);

void apply_unitary(StateRegister &state, const GateSpec &gate);
void apply_matrix(StateRegister &state, const Matrix &m, const std::vector<Label> &operands);

/// Multiplies the |11> component of qubits a and b by e^{i phi}. At phi = pi this is CZ.
void entangle_phase(StateRegister &state, Label a, Label b, double phi);

/// Multiplies the |a=0, b=1> component by e^{-i phi}: evolution under g (1 + Z_a)/2 (1 - Z_b)/2.
void entangle_ising_projector(StateRegister &state, Label a, Label b, double phi);

/// Probability that measuring the qubit in the direction gives outcome 0.
double outcome_probability(const StateRegister &state, Label q, MeasurementDirection dir);

/// Projective measurement. The qubit stays in the register in the observed eigenstate.
Outcome measure(StateRegister &state, Label q, MeasurementDirection dir, OutcomeSource &src);
Outcome measure(
    StateRegister &state, Label q, MeasurementDirection dir, const OutcomeSource &src, uint64_t key);

/// Projective measurement followed by removal of the measured qubit.
Outcome measure_and_discard(
    StateRegister &state, Label q, MeasurementDirection dir, OutcomeSource &src);
Outcome measure_and_discard(
    StateRegister &state, Label q, MeasurementDirection dir, const OutcomeSource &src, uint64_t key);

/// Projects onto a chosen outcome without consulting any source and removes the qubit.
/// Returns the probability the outcome had (the state is renormalized regardless).
double project_and_discard(StateRegister &state, Label q, MeasurementDirection dir, Outcome s);

/// Removes a qubit that is in a product state with the rest of the register.
/// Throws std::invalid_argument if it is entangled (checked within 1e-10).
void discard_qubit(StateRegister &state, Label q);

/// |<a|b>|^2. Both registers must have the same label order.
double fidelity_up_to_phase(const StateRegister &a, const StateRegister &b);

}  // namespace oneway

#endif
