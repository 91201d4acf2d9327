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

#include "oneway/qsim/state_register.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "oneway/qsim/gates.h"

namespace oneway {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-10;
constexpr double kProductTolerance = 1e-10;

/// Inserts a zero bit at position b of r.
inline size_t insert_zero_bit(size_t r, size_t b) {
    size_t low = r & ((size_t{1} << b) - 1);
    return ((r >> b) << (b + 1)) | low;
}

/// Conjugated eigenvector component used to project onto outcome s: <e_s| = (<0| + conj(w) <1|)/sqrt2.
inline Complex projection_weight(MeasurementDirection dir, Outcome s) {
    double angle = dir.kind == MeasurementDirection::Kind::kXY ? dir.angle : 0.0;
    Complex w = std::polar(1.0, -angle);
    return s ? -w : w;
}

void remove_label(StateRegister &state, Label q) {
    state.labels.erase(state.labels.begin() + state.position(q));
}

}  // namespace

QubitPrep QubitPrep::zero() {
    return {1, 0};
}

QubitPrep QubitPrep::one() {
    return {0, 1};
}

QubitPrep QubitPrep::plus() {
    return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
}

QubitPrep QubitPrep::minus() {
    return {std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2};
}

QubitPrep QubitPrep::state(Complex alpha, Complex beta) {
    double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1) > kNormTolerance) {
        std::stringstream ss;
        ss << "Qubit amplitudes " << alpha << ", " << beta << " are not normalized (norm^2 = " << n
           << ").";
        throw std::invalid_argument(ss.str());
    }
    return {alpha, beta};
}

double normalize_angle(double angle) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(angle + std::numbers::pi, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    r -= std::numbers::pi;
    if (r >= std::numbers::pi) {
        r -= two_pi;
    }
    return r;
}

MeasurementDirection MeasurementDirection::z() {
    return {Kind::kZ, 0};
}

MeasurementDirection MeasurementDirection::x() {
    return {Kind::kX, 0};
}

MeasurementDirection MeasurementDirection::xy(double angle) {
    return {Kind::kXY, normalize_angle(angle)};
}

std::string MeasurementDirection::str() const {
    switch (kind) {
        case Kind::kZ:
            return "Z";
        case Kind::kX:
            return "X";
        default: {
            std::stringstream ss;
            ss.precision(17);
            ss << "XY:" << angle;
            return ss.str();
        }
    }
}

GateSpec GateSpec::rotation(Label q, double xi, double eta, double zeta) {
    GateSpec g;
    g.kind = Kind::kEulerRotation;
    g.operands = {q};
    g.xi = xi;
    g.eta = eta;
    g.zeta = zeta;
    return g;
}

GateSpec GateSpec::cnot(Label control, Label target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ.");
    }
    GateSpec g;
    g.kind = Kind::kCnot;
    g.operands = {control, target};
    return g;
}

GateSpec GateSpec::unitary(Matrix m, std::vector<Label> operands) {
    if (operands.empty() || operands.size() > 2 || m.dim() != (size_t{1} << operands.size())) {
        throw std::invalid_argument("Raw unitary must be 2x2 on one qubit or 4x4 on two qubits.");
    }
    if (operands.size() == 2 && operands[0] == operands[1]) {
        throw std::invalid_argument("Raw unitary operands must be distinct.");
    }
    double err = m.unitarity_error();
    if (err > kUnitaryTolerance) {
        throw std::invalid_argument(
            "Matrix is not unitary (deviation " + std::to_string(err) + "): " + m.str());
    }
    GateSpec g;
    g.kind = Kind::kRawUnitary;
    g.operands = std::move(operands);
    g.raw = std::move(m);
    return g;
}

Matrix GateSpec::matrix() const {
    switch (kind) {
        case Kind::kEulerRotation:
            return euler_rotation(xi, eta, zeta);
        case Kind::kCnot:
            return cnot_matrix();
        default:
            return raw;
    }
}

std::string GateSpec::str() const {
    std::stringstream ss;
    ss.precision(17);
    switch (kind) {
        case Kind::kEulerRotation:
            ss << "rot " << operands[0] << " " << xi << " " << eta << " " << zeta;
            break;
        case Kind::kCnot:
            ss << "cnot " << operands[0] << " " << operands[1];
            break;
        default:
            ss << "unitary";
            for (auto q : operands) {
                ss << " " << q;
            }
            ss << " " << raw.str();
    }
    return ss.str();
}

size_t StateRegister::position(Label label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw std::invalid_argument("Qubit " + std::to_string(label) + " is not in the register.");
    }
    return it - labels.begin();
}

bool StateRegister::contains(Label label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

double StateRegister::norm_squared() const {
    double t = 0;
    for (const auto &a : amplitudes) {
        t += std::norm(a);
    }
    return t;
}

StateRegister StateRegister::reordered(const std::vector<Label> &order) const {
    if (order.size() != labels.size()) {
        throw std::invalid_argument("reordered: label count mismatch.");
    }
    size_t n = order.size();
    std::vector<size_t> old_bit(n);
    for (size_t k = 0; k < n; k++) {
        old_bit[k] = bit(order[k]);
        for (size_t j = 0; j < k; j++) {
            if (order[j] == order[k]) {
                throw std::invalid_argument("reordered: duplicate label.");
            }
        }
    }
    StateRegister r;
    r.labels = order;
    r.amplitudes.resize(amplitudes.size());
    for (size_t i = 0; i < amplitudes.size(); i++) {
        size_t src = 0;
        for (size_t k = 0; k < n; k++) {
            if ((i >> (n - 1 - k)) & 1) {
                src |= size_t{1} << old_bit[k];
            }
        }
        r.amplitudes[i] = amplitudes[src];
    }
    return r;
}

StateRegister init_register(const std::vector<QubitPrep> &preps, std::vector<Label> labels) {
    if (preps.empty()) {
        throw std::invalid_argument("A register needs at least one qubit.");
    }
    if (labels.empty()) {
        for (size_t k = 0; k < preps.size(); k++) {
            labels.push_back((Label)k);
        }
    }
    if (labels.size() != preps.size()) {
        throw std::invalid_argument("init_register: label count does not match qubit count.");
    }
    StateRegister r;
    r.amplitudes = {1};
    for (size_t k = 0; k < preps.size(); k++) {
        append_qubit(r, labels[k], preps[k]);
    }
    return r;
}

void append_qubit(StateRegister &state, Label label, const QubitPrep &prep) {
    if (state.contains(label)) {
        throw std::invalid_argument("Qubit " + std::to_string(label) + " is already in the register.");
    }
    QubitPrep checked = QubitPrep::state(prep.alpha, prep.beta);
    if (state.labels.empty()) {
        state.amplitudes = {1};
    }
    std::vector<Complex> out(state.amplitudes.size() * 2);
    for (size_t i = 0; i < state.amplitudes.size(); i++) {
        out[2 * i] = state.amplitudes[i] * checked.alpha;
        out[2 * i + 1] = state.amplitudes[i] * checked.beta;
    }
    state.amplitudes = std::move(out);
    state.labels.push_back(label);
}

void apply_matrix(StateRegister &state, const Matrix &m, const std::vector<Label> &operands) {
    size_t k = operands.size();
    if (m.dim() != (size_t{1} << k)) {
        throw std::invalid_argument("apply_matrix: matrix dimension does not match operand count.");
    }
    std::vector<size_t> bits(k);
    for (size_t j = 0; j < k; j++) {
        bits[j] = state.bit(operands[j]);
        for (size_t i = 0; i < j; i++) {
            if (operands[i] == operands[j]) {
                throw std::invalid_argument("apply_matrix: operands must be distinct.");
            }
        }
    }
    size_t d = m.dim();
    std::vector<size_t> offsets(d, 0);
    for (size_t v = 0; v < d; v++) {
        for (size_t j = 0; j < k; j++) {
            if ((v >> (k - 1 - j)) & 1) {
                offsets[v] |= size_t{1} << bits[j];
            }
        }
    }
    size_t mask = offsets[d - 1];
    std::vector<Complex> in(d);
    for (size_t base = 0; base < state.amplitudes.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (size_t v = 0; v < d; v++) {
            in[v] = state.amplitudes[base | offsets[v]];
        }
        for (size_t r = 0; r < d; r++) {
            Complex t = 0;
            for (size_t c = 0; c < d; c++) {
                t += m(r, c) * in[c];
            }
            state.amplitudes[base | offsets[r]] = t;
        }
    }
}

void apply_unitary(StateRegister &state, const GateSpec &gate) {
    if (gate.kind == GateSpec::Kind::kRawUnitary) {
        double err = gate.raw.unitarity_error();
        if (err > kUnitaryTolerance) {
            throw std::invalid_argument("Gate matrix is not unitary: " + gate.raw.str());
        }
    }
    apply_matrix(state, gate.matrix(), gate.operands);
}

void entangle_phase(StateRegister &state, Label a, Label b, double phi) {
    if (a == b) {
        throw std::invalid_argument("entangle_phase needs two distinct qubits.");
    }
    size_t mask = (size_t{1} << state.bit(a)) | (size_t{1} << state.bit(b));
    Complex f = std::polar(1.0, phi);
    for (size_t i = 0; i < state.amplitudes.size(); i++) {
        if ((i & mask) == mask) {
            state.amplitudes[i] *= f;
        }
    }
}

void entangle_ising_projector(StateRegister &state, Label a, Label b, double phi) {
    if (a == b) {
        throw std::invalid_argument("entangle_ising_projector needs two distinct qubits.");
    }
    size_t ma = size_t{1} << state.bit(a);
    size_t mb = size_t{1} << state.bit(b);
    Complex f = std::polar(1.0, -phi);
    for (size_t i = 0; i < state.amplitudes.size(); i++) {
        if (!(i & ma) && (i & mb)) {
            state.amplitudes[i] *= f;
        }
    }
}

double outcome_probability(const StateRegister &state, Label q, MeasurementDirection dir) {
    size_t b = state.bit(q);
    size_t half = state.amplitudes.size() / 2;
    size_t m = size_t{1} << b;
    double p0 = 0;
    if (dir.kind == MeasurementDirection::Kind::kZ) {
        for (size_t r = 0; r < half; r++) {
            p0 += std::norm(state.amplitudes[insert_zero_bit(r, b)]);
        }
        return p0;
    }
    Complex w = projection_weight(dir, 0);
    for (size_t r = 0; r < half; r++) {
        size_t i0 = insert_zero_bit(r, b);
        p0 += std::norm(state.amplitudes[i0] + w * state.amplitudes[i0 | m]);
    }
    return p0 / 2;
}

Outcome measure(StateRegister &state, Label q, MeasurementDirection dir, OutcomeSource &src) {
    return measure(state, q, dir, src, src.next_key());
}

Outcome measure(
    StateRegister &state, Label q, MeasurementDirection dir, const OutcomeSource &src, uint64_t key) {
    double p0 = outcome_probability(state, q, dir);
    Outcome s = src.resolve(p0, key);
    double p = s ? 1 - p0 : p0;
    double scale = 1 / std::sqrt(p);
    size_t b = state.bit(q);
    size_t m = size_t{1} << b;
    size_t half = state.amplitudes.size() / 2;
    auto &a = state.amplitudes;
    if (dir.kind == MeasurementDirection::Kind::kZ) {
        for (size_t r = 0; r < half; r++) {
            size_t i0 = insert_zero_bit(r, b);
            size_t keep = s ? i0 | m : i0;
            size_t drop = s ? i0 : i0 | m;
            a[keep] *= scale;
            a[drop] = 0;
        }
        return s;
    }
    Complex w = projection_weight(dir, s);
    Complex wc = std::conj(w);
    for (size_t r = 0; r < half; r++) {
        size_t i0 = insert_zero_bit(r, b);
        Complex c = (a[i0] + w * a[i0 | m]) * (scale / 2);
        a[i0] = c;
        a[i0 | m] = wc * c;
    }
    return s;
}

namespace {

/// Projects qubit q onto the outcome s and removes it. Returns the unnormalized probability.
double project_remove(StateRegister &state, Label q, MeasurementDirection dir, Outcome s) {
    size_t b = state.bit(q);
    size_t m = size_t{1} << b;
    size_t half = state.amplitudes.size() / 2;
    auto &a = state.amplitudes;
    double p = 0;
    if (dir.kind == MeasurementDirection::Kind::kZ) {
        size_t off = s ? m : 0;
        for (size_t r = 0; r < half; r++) {
            Complex c = a[insert_zero_bit(r, b) | off];
            a[r] = c;
            p += std::norm(c);
        }
    } else {
        Complex w = projection_weight(dir, s);
        constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2;
        for (size_t r = 0; r < half; r++) {
            size_t i0 = insert_zero_bit(r, b);
            Complex c = (a[i0] + w * a[i0 | m]) * inv_sqrt2;
            a[r] = c;
            p += std::norm(c);
        }
    }
    a.resize(half);
    remove_label(state, q);
    if (p > 0) {
        double scale = 1 / std::sqrt(p);
        for (auto &c : a) {
            c *= scale;
        }
    }
    return p;
}

}  // namespace

Outcome measure_and_discard(
    StateRegister &state, Label q, MeasurementDirection dir, OutcomeSource &src) {
    return measure_and_discard(state, q, dir, src, src.next_key());
}

Outcome measure_and_discard(
    StateRegister &state, Label q, MeasurementDirection dir, const OutcomeSource &src, uint64_t key) {
    if (state.qubit_count() == 1) {
        Outcome s = measure(state, q, dir, src, key);
        state.labels.clear();
        state.amplitudes = {1};
        return s;
    }
    double p0 = outcome_probability(state, q, dir);
    Outcome s = src.resolve(p0, key);
    project_remove(state, q, dir, s);
    return s;
}

double project_and_discard(StateRegister &state, Label q, MeasurementDirection dir, Outcome s) {
    if (state.qubit_count() == 1) {
        double p0 = outcome_probability(state, q, dir);
        state.labels.clear();
        state.amplitudes = {1};
        return s ? 1 - p0 : p0;
    }
    double p = project_remove(state, q, dir, s);
    if (p <= 0) {
        throw ImpossibleOutcome("Projected onto an outcome with zero probability.");
    }
    return p;
}

void discard_qubit(StateRegister &state, Label q) {
    size_t b = state.bit(q);
    size_t m = size_t{1} << b;
    size_t half = state.amplitudes.size() / 2;
    const auto &a = state.amplitudes;
    double n0 = 0, n1 = 0;
    Complex cross = 0;
    for (size_t r = 0; r < half; r++) {
        size_t i0 = insert_zero_bit(r, b);
        n0 += std::norm(a[i0]);
        n1 += std::norm(a[i0 | m]);
        cross += std::conj(a[i0]) * a[i0 | m];
    }
    if (n0 * n1 - std::norm(cross) > kProductTolerance) {
        throw std::invalid_argument(
            "Qubit " + std::to_string(q) + " is entangled with the rest of the register.");
    }
    if (state.qubit_count() == 1) {
        state.labels.clear();
        state.amplitudes = {1};
        return;
    }
    project_remove(state, q, MeasurementDirection::z(), n0 >= n1 ? 0 : 1);
}

double fidelity_up_to_phase(const StateRegister &a, const StateRegister &b) {
    if (a.labels != b.labels || a.amplitudes.size() != b.amplitudes.size()) {
        throw std::invalid_argument("fidelity_up_to_phase: registers have different qubits.");
    }
    Complex t = 0;
    for (size_t i = 0; i < a.amplitudes.size(); i++) {
        t += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return std::min(1.0, std::norm(t));
}

}  // namespace oneway
