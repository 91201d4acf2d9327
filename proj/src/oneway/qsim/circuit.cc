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

#include <sstream>
#include <stdexcept>

namespace oneway {

QubitPrep LogicalCircuit::input(size_t wire) const {
    if (wire >= wires) {
        throw std::invalid_argument("Wire " + std::to_string(wire) + " is out of range.");
    }
    return wire < inputs.size() ? inputs[wire] : QubitPrep::plus();
}

void LogicalCircuit::validate() const {
    if (wires == 0) {
        throw std::invalid_argument("A circuit needs at least one wire.");
    }
    if (inputs.size() > wires) {
        throw std::invalid_argument("More input states than wires.");
    }
    for (const auto &g : gates) {
        for (auto q : g.operands) {
            if (q >= wires) {
                throw std::invalid_argument(
                    "Gate '" + g.str() + "' uses wire " + std::to_string(q) + " but the circuit has " +
                    std::to_string(wires) + " wires.");
            }
        }
    }
}

std::string LogicalCircuit::str() const {
    std::stringstream ss;
    ss.precision(17);
    ss << "wires " << wires << "\n";
    for (size_t w = 0; w < inputs.size(); w++) {
        const auto &p = inputs[w];
        ss << "prep " << w << " " << p.alpha.real() << " " << p.alpha.imag() << " " << p.beta.real()
           << " " << p.beta.imag() << "\n";
    }
    for (const auto &g : gates) {
        ss << g.str() << "\n";
    }
    return ss.str();
}

StateRegister input_state(const LogicalCircuit &circuit) {
    circuit.validate();
    std::vector<QubitPrep> preps;
    for (size_t w = 0; w < circuit.wires; w++) {
        preps.push_back(circuit.input(w));
    }
    return init_register(preps);
}

StateRegister apply_circuit_direct(const LogicalCircuit &circuit, StateRegister input) {
    circuit.validate();
    for (const auto &g : circuit.gates) {
        apply_unitary(input, g);
    }
    return input;
}

}  // namespace oneway
