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

#ifndef ONEWAY_QSIM_CIRCUIT_H
#define ONEWAY_QSIM_CIRCUIT_H

#include <string>
#include <vector>

#include "oneway/qsim/state_register.h"

namespace oneway {

/// Gate-level circuit on wires 0..wires-1. Gate operands are wire indices.
struct LogicalCircuit {
    size_t wires = 0;
    std::vector<GateSpec> gates;
    /// Input state per wire. Missing entries default to |+>.
    std::vector<QubitPrep> inputs;

    QubitPrep input(size_t wire) const;
    /// Throws std::invalid_argument on out-of-range operands or unsupported gate kinds.
    void validate() const;
    std::string str() const;
};

/// Product of the circuit's declared inputs, with labels 0..wires-1.
StateRegister input_state(const LogicalCircuit &circuit);

/// Reference simulation: applies each gate as an explicit matrix.
StateRegister apply_circuit_direct(const LogicalCircuit &circuit, StateRegister input);

}  // namespace oneway

#endif
