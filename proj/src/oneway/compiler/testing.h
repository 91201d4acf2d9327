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

#ifndef ONEWAY_COMPILER_TESTING_H
#define ONEWAY_COMPILER_TESTING_H

#include <random>

#include "oneway/qsim/circuit.h"

namespace oneway {

/// Circuit with random inputs and `gates` gates, each a rotation with uniform angles or (with
/// two or more wires) a CNOT between two random distinct wires.
LogicalCircuit random_circuit(std::mt19937_64 &rng, size_t wires, size_t gates);

/// Forced outcome bits drawn uniformly.
std::vector<Outcome> random_bits(std::mt19937_64 &rng, size_t count);

}  // namespace oneway

#endif
