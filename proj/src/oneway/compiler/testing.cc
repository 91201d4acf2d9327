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

#include "oneway/compiler/testing.h"

#include <numbers>

#include "oneway/gadgets/testing.h"

namespace oneway {

LogicalCircuit random_circuit(std::mt19937_64 &rng, size_t wires, size_t gates) {
    LogicalCircuit c;
    c.wires = wires;
    for (size_t w = 0; w < wires; w++) {
        c.inputs.push_back(random_qubit(rng));
    }
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_int_distribution<size_t> wire(0, wires - 1);
    for (size_t g = 0; g < gates; g++) {
        if (wires >= 2 && rng() % 3 == 0) {
            size_t a = wire(rng);
            size_t b = wire(rng);
            while (b == a) {
                b = wire(rng);
            }
            c.gates.push_back(GateSpec::cnot((Label)a, (Label)b));
        } else {
            double xi = angle(rng);
            double eta = angle(rng);
            double zeta = angle(rng);
            c.gates.push_back(GateSpec::rotation((Label)wire(rng), xi, eta, zeta));
        }
    }
    return c;
}

std::vector<Outcome> random_bits(std::mt19937_64 &rng, size_t count) {
    std::vector<Outcome> bits(count);
    for (auto &b : bits) {
        b = (Outcome)(rng() & 1);
    }
    return bits;
}

}  // namespace oneway
