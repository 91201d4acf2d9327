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

#include "oneway/qsim/gates.h"

#include <cmath>

namespace oneway {

namespace {
constexpr Complex I{0, 1};
}

Matrix pauli_x() {
    return Matrix(2, {0, 1, 1, 0});
}

Matrix pauli_y() {
    return Matrix(2, {0, -I, I, 0});
}

Matrix pauli_z() {
    return Matrix(2, {1, 0, 0, -1});
}

Matrix hadamard() {
    double s = 1 / std::sqrt(2.0);
    return Matrix(2, {s, s, s, -s});
}

Matrix rot_x(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return Matrix(2, {c, -I * s, -I * s, c});
}

Matrix rot_z(double angle) {
    return Matrix(2, {std::exp(-I * (angle / 2)), 0, 0, std::exp(I * (angle / 2))});
}

Matrix euler_rotation(double xi, double eta, double zeta) {
    return rot_x(zeta) * rot_z(eta) * rot_x(xi);
}

Matrix cnot_matrix() {
    return Matrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

Matrix cz_matrix() {
    return Matrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}

}  // namespace oneway
