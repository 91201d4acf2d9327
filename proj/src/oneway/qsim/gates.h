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

#ifndef ONEWAY_QSIM_GATES_H
#define ONEWAY_QSIM_GATES_H

#include "oneway/qsim/matrix.h"

namespace oneway {

// Rotation convention used throughout: U_x(t) = exp(-i t X / 2), U_z(t) = exp(-i t Z / 2).

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();
Matrix rot_x(double angle);
Matrix rot_z(double angle);

/// U_x(zeta) U_z(eta) U_x(xi): xi is applied first.
Matrix euler_rotation(double xi, double eta, double zeta);

/// 4x4 controlled-NOT with the control as the more significant qubit.
Matrix cnot_matrix();
Matrix cz_matrix();

}  // namespace oneway

#endif
