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

#ifndef ONEWAY_QSIM_EULER_H
#define ONEWAY_QSIM_EULER_H

#include "oneway/qsim/matrix.h"

namespace oneway {

struct EulerAngles {
    double xi = 0;
    double eta = 0;
    double zeta = 0;
    double phase = 0;
};

/// Finds angles with U = e^{i phase} U_x(zeta) U_z(eta) U_x(xi).
///
/// Canonical branch: eta in [0, pi], xi and zeta in [-pi, pi). When eta is 0 or pi only one of
/// xi, zeta is determined and zeta is set to 0. Throws std::invalid_argument if U is not a 2x2
/// unitary within 1e-10.
EulerAngles euler_decompose(const Matrix &u);

}  // namespace oneway

#endif
