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

#include "oneway/qsim/euler.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oneway/qsim/gates.h"
#include "oneway/qsim/state_register.h"

namespace oneway {

EulerAngles euler_decompose(const Matrix &u) {
    if (u.dim() != 2 || !u.is_unitary(1e-10)) {
        throw std::invalid_argument("euler_decompose needs a 2x2 unitary, got " + u.str());
    }
    // H U_x(t) H = U_z(t), so H U H = e^{i phase} U_z(zeta) U_x(eta) U_z(xi), whose special-unitary
    // part is [[c e^{-i(a+b)/2}, -i s e^{-i(a-b)/2}], [-i s e^{i(a-b)/2}, c e^{i(a+b)/2}]] with
    // a = zeta, b = xi, c = cos(eta/2), s = sin(eta/2).
    Matrix v = hadamard() * u * hadamard();
    Complex det = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
    Matrix w = v * (1.0 / std::sqrt(det));
    double c = std::abs(w(0, 0));
    double s = std::abs(w(1, 0));
    constexpr double eps = 1e-12;

    EulerAngles r;
    r.eta = 2 * std::atan2(s, c);
    if (s < eps) {
        r.xi = -2 * std::arg(w(0, 0));
    } else if (c < eps) {
        r.xi = -2 * (std::arg(w(1, 0)) + std::numbers::pi / 2);
    } else {
        double sum = -2 * std::arg(w(0, 0));
        double diff = 2 * (std::arg(w(1, 0)) + std::numbers::pi / 2);
        r.zeta = (sum + diff) / 2;
        r.xi = (sum - diff) / 2;
    }
    r.xi = normalize_angle(r.xi);
    r.zeta = normalize_angle(r.zeta);

    Matrix rot = euler_rotation(r.xi, r.eta, r.zeta);
    Complex t = 0;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            t += std::conj(rot(i, j)) * u(i, j);
        }
    }
    r.phase = std::arg(t);
    double err = (rot * std::polar(1.0, r.phase)).max_abs_diff(u);
    if (err > 1e-10) {
        throw std::logic_error("euler_decompose failed to recompose " + u.str());
    }
    return r;
}

}  // namespace oneway
