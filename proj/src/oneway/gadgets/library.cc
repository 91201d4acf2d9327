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

#include "oneway/gadgets/library.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oneway/qsim/euler.h"
#include "oneway/qsim/gates.h"

namespace oneway {

namespace {

Parity s(uint32_t k) {
    return Signal::outcome(k);
}

Parity fx(uint32_t w) {
    return Signal::frame_x(w);
}

Parity fz(uint32_t w) {
    return Signal::frame_z(w);
}

MeasurementStep x_step(Site site) {
    return {site, MeasurementDirection::x(), Parity(), 0};
}

MeasurementStep xy_step(Site site, double angle, Parity sign_dep = Parity()) {
    return {site, MeasurementDirection::xy(angle), std::move(sign_dep), 0};
}

MeasurementStep z_step(Site site) {
    return {site, MeasurementDirection::z(), Parity(), 0};
}

/// Frame of wires 0 (control) and 1 (target) after pushing the incoming frame through a CNOT.
ParityFrame incoming_through_cnot() {
    ParityFrame f(2);
    f.x = {fx(0), fx(1)};
    f.z = {fz(0), fz(1)};
    return propagate_through_cnot(f, 0, 1);
}

}  // namespace

Matrix even_wire_unitary() {
    return hadamard();
}

MeasurementPattern build_wire(int n) {
    if (n < 1) {
        throw std::invalid_argument("A wire needs at least one site.");
    }
    MeasurementPattern p;
    p.wires = {{Site(0, 0), Site(0, n - 1)}};
    // Measuring X on a chain site with outcome s teleports the state one site on as X^s H, and
    // X^s H X^x Z^z = X^(s^z) Z^x H up to phase.
    Parity x = fx(0);
    Parity z = fz(0);
    for (int k = 0; k + 1 < n; k++) {
        p.steps.push_back(x_step(Site(0, k)));
        Parity next_x = s(k) ^ z;
        z = x;
        x = next_x;
    }
    p.frame_script = ParityFrame(1);
    p.frame_script.x[0] = x;
    p.frame_script.z[0] = z;
    assign_rounds(p);
    return p;
}

MeasurementPattern build_rotation(double xi, double eta, double zeta) {
    MeasurementPattern p;
    p.wires = {{Site(0, 0), Site(0, 4)}};
    p.steps = {
        x_step(Site(0, 0)),
        xy_step(Site(0, 1), -xi, s(0) ^ fz(0)),
        xy_step(Site(0, 2), -eta, s(1) ^ fx(0)),
        xy_step(Site(0, 3), -zeta, s(0) ^ s(2) ^ fz(0)),
    };
    p.frame_script = ParityFrame(1);
    p.frame_script.x[0] = fx(0) ^ s(1) ^ s(3);
    p.frame_script.z[0] = fz(0) ^ s(0) ^ s(2);
    assign_rounds(p);
    return p;
}

MeasurementPattern build_cnot_minimal() {
    MeasurementPattern p;
    p.wires = {{Site(0, 1), Site(0, 1)}, {Site(1, 0), Site(1, 2)}};
    p.steps = {x_step(Site(1, 0)), x_step(Site(1, 1))};
    // Byproduct X_t^s1 Z_t^s0 Z_c^s0 after the CNOT, on top of the incoming frame pushed
    // through the CNOT.
    p.frame_script = incoming_through_cnot();
    p.frame_script.x[1] ^= s(1);
    p.frame_script.z[0] ^= s(0);
    p.frame_script.z[1] ^= s(0);
    assign_rounds(p);
    return p;
}

MeasurementPattern build_cnot_composable() {
    constexpr double y = -std::numbers::pi / 2;
    MeasurementPattern p;
    p.wires = {{Site(0, 0), Site(0, 6)}, {Site(2, 0), Site(2, 6)}};
    for (int c : {1, 3, 4, 5}) {
        p.steps.push_back(z_step(Site(1, c)));
    }
    uint32_t bridge = (uint32_t)p.steps.size();
    p.steps.push_back(xy_step(Site(1, 2), y));
    uint32_t control = (uint32_t)p.steps.size();
    const char *control_bases = "XXYXXX";
    for (int c = 0; c < 6; c++) {
        p.steps.push_back(control_bases[c] == 'X' ? x_step(Site(0, c)) : xy_step(Site(0, c), y));
    }
    uint32_t target = (uint32_t)p.steps.size();
    const char *target_bases = "YYYYYX";
    for (int c = 0; c < 6; c++) {
        p.steps.push_back(target_bases[c] == 'X' ? x_step(Site(2, c)) : xy_step(Site(2, c), y));
    }

    // Incoming frame pushed through the CNOT, then the outcome byproducts. Each entry lists which
    // of (x_c, z_c, x_t, z_t) an outcome toggles. Obtained by fitting the oracle over all branches.
    ParityFrame f = incoming_through_cnot();
    f.x[1] ^= true;
    struct Toggle {
        uint32_t step;
        bool xc, zc, xt, zt;
    };
    const Toggle toggles[] = {
        {bridge, 0, 1, 1, 0},
        {control + 0, 0, 1, 0, 0},
        {control + 1, 1, 0, 1, 0},
        {control + 2, 0, 1, 0, 0},
        {control + 3, 1, 0, 0, 0},
        {control + 4, 0, 1, 0, 0},
        {control + 5, 1, 0, 0, 0},
        {target + 0, 0, 1, 0, 1},
        {target + 1, 0, 1, 1, 1},
        {target + 2, 0, 0, 1, 0},
        {target + 3, 0, 0, 1, 1},
        {target + 4, 0, 0, 0, 1},
        {target + 5, 0, 0, 1, 0},
    };
    for (const auto &t : toggles) {
        if (t.xc) {
            f.x[0] ^= s(t.step);
        }
        if (t.zc) {
            f.z[0] ^= s(t.step);
        }
        if (t.xt) {
            f.x[1] ^= s(t.step);
        }
        if (t.zt) {
            f.z[1] ^= s(t.step);
        }
    }
    p.frame_script = f;
    assign_rounds(p);
    return p;
}

MeasurementPattern build_input_prep(Complex alpha, Complex beta) {
    QubitPrep t = QubitPrep::state(alpha, beta);
    // V maps |0> to the target, so V H maps |+> to it.
    Matrix v(2, {t.alpha, std::conj(t.beta), t.beta, -std::conj(t.alpha)});
    EulerAngles a = euler_decompose(v * hadamard());
    return build_rotation(a.xi, a.eta, a.zeta);
}

}  // namespace oneway
