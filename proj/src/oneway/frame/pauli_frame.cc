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

#include "oneway/frame/pauli_frame.h"

#include <sstream>

#include "oneway/qsim/gates.h"

namespace oneway {

PauliFrame toggle(PauliFrame frame, size_t q, PauliBit which) {
    frame.toggle(q, which);
    return frame;
}

RotationPropagation propagate_through_rotation(uint8_t x, uint8_t z, std::array<double, 3> angles) {
    RotationPropagation r{x, z, angles};
    if (z & 1) {
        r.angles[0] = -r.angles[0];
        r.angles[2] = -r.angles[2];
    }
    if (x & 1) {
        r.angles[1] = -r.angles[1];
    }
    return r;
}

ReadoutAdjustment readout_adjust(const PauliFrame &frame, size_t q, MeasurementDirection dir) {
    frame.check(q);
    uint8_t x = frame.x[q] & 1;
    uint8_t z = frame.z[q] & 1;
    switch (dir.kind) {
        case MeasurementDirection::Kind::kZ:
            return {dir, x};
        case MeasurementDirection::Kind::kX:
            return {dir, z};
        default:
            // X M(phi) X = M(-phi) and Z M(phi) Z = -M(phi).
            return {MeasurementDirection::xy(x ? -dir.angle : dir.angle), z};
    }
}

Matrix frame_as_unitary(const PauliFrame &frame, size_t q) {
    frame.check(q);
    Matrix u = Matrix::identity(2);
    if (frame.x[q] & 1) {
        u = u * pauli_x();
    }
    if (frame.z[q] & 1) {
        u = u * pauli_z();
    }
    return u;
}

std::string dump_frame(const PauliFrame &frame) {
    std::stringstream ss;
    for (size_t q = 0; q < frame.wires(); q++) {
        ss << "frame " << q << " x=" << (int)(frame.x[q] & 1) << " z=" << (int)(frame.z[q] & 1) << "\n";
    }
    return ss.str();
}

}  // namespace oneway
