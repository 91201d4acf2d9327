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

#ifndef ONEWAY_FRAME_PAULI_FRAME_H
#define ONEWAY_FRAME_PAULI_FRAME_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oneway/frame/parity.h"
#include "oneway/qsim/matrix.h"
#include "oneway/qsim/state_register.h"

namespace oneway {

enum class PauliBit : uint8_t { kX, kZ };

/// Byproduct record: wire q carries U = X^x[q] Z^z[q] on top of the intended state.
///
/// The phase of U is not tracked. `Bit` is uint8_t for concrete runs and Parity when the frame
/// is computed symbolically in terms of measurement outcomes.
template <typename Bit>
struct BasicPauliFrame {
    std::vector<Bit> x;
    std::vector<Bit> z;

    BasicPauliFrame() = default;
    explicit BasicPauliFrame(size_t wires) : x(wires), z(wires) {
    }

    size_t wires() const {
        return x.size();
    }
    void check(size_t q) const {
        if (q >= wires()) {
            throw std::invalid_argument(
                "Frame has no wire " + std::to_string(q) + " (it has " + std::to_string(wires()) + ").");
        }
    }
    Bit &bit(size_t q, PauliBit which) {
        check(q);
        return which == PauliBit::kX ? x[q] : z[q];
    }
    const Bit &bit(size_t q, PauliBit which) const {
        check(q);
        return which == PauliBit::kX ? x[q] : z[q];
    }
    /// XORs `value` into the named bit.
    void add(size_t q, PauliBit which, const Bit &value) {
        bit(q, which) ^= value;
    }
    void toggle(size_t q, PauliBit which) {
        add(q, which, Bit(1));
    }

    bool operator==(const BasicPauliFrame &other) const = default;
};

using PauliFrame = BasicPauliFrame<uint8_t>;
using ParityFrame = BasicPauliFrame<Parity>;

/// Frame after a CNOT(c, t): z[c] picks up z[t] and x[t] picks up x[c].
template <typename Bit>
BasicPauliFrame<Bit> propagate_through_cnot(BasicPauliFrame<Bit> frame, size_t c, size_t t) {
    if (c == t) {
        throw std::invalid_argument("propagate_through_cnot: control and target must differ.");
    }
    frame.check(c);
    frame.check(t);
    frame.z[c] ^= frame.z[t];
    frame.x[t] ^= frame.x[c];
    return frame;
}

/// Returns a copy with the named bit toggled.
PauliFrame toggle(PauliFrame frame, size_t q, PauliBit which);

struct RotationPropagation {
    uint8_t x = 0;
    uint8_t z = 0;
    /// Angles to implement so that the byproduct commutes to the output unchanged.
    std::array<double, 3> angles{};
};

/// U_R(a', b', c') X^x Z^z = X^x Z^z U_R(a, b, c) where z flips the signs of a and c and x flips
/// the sign of b.
RotationPropagation propagate_through_rotation(uint8_t x, uint8_t z, std::array<double, 3> angles);

struct ReadoutAdjustment {
    MeasurementDirection direction;
    /// XORed into the raw outcome to get the reported outcome.
    uint8_t flip = 0;
};

/// How to measure a wire carrying the frame's byproduct so the reported bit is the outcome the
/// byproduct-free state would have given.
ReadoutAdjustment readout_adjust(const PauliFrame &frame, size_t q, MeasurementDirection dir);

/// X^x Z^z for wire q.
Matrix frame_as_unitary(const PauliFrame &frame, size_t q);

/// One "frame <wire> x=<0|1> z=<0|1>" line per wire.
std::string dump_frame(const PauliFrame &frame);

}  // namespace oneway

#endif
