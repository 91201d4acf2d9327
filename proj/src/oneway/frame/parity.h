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

#ifndef ONEWAY_FRAME_PARITY_H
#define ONEWAY_FRAME_PARITY_H

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace oneway {

/// A classical bit that a sign dependency or frame update can read.
struct Signal {
    enum class Kind : uint8_t {
        /// Outcome of measurement step `index`.
        kOutcome,
        /// Incoming frame x-bit of wire `index`.
        kFrameX,
        /// Incoming frame z-bit of wire `index`.
        kFrameZ,
    };
    Kind kind = Kind::kOutcome;
    uint32_t index = 0;

    static Signal outcome(uint32_t k) {
        return {Kind::kOutcome, k};
    }
    static Signal frame_x(uint32_t w) {
        return {Kind::kFrameX, w};
    }
    static Signal frame_z(uint32_t w) {
        return {Kind::kFrameZ, w};
    }

    auto operator<=>(const Signal &other) const = default;
    bool operator==(const Signal &other) const = default;
    /// "s<k>", "fx<w>", or "fz<w>".
    std::string str() const;
};

/// XOR of a set of signals and a constant bit.
class Parity {
   public:
    Parity() = default;
    Parity(bool constant) : constant_(constant) {
    }
    Parity(Signal s) : terms_{s} {
    }

    const std::vector<Signal> &terms() const {
        return terms_;
    }
    bool constant() const {
        return constant_;
    }
    bool is_constant() const {
        return terms_.empty();
    }
    bool depends_on(Signal s) const;

    Parity &operator^=(const Parity &other);
    friend Parity operator^(Parity a, const Parity &b) {
        a ^= b;
        return a;
    }

    uint8_t evaluate(const std::function<uint8_t(Signal)> &value) const;
    /// Replaces every signal by the parity that `f` returns for it.
    Parity substitute(const std::function<Parity(Signal)> &f) const;

    bool operator==(const Parity &other) const = default;

    /// Terms joined by '^', with a trailing "1" when the constant is set; "0" when empty.
    std::string str() const;
    static Parity parse(std::string_view text);

   private:
    std::vector<Signal> terms_;  // Sorted and unique.
    bool constant_ = false;
};

}  // namespace oneway

#endif
