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

#include "oneway/frame/parity.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace oneway {

std::string Signal::str() const {
    switch (kind) {
        case Kind::kOutcome:
            return "s" + std::to_string(index);
        case Kind::kFrameX:
            return "fx" + std::to_string(index);
        default:
            return "fz" + std::to_string(index);
    }
}

bool Parity::depends_on(Signal s) const {
    return std::binary_search(terms_.begin(), terms_.end(), s);
}

Parity &Parity::operator^=(const Parity &other) {
    std::vector<Signal> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(
        terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    constant_ ^= other.constant_;
    return *this;
}

uint8_t Parity::evaluate(const std::function<uint8_t(Signal)> &value) const {
    uint8_t r = constant_;
    for (const auto &t : terms_) {
        r ^= value(t) & 1;
    }
    return r;
}

Parity Parity::substitute(const std::function<Parity(Signal)> &f) const {
    Parity r(constant_);
    for (const auto &t : terms_) {
        r ^= f(t);
    }
    return r;
}

std::string Parity::str() const {
    std::string out;
    for (const auto &t : terms_) {
        if (!out.empty()) {
            out += "^";
        }
        out += t.str();
    }
    if (constant_) {
        out += out.empty() ? "1" : "^1";
    }
    return out.empty() ? "0" : out;
}

Parity Parity::parse(std::string_view text) {
    Parity r;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('^', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view token = text.substr(start, end - start);
        auto bad = [&]() {
            return std::invalid_argument("Bad parity term '" + std::string(token) + "' in '" + std::string(text) + "'.");
        };
        if (token == "0") {
        } else if (token == "1") {
            r ^= Parity(true);
        } else {
            Signal s;
            std::string_view digits;
            if (token.starts_with("s")) {
                s.kind = Signal::Kind::kOutcome;
                digits = token.substr(1);
            } else if (token.starts_with("fx")) {
                s.kind = Signal::Kind::kFrameX;
                digits = token.substr(2);
            } else if (token.starts_with("fz")) {
                s.kind = Signal::Kind::kFrameZ;
                digits = token.substr(2);
            } else {
                throw bad();
            }
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                    return c >= '0' && c <= '9';
                })) {
                throw bad();
            }
            s.index = (uint32_t)std::stoul(std::string(digits));
            r ^= Parity(s);
        }
        start = end + 1;
    }
    return r;
}

}  // namespace oneway
