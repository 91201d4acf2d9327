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

#include "oneway/qsim/outcome_source.h"

#include <random>

namespace oneway {

constexpr double kImpossibleProbability = 1e-12;

OutcomeSource OutcomeSource::sampled(uint64_t seed) {
    OutcomeSource r;
    r.mode_ = Mode::kSampled;
    r.seed_ = seed;
    return r;
}

OutcomeSource OutcomeSource::forced(std::vector<Outcome> bits) {
    OutcomeSource r;
    r.mode_ = Mode::kForced;
    for (auto b : bits) {
        if (b > 1) {
            throw std::invalid_argument("Forced outcomes must be 0 or 1.");
        }
    }
    r.bits_ = std::move(bits);
    return r;
}

OutcomeSource OutcomeSource::exhaustive(uint64_t branch) {
    OutcomeSource r;
    r.mode_ = Mode::kExhaustive;
    r.branch_ = branch;
    return r;
}

double OutcomeSource::uniform(uint64_t key) const {
    std::seed_seq seq{
        (uint32_t)seed_, (uint32_t)(seed_ >> 32), (uint32_t)key, (uint32_t)(key >> 32)};
    std::mt19937_64 rng(seq);
    return (double)(rng() >> 11) * 0x1.0p-53;
}

Outcome OutcomeSource::resolve(double p0, uint64_t key) const {
    Outcome s;
    switch (mode_) {
        case Mode::kSampled:
            return uniform(key) < p0 ? 0 : 1;
        case Mode::kForced:
            if (key >= bits_.size()) {
                throw std::out_of_range(
                    "Forced outcome sequence has " + std::to_string(bits_.size()) +
                    " entries but measurement " + std::to_string(key) + " was requested.");
            }
            s = bits_[key];
            break;
        case Mode::kExhaustive:
            s = key < 64 ? (branch_ >> key) & 1 : 0;
            break;
        default:
            throw std::logic_error("Unknown outcome source mode.");
    }
    double p = s ? 1 - p0 : p0;
    if (p < kImpossibleProbability) {
        throw ImpossibleOutcome(
            "Measurement " + std::to_string(key) + " was forced to outcome " + std::to_string(s) +
            " which has probability " + std::to_string(p) + ".");
    }
    return s;
}

}  // namespace oneway
