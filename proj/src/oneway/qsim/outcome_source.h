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

#ifndef ONEWAY_QSIM_OUTCOME_SOURCE_H
#define ONEWAY_QSIM_OUTCOME_SOURCE_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oneway {

/// A measurement result: 0 or 1, meaning projection onto the (-1)^s eigenstate.
using Outcome = uint8_t;

/// Raised when a forced outcome has (numerically) zero probability.
struct ImpossibleOutcome : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decides measurement outcomes.
///
/// Every decision is made against a key. Callers that know the global index of a measurement
/// pass it as the key, which makes the drawn outcome independent of the order in which
/// measurements are actually performed. Callers that don't care use next_key(), which counts up
/// from zero.
class OutcomeSource {
   public:
    enum class Mode : uint8_t { kSampled, kForced, kExhaustive };

    /// Outcome for key k is drawn from a generator seeded with (seed, k).
    static OutcomeSource sampled(uint64_t seed);
    /// Outcome for key k is bits[k].
    static OutcomeSource forced(std::vector<Outcome> bits);
    /// Outcome for key k is bit k of the branch index (0 for k >= 64).
    static OutcomeSource exhaustive(uint64_t branch);

    Mode mode() const {
        return mode_;
    }
    uint64_t seed() const {
        return seed_;
    }

    uint64_t next_key() {
        return counter_++;
    }

    /// Picks the outcome for a measurement whose outcome 0 has probability p0.
    ///
    /// Throws ImpossibleOutcome if a forced or enumerated outcome has probability below 1e-12.
    Outcome resolve(double p0, uint64_t key) const;

    /// The uniform draw in [0, 1) used by sampled mode for the given key.
    double uniform(uint64_t key) const;

   private:
    Mode mode_ = Mode::kSampled;
    uint64_t seed_ = 0;
    uint64_t branch_ = 0;
    uint64_t counter_ = 0;
    std::vector<Outcome> bits_;
};

}  // namespace oneway

#endif
