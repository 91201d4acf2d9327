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

#include "oneway/gadgets/run.h"

#include <algorithm>
#include <stdexcept>

namespace oneway {

namespace {

MeasurementPattern lower_for(const ClusterState &cs, const MeasurementPattern &pattern, const PauliFrame &frame_in) {
    validate(pattern);
    if (frame_in.wires() != pattern.wires.size()) {
        throw std::invalid_argument("Incoming frame has a different number of wires than the pattern.");
    }
    for (const auto &s : pattern.region()) {
        if (!cs.live(s)) {
            throw std::invalid_argument("Pattern site (" + cs.lattice.format(s) + ") is not in the cluster.");
        }
    }
    return lower(pattern, cs.lattice, [&](const Site &s) {
        return cs.z_bits[cs.label(s)];
    });
}

GadgetReport finish(ClusterState &cs, const MeasurementPattern &lowered, std::vector<Outcome> outcomes, const PauliFrame &frame_in) {
    GadgetReport report;
    report.frame = evaluate_frame(lowered.frame_script, outcomes, frame_in);
    report.outcomes = std::move(outcomes);
    for (const auto &w : lowered.wires) {
        Label l = cs.label(w.output);
        report.output_labels.push_back(l);
        cs.z_bits[l] = 0;
    }
    return report;
}

}  // namespace

uint8_t signal_value(Signal s, const std::vector<Outcome> &outcomes, const PauliFrame &frame_in) {
    switch (s.kind) {
        case Signal::Kind::kOutcome:
            if (s.index >= outcomes.size()) {
                throw std::logic_error("Signal " + s.str() + " read before it was measured.");
            }
            return outcomes[s.index];
        case Signal::Kind::kFrameX:
            return frame_in.x.at(s.index);
        default:
            return frame_in.z.at(s.index);
    }
}

PauliFrame evaluate_frame(const ParityFrame &script, const std::vector<Outcome> &outcomes, const PauliFrame &frame_in) {
    auto value = [&](Signal s) {
        return signal_value(s, outcomes, frame_in);
    };
    PauliFrame f(script.wires());
    for (size_t w = 0; w < script.wires(); w++) {
        f.x[w] = script.x[w].evaluate(value);
        f.z[w] = script.z[w].evaluate(value);
    }
    return f;
}

Outcome run_lowered_step(
    ClusterState &cs,
    const MeasurementStep &step,
    const std::vector<Outcome> &outcomes,
    const PauliFrame &frame_in,
    const OutcomeSource &src,
    uint64_t key) {
    uint8_t flip = step.sign_dep.evaluate([&](Signal s) {
        return signal_value(s, outcomes, frame_in);
    });
    return measure_site(cs, step.site, step.direction(flip), src, key);
}

GadgetReport run_pattern(
    ClusterState &cs,
    const MeasurementPattern &pattern,
    const PauliFrame &frame_in,
    OutcomeSource &src,
    uint64_t key_offset) {
    MeasurementPattern lowered = lower_for(cs, pattern, frame_in);
    std::vector<Outcome> outcomes;
    for (size_t k = 0; k < lowered.steps.size(); k++) {
        outcomes.push_back(run_lowered_step(cs, lowered.steps[k], outcomes, frame_in, src, key_offset + k));
    }
    return finish(cs, lowered, std::move(outcomes), frame_in);
}

void sweep_branches(
    const ClusterState &cs,
    const MeasurementPattern &pattern,
    const PauliFrame &frame_in,
    const std::function<void(const GadgetReport &, const ClusterState &, double)> &callback) {
    MeasurementPattern lowered = lower_for(cs, pattern, frame_in);
    std::vector<Outcome> outcomes;
    std::function<void(const ClusterState &, double)> visit = [&](const ClusterState &state, double probability) {
        size_t k = outcomes.size();
        if (k == lowered.steps.size()) {
            ClusterState done = state;
            GadgetReport report = finish(done, lowered, outcomes, frame_in);
            callback(report, done, probability);
            return;
        }
        const auto &step = lowered.steps[k];
        uint8_t flip = step.sign_dep.evaluate([&](Signal s) {
            return signal_value(s, outcomes, frame_in);
        });
        MeasurementDirection dir = step.direction(flip);
        double p0 = outcome_probability(state.reg, state.label(step.site), dir);
        for (Outcome s : {0, 1}) {
            double p = s ? 1 - p0 : p0;
            if (p < 1e-12) {
                continue;
            }
            ClusterState next = state;
            measure_site(next, step.site, dir, OutcomeSource::exhaustive(s), 0);
            outcomes.push_back(s);
            visit(next, probability * p);
            outcomes.pop_back();
        }
    };
    visit(cs, 1.0);
}

StateRegister corrected_output(const ClusterState &cs, const GadgetReport &report) {
    auto sorted_out = report.output_labels;
    auto sorted_reg = cs.reg.labels;
    std::sort(sorted_out.begin(), sorted_out.end());
    std::sort(sorted_reg.begin(), sorted_reg.end());
    if (sorted_out != sorted_reg) {
        throw std::invalid_argument("corrected_output: the register holds sites other than the outputs.");
    }
    StateRegister r = cs.reg.reordered(report.output_labels);
    for (size_t w = 0; w < report.output_labels.size(); w++) {
        apply_matrix(r, frame_as_unitary(report.frame, w).adjoint(), {report.output_labels[w]});
    }
    for (size_t w = 0; w < r.labels.size(); w++) {
        r.labels[w] = (Label)w;
    }
    return r;
}

}  // namespace oneway
