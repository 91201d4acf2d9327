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

#include "oneway/gadgets/pattern.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oneway {

namespace {

std::string site_str(const Site &s) {
    return std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]);
}

void check_signals(const Parity &p, size_t outcome_limit, size_t wires, const std::string &where) {
    for (const auto &t : p.terms()) {
        if (t.kind == Signal::Kind::kOutcome ? t.index >= outcome_limit : t.index >= wires) {
            throw std::invalid_argument(where + " reads " + t.str() + ", which is not available there.");
        }
    }
}

MeasurementPattern map_sites(const MeasurementPattern &p, const std::function<Site(const Site &)> &f) {
    MeasurementPattern r = p;
    for (auto &s : r.steps) {
        s.site = f(s.site);
    }
    for (auto &w : r.wires) {
        w.input = f(w.input);
        w.output = f(w.output);
    }
    return r;
}

}  // namespace

MeasurementDirection MeasurementStep::direction(uint8_t flip) const {
    if (flip && base.kind == MeasurementDirection::Kind::kXY) {
        return MeasurementDirection::xy(-base.angle);
    }
    return base;
}

std::vector<Site> MeasurementPattern::region() const {
    std::vector<Site> out;
    for (const auto &s : steps) {
        out.push_back(s.site);
    }
    for (const auto &w : wires) {
        out.push_back(w.output);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool MeasurementPattern::is_output(const Site &s) const {
    return std::any_of(wires.begin(), wires.end(), [&](const PatternWire &w) {
        return w.output == s;
    });
}

void validate(const MeasurementPattern &p) {
    if (p.frame_script.wires() != p.wires.size()) {
        throw std::invalid_argument("Pattern frame script covers a different number of wires than the pattern has.");
    }
    std::set<Site> measured;
    for (size_t k = 0; k < p.steps.size(); k++) {
        const auto &step = p.steps[k];
        std::string where = "Step " + std::to_string(k) + " at (" + site_str(step.site) + ")";
        if (!measured.insert(step.site).second) {
            throw std::invalid_argument(where + " measures a site that was already measured.");
        }
        check_signals(step.sign_dep, k, p.wires.size(), where);
        if (step.base.kind != MeasurementDirection::Kind::kXY && !(step.sign_dep == Parity())) {
            throw std::invalid_argument(where + " is a Z/X measurement with a sign dependency.");
        }
    }
    std::set<Site> outputs;
    for (size_t w = 0; w < p.wires.size(); w++) {
        const auto &wire = p.wires[w];
        std::string where = "Wire " + std::to_string(w);
        if (measured.count(wire.output)) {
            throw std::invalid_argument(where + " has a measured output site.");
        }
        if (!outputs.insert(wire.output).second) {
            throw std::invalid_argument(where + " shares its output site with another wire.");
        }
        if (!(wire.input == wire.output) && !measured.count(wire.input)) {
            throw std::invalid_argument(where + " has an input site that is neither measured nor its output.");
        }
        check_signals(p.frame_script.x[w], p.steps.size(), p.wires.size(), where + " frame");
        check_signals(p.frame_script.z[w], p.steps.size(), p.wires.size(), where + " frame");
    }
}

std::string dump_pattern(const MeasurementPattern &p, const Lattice &coords) {
    std::stringstream ss;
    for (size_t k = 0; k < p.steps.size(); k++) {
        const auto &s = p.steps[k];
        ss << "step " << k << " site=" << coords.format(s.site) << " basis=" << s.base.str()
           << " sign_dep=" << s.sign_dep.str() << "\n";
    }
    return ss.str();
}

MeasurementPattern translate(const MeasurementPattern &p, const Site &offset) {
    return map_sites(p, [&](const Site &s) {
        return Site(s[0] + offset[0], s[1] + offset[1], s[2] + offset[2]);
    });
}

MeasurementPattern reflect_axis0(const MeasurementPattern &p, int x0, int x1) {
    return map_sites(p, [&](const Site &s) {
        return Site(x0 + x1 - s[0], s[1], s[2]);
    });
}

MeasurementPattern lower(
    const MeasurementPattern &p, const Lattice &adjacency, const std::function<uint8_t(const Site &)> &pending_z) {
    validate(p);
    std::map<Site, size_t> step_of;
    for (size_t k = 0; k < p.steps.size(); k++) {
        step_of[p.steps[k].site] = k;
    }
    auto in_pattern = [&](const Site &s) {
        return step_of.count(s) || p.is_output(s);
    };
    auto is_z_step = [&](const Site &s) {
        auto it = step_of.find(s);
        return it != step_of.end() && p.steps[it->second].base.kind == MeasurementDirection::Kind::kZ;
    };
    // Correction picked up by a site from its Z-measured neighbors and its own pending Z.
    auto correction = [&](const Site &s, bool require_closed) {
        Parity c(pending_z(s) & 1);
        for (const auto &n : adjacency.neighbors(s)) {
            if (is_z_step(n)) {
                c ^= Signal::outcome((uint32_t)step_of[n]);
            } else if (require_closed && !in_pattern(n)) {
                throw std::invalid_argument(
                    "Site (" + adjacency.format(s) + ") is measured in the X-Y plane but its neighbor (" +
                    adjacency.format(n) + ") is not part of the pattern.");
            }
        }
        return c;
    };

    std::vector<Parity> effective(p.steps.size());
    for (size_t k = 0; k < p.steps.size(); k++) {
        effective[k] = Signal::outcome((uint32_t)k);
        if (p.steps[k].base.kind != MeasurementDirection::Kind::kZ) {
            effective[k] ^= correction(p.steps[k].site, true);
        }
    }
    auto to_raw = [&](Signal s) -> Parity {
        if (s.kind == Signal::Kind::kOutcome) {
            return effective[s.index];
        }
        return s;
    };

    MeasurementPattern r = p;
    for (size_t k = 0; k < r.steps.size(); k++) {
        r.steps[k].sign_dep = p.steps[k].sign_dep.substitute(to_raw);
        for (const auto &t : r.steps[k].sign_dep.terms()) {
            if (t.kind == Signal::Kind::kOutcome && t.index >= k) {
                throw std::invalid_argument(
                    "Step " + std::to_string(k) + " at (" + adjacency.format(p.steps[k].site) +
                    ") depends on a Z measurement of a neighbor that is scheduled after it.");
            }
        }
    }
    for (size_t w = 0; w < r.wires.size(); w++) {
        r.frame_script.x[w] = p.frame_script.x[w].substitute(to_raw);
        r.frame_script.z[w] = p.frame_script.z[w].substitute(to_raw) ^ correction(p.wires[w].output, false);
    }
    assign_rounds(r);
    return r;
}

uint32_t assign_rounds(MeasurementPattern &p) {
    uint32_t count = 0;
    for (auto &step : p.steps) {
        uint32_t round = 0;
        for (const auto &t : step.sign_dep.terms()) {
            if (t.kind == Signal::Kind::kOutcome) {
                round = std::max(round, p.steps[t.index].round + 1);
            }
        }
        step.round = round;
        count = std::max(count, round + 1);
    }
    return count;
}

PatternBuilder::PatternBuilder(std::vector<Site> inputs) : positions_(std::move(inputs)) {
    result_.frame_script = ParityFrame(positions_.size());
    for (size_t w = 0; w < positions_.size(); w++) {
        result_.wires.push_back({positions_[w], positions_[w]});
        result_.frame_script.x[w] = Signal::frame_x((uint32_t)w);
        result_.frame_script.z[w] = Signal::frame_z((uint32_t)w);
    }
}

void PatternBuilder::append(const MeasurementPattern &gadget, const std::vector<size_t> &wire_map) {
    validate(gadget);
    if (wire_map.size() != gadget.wires.size()) {
        throw std::invalid_argument("Gadget wire map has the wrong size.");
    }
    for (size_t k = 0; k < wire_map.size(); k++) {
        if (wire_map[k] >= positions_.size()) {
            throw std::invalid_argument("Gadget wire map refers to an unknown wire.");
        }
        for (size_t j = 0; j < k; j++) {
            if (wire_map[j] == wire_map[k]) {
                throw std::invalid_argument("Gadget wire map uses a wire twice.");
            }
        }
        if (!(gadget.wires[k].input == positions_[wire_map[k]])) {
            throw std::invalid_argument(
                "Gadget input (" + site_str(gadget.wires[k].input) + ") does not continue wire " +
                std::to_string(wire_map[k]) + " at (" + site_str(positions_[wire_map[k]]) + ").");
        }
    }
    uint32_t offset = (uint32_t)result_.steps.size();
    ParityFrame before = result_.frame_script;
    auto substitute = [&](Signal s) -> Parity {
        switch (s.kind) {
            case Signal::Kind::kOutcome:
                return Signal::outcome(s.index + offset);
            case Signal::Kind::kFrameX:
                return before.x[wire_map[s.index]];
            default:
                return before.z[wire_map[s.index]];
        }
    };
    for (const auto &step : gadget.steps) {
        MeasurementStep copy = step;
        copy.sign_dep = step.sign_dep.substitute(substitute);
        result_.steps.push_back(copy);
    }
    for (size_t k = 0; k < wire_map.size(); k++) {
        result_.frame_script.x[wire_map[k]] = gadget.frame_script.x[k].substitute(substitute);
        result_.frame_script.z[wire_map[k]] = gadget.frame_script.z[k].substitute(substitute);
        positions_[wire_map[k]] = gadget.wires[k].output;
    }
    build();
}

void PatternBuilder::append_carving(const std::vector<Site> &sites) {
    for (const auto &s : sites) {
        result_.steps.push_back({s, MeasurementDirection::z(), Parity(), 0});
    }
    build();
}

MeasurementPattern PatternBuilder::build() const {
    MeasurementPattern r = result_;
    for (size_t w = 0; w < positions_.size(); w++) {
        r.wires[w].output = positions_[w];
    }
    validate(r);
    return r;
}

}  // namespace oneway
