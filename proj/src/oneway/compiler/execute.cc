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

#include "oneway/compiler/execute.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "oneway/gadgets/run.h"

namespace oneway {

namespace {

// Stage k of a staged run entangles sites[k] and then measures steps[k], in that order.
struct Stages {
    std::vector<std::vector<Site>> sites;
    std::vector<std::vector<size_t>> steps;
};

std::string join(const std::vector<int> &values) {
    std::stringstream out;
    for (size_t k = 0; k < values.size(); k++) {
        out << (k ? " " : "") << values[k];
    }
    return out.str();
}

Stages make_stages(const LayoutPlan &plan, const Schedule &sched, const ExecutionStrategy &strategy) {
    const auto &steps = plan.lowered.steps;
    std::vector<size_t> order;
    for (const auto &round : sched.rounds) {
        order.insert(order.end(), round.begin(), round.end());
    }
    Stages stages;
    if (strategy.kind == ExecutionStrategy::Kind::kEntangleOnce) {
        stages.sites.push_back(plan.lattice.occupied_sites());
        stages.steps.push_back(order);
        return stages;
    }

    const auto &b = strategy.boundaries;
    std::vector<int> valid = gadget_boundaries(plan);
    for (int column : b) {
        if (!std::binary_search(valid.begin(), valid.end(), column)) {
            throw std::invalid_argument(
                "Stage boundary at column " + std::to_string(column) +
                " does not fall between gadgets. Valid boundaries: " + (valid.empty() ? "none" : join(valid)) + ".");
        }
    }
    size_t count = b.size() + 1;
    auto entangle_stage = [&](const Site &s) {
        return (size_t)(std::lower_bound(b.begin(), b.end(), s.c[1]) - b.begin());
    };
    auto exec_stage = [&](const Site &s) {
        return (size_t)(std::upper_bound(b.begin(), b.end(), s.c[1]) - b.begin());
    };
    stages.sites.resize(count);
    stages.steps.resize(count);
    for (const auto &s : plan.lattice.occupied_sites()) {
        stages.sites[entangle_stage(s)].push_back(s);
    }
    std::vector<size_t> step_stage(steps.size());
    for (size_t k : order) {
        step_stage[k] = exec_stage(steps[k].site);
        stages.steps[step_stage[k]].push_back(k);
    }
    for (size_t k = 0; k < steps.size(); k++) {
        for (const auto &t : steps[k].sign_dep.terms()) {
            if (t.kind == Signal::Kind::kOutcome && step_stage[t.index] > step_stage[k]) {
                throw std::invalid_argument(
                    "Stage boundaries separate step " + std::to_string(k) + " from the outcome " + t.str() +
                    " it depends on.");
            }
        }
    }
    std::set<Site> readouts(plan.readouts.begin(), plan.readouts.end());
    auto measured_in = [&](const Site &s) {
        return readouts.count(s) ? count : exec_stage(s);
    };
    for (const auto &[u, v] : plan.lattice.edges()) {
        if (std::max(entangle_stage(u), entangle_stage(v)) > std::min(measured_in(u), measured_in(v))) {
            throw std::invalid_argument(
                "Stage boundaries would measure (" + plan.lattice.format(u) + ") or (" + plan.lattice.format(v) +
                ") before the edge between them is entangled.");
        }
    }
    return stages;
}

size_t peak_of(const Stages &stages) {
    size_t live = 0;
    size_t peak = 0;
    for (size_t k = 0; k < stages.sites.size(); k++) {
        live += stages.sites[k].size();
        peak = std::max(peak, live);
        live -= stages.steps[k].size();
    }
    return peak;
}

MeasurementDirection direction_for(const MeasurementStep &step, const std::vector<Outcome> &outcomes, const PauliFrame &zero) {
    uint8_t flip = step.sign_dep.evaluate([&](Signal s) {
        return signal_value(s, outcomes, zero);
    });
    return step.direction(flip);
}

// Post-measurement states of the first steps of stage 0, keyed by their outcomes. Shots that
// share an outcome prefix start from the cached state instead of the full register.
struct PrefixCache {
    struct Node {
        std::optional<ClusterState> state;
        std::optional<double> p0;
        std::array<std::unique_ptr<Node>, 2> child;
    };
    std::unique_ptr<Node> root;
    size_t depth = 0;
};

// Qubits left after the cached prefix.
constexpr size_t kCachedRegisterQubits = 14;

class Executor {
   public:
    Executor(const LayoutPlan &plan, const ExecutionStrategy &strategy, const ExecutionOptions &options)
        : plan_(plan), options_(options), zero_(plan.circuit.wires) {
        Schedule sched = schedule(plan);
        stages_ = make_stages(plan, sched, strategy);
        size_t peak = peak_of(stages_);
        if (peak > options.max_live_qubits) {
            throw std::invalid_argument(
                "Run needs " + std::to_string(peak) + " live qubits, more than the limit of " +
                std::to_string(options.max_live_qubits) + ".");
        }
        for (size_t w = 0; w < plan.inputs.size(); w++) {
            preps_[plan.inputs[w]] = plan.input_prep(w);
        }
        Lattice first = plan.lattice;
        std::set<Site> stage0(stages_.sites[0].begin(), stages_.sites[0].end());
        for (const auto &s : plan.lattice.occupied_sites()) {
            first.set_occupied(s, stage0.count(s) > 0);
        }
        initial_ = entangle_cluster(first, preps_, plan.options.convention);
    }

    void enable_cache() {
        size_t live = initial_.reg.qubit_count();
        if (live <= kCachedRegisterQubits) {
            return;
        }
        cache_.emplace();
        cache_->depth = std::min(live - kCachedRegisterQubits, stages_.steps[0].size());
        cache_->root = std::make_unique<PrefixCache::Node>();
        cache_->root->state = initial_;
    }

    Branch run(const OutcomeSource &src) {
        const auto &steps = plan_.lowered.steps;
        Branch branch;
        auto &outcomes = branch.record.outcomes;
        outcomes.assign(steps.size(), 0);
        size_t start = 0;
        if (cache_) {
            PrefixCache::Node *node = cache_->root.get();
            for (; start < cache_->depth; start++) {
                size_t k = stages_.steps[0][start];
                const auto &step = steps[k];
                MeasurementDirection dir = direction_for(step, outcomes, zero_);
                if (!node->p0) {
                    node->p0 = outcome_probability(node->state->reg, node->state->label(step.site), dir);
                }
                Outcome s = src.resolve(*node->p0, k);
                outcomes[k] = s;
                auto &child = node->child[s];
                if (!child) {
                    child = std::make_unique<PrefixCache::Node>();
                    child->state = *node->state;
                    measure_site(*child->state, step.site, dir, OutcomeSource::exhaustive(s), 0);
                    if (node->child[0] && node->child[1]) {
                        node->state.reset();
                    }
                }
                node = child.get();
            }
            branch.cluster = *node->state;
        } else {
            branch.cluster = initial_;
        }
        ClusterState &cs = branch.cluster;
        for (size_t stage = 0; stage < stages_.steps.size(); stage++) {
            if (stage > 0) {
                add_sites(cs, stages_.sites[stage], preps_);
            }
            const auto &order = stages_.steps[stage];
            for (size_t i = stage == 0 ? start : 0; i < order.size(); i++) {
                size_t k = order[i];
                outcomes[k] = measure_site(cs, steps[k].site, direction_for(steps[k], outcomes, zero_), src, k);
            }
        }
        branch.record.frame = evaluate_frame(plan_.lowered.frame_script, outcomes, zero_);
        return branch;
    }

    void read_out(Branch &branch, const OutcomeSource &src) const {
        size_t n = plan_.lowered.steps.size();
        auto &record = branch.record;
        for (size_t w = 0; w < plan_.readouts.size(); w++) {
            ReadoutAdjustment adj = readout_adjust(record.frame, w, options_.readout);
            Outcome raw = measure_site(branch.cluster, plan_.readouts[w], adj.direction, src, n + w);
            record.readout.push_back(raw ^ adj.flip);
        }
    }

   private:
    const LayoutPlan &plan_;
    ExecutionOptions options_;
    PauliFrame zero_;
    Stages stages_;
    std::map<Site, QubitPrep> preps_;
    ClusterState initial_;
    std::optional<PrefixCache> cache_;
};

}  // namespace

ExecutionStrategy ExecutionStrategy::entangle_once() {
    return {};
}

ExecutionStrategy ExecutionStrategy::staged(std::vector<int> boundaries) {
    for (size_t k = 0; k < boundaries.size(); k++) {
        if (boundaries[k] <= 0 || (k > 0 && boundaries[k] <= boundaries[k - 1])) {
            throw std::invalid_argument("Stage boundaries must be positive and strictly increasing.");
        }
    }
    ExecutionStrategy s;
    s.kind = Kind::kStaged;
    s.boundaries = std::move(boundaries);
    return s;
}

std::string ExecutionStrategy::str() const {
    if (kind == Kind::kEntangleOnce) {
        return "entangle-once";
    }
    return "staged:" + join(boundaries);
}

std::vector<int> gadget_boundaries(const LayoutPlan &plan) {
    std::vector<int> result;
    for (int b = 1; b < plan.last_column; b++) {
        bool inside = false;
        for (const auto &p : plan.placements) {
            inside |= p.first_column < b && b < p.last_column;
        }
        if (!inside) {
            result.push_back(b);
        }
    }
    return result;
}

size_t peak_live_qubits(const LayoutPlan &plan, const ExecutionStrategy &strategy) {
    return peak_of(make_stages(plan, schedule(plan), strategy));
}

std::map<std::string, size_t> ExecutionResult::histogram() const {
    std::map<std::string, size_t> counts;
    for (const auto &shot : shots) {
        std::string key;
        for (Outcome b : shot.readout) {
            key += b ? '1' : '0';
        }
        counts[key]++;
    }
    return counts;
}

ExecutionResult execute(
    const LayoutPlan &plan,
    const ExecutionStrategy &strategy,
    const OutcomeSource &src,
    size_t shots,
    const ExecutionOptions &options) {
    Executor executor(plan, strategy, options);
    if (shots > 1) {
        executor.enable_cache();
    }
    ExecutionResult result;
    for (size_t shot = 0; shot < shots; shot++) {
        OutcomeSource shot_src =
            src.mode() == OutcomeSource::Mode::kSampled ? OutcomeSource::sampled(src.seed() + shot) : src;
        Branch branch = executor.run(shot_src);
        executor.read_out(branch, shot_src);
        result.shots.push_back(std::move(branch.record));
    }
    return result;
}

Branch run_branch(
    const LayoutPlan &plan,
    const ExecutionStrategy &strategy,
    const OutcomeSource &src,
    const ExecutionOptions &options) {
    Executor executor(plan, strategy, options);
    return executor.run(src);
}

StateRegister corrected_state(const LayoutPlan &plan, const Branch &branch) {
    GadgetReport report;
    report.outcomes = branch.record.outcomes;
    report.frame = branch.record.frame;
    for (const auto &s : plan.readouts) {
        report.output_labels.push_back(branch.cluster.label(s));
    }
    return corrected_output(branch.cluster, report);
}

std::map<std::string, double> oracle_distribution(const LogicalCircuit &circuit) {
    StateRegister out = apply_circuit_direct(circuit, input_state(circuit));
    std::vector<Label> order;
    for (size_t w = 0; w < circuit.wires; w++) {
        order.push_back((Label)w);
    }
    out = out.reordered(order);
    std::map<std::string, double> p;
    size_t n = circuit.wires;
    for (size_t i = 0; i < out.amplitudes.size(); i++) {
        double weight = std::norm(out.amplitudes[i]);
        if (weight < 1e-15) {
            continue;
        }
        std::string key;
        for (size_t w = 0; w < n; w++) {
            key += ((i >> (n - 1 - w)) & 1) ? '1' : '0';
        }
        p[key] += weight;
    }
    return p;
}

double total_variation(const std::map<std::string, size_t> &counts, const std::map<std::string, double> &p) {
    size_t total = 0;
    for (const auto &[_, c] : counts) {
        total += c;
    }
    if (total == 0) {
        throw std::invalid_argument("total_variation: empty histogram.");
    }
    std::set<std::string> keys;
    for (const auto &[k, _] : counts) {
        keys.insert(k);
    }
    for (const auto &[k, _] : p) {
        keys.insert(k);
    }
    double tv = 0;
    for (const auto &k : keys) {
        auto c = counts.find(k);
        auto q = p.find(k);
        double empirical = c == counts.end() ? 0 : (double)c->second / (double)total;
        double exact = q == p.end() ? 0 : q->second;
        tv += std::abs(empirical - exact);
    }
    return tv / 2;
}

}  // namespace oneway
