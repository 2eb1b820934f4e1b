// Copyright 2026 The qsynth4 Authors
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

#include "qsynth4/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace qsynth4 {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

GateKind kind_of(const Gate &g) {
    return static_cast<GateKind>(g.index());
}

const char *kind_name(GateKind k) {
    switch (k) {
        case GateKind::MS:
            return "ms";
        case GateKind::Shift:
            return "shift";
        case GateKind::Feynman:
            return "feynman";
        case GateKind::Toffoli:
            return "toffoli";
        case GateKind::Max:
            return "max";
        case GateKind::Min:
            return "min";
        case GateKind::GQG:
            return "gqg";
        case GateKind::C2CS:
            return "c2cs";
        case GateKind::Add:
            return "add";
    }
    return "?";
}

std::vector<WireId> wires_of(const Gate &g) {
    return std::visit(
        Overloaded{
            [](const MsGate &x) { return std::vector<WireId>{x.control, x.target}; },
            [](const ShiftGate &x) { return std::vector<WireId>{x.target}; },
            [](const FeynmanGate &x) { return std::vector<WireId>{x.a, x.b}; },
            [](const ToffoliGate &x) { return std::vector<WireId>{x.a, x.b, x.c}; },
            [](const MaxGate &x) {
                auto w = x.inputs;
                w.push_back(x.target);
                return w;
            },
            [](const MinGate &x) {
                auto w = x.inputs;
                w.push_back(x.target);
                return w;
            },
            [](const GqgGate &x) {
                auto w = x.controls;
                w.push_back(x.target);
                return w;
            },
            [](const C2csGate &x) { return std::vector<WireId>{x.a, x.b, x.target}; },
            [](const AddGate &x) { return std::vector<WireId>{x.a, x.b}; },
        },
        g);
}

WireId target_of(const Gate &g) {
    return wires_of(g).back();
}

C2csGate make_c2cs(WireId a, WireId b, Gf4 i, Gf4 j, Gf4 amount, WireId target) {
    C2csGate g;
    g.a = a;
    g.b = b;
    g.target = target;
    g.lo = std::min(i, j);
    g.hi = std::max(i, j);
    g.amount = amount;
    return g;
}

GqgGate make_gqg(std::vector<WireId> controls, WireId target, Gf4 value, const ShiftOp &shift) {
    GqgGate g;
    g.controls = std::move(controls);
    g.target = target;
    g.shifts.fill(shift_identity());
    g.shifts[value.value()] = shift;
    return g;
}

void validate_gate(const Gate &g, int num_wires) {
    std::vector<WireId> w = wires_of(g);
    for (WireId id : w) {
        if (id < 0 || id >= num_wires) {
            throw std::invalid_argument(std::string(kind_name(kind_of(g))) + " gate references unknown wire q" +
                                        std::to_string(id));
        }
    }
    std::vector<WireId> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument(std::string(kind_name(kind_of(g))) + " gate uses a wire more than once");
    }
    if (const auto *c = std::get_if<C2csGate>(&g)) {
        if (c->lo == c->hi || c->lo == Gf4(0) || c->hi == Gf4(0) || c->lo > c->hi) {
            throw std::invalid_argument("c2cs pair must be two distinct values from {1,2,3}");
        }
        if (c->amount == Gf4(0)) {
            throw std::invalid_argument("c2cs amount must be 1, 2 or 3");
        }
    }
    if (const auto *m = std::get_if<MaxGate>(&g); m && m->inputs.empty()) {
        throw std::invalid_argument("max gate needs at least one input");
    }
    if (const auto *m = std::get_if<MinGate>(&g); m && m->inputs.empty()) {
        throw std::invalid_argument("min gate needs at least one input");
    }
    if (const auto *q = std::get_if<GqgGate>(&g); q && q->controls.empty()) {
        throw std::invalid_argument("gqg gate needs at least one control");
    }
}

WireId Circuit::add_wire(WireRole role, std::optional<Gf4> init) {
    if (role == WireRole::Input && init.has_value()) {
        throw std::invalid_argument("primary-input wires carry no init value");
    }
    if (role != WireRole::Input && !init.has_value()) {
        init = Gf4(0);
    }
    WireId id = num_wires();
    wires_.push_back(Wire{id, role, init});
    return id;
}

WireId Circuit::add_input() {
    return add_wire(WireRole::Input, std::nullopt);
}

WireId Circuit::add_ancilla(Gf4 init) {
    return add_wire(WireRole::Ancilla, init);
}

WireId Circuit::add_constant(Gf4 value) {
    return add_wire(WireRole::Constant, value);
}

void Circuit::append_gate(Gate g) {
    validate_gate(g, num_wires());
    gates_.push_back(std::move(g));
}

void Circuit::add_output(WireId wire, std::string name) {
    if (wire < 0 || wire >= num_wires()) {
        throw std::invalid_argument("output '" + name + "' references unknown wire q" + std::to_string(wire));
    }
    if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos) {
        throw std::invalid_argument("output name must be a non-empty token");
    }
    outputs_.push_back(Output{wire, std::move(name)});
}

std::vector<WireId> Circuit::input_wires() const {
    std::vector<WireId> ids;
    for (const Wire &w : wires_) {
        if (w.role == WireRole::Input) {
            ids.push_back(w.id);
        }
    }
    return ids;
}

CostModel::CostModel(std::map<GateKind, int> costs) : costs_(std::move(costs)) {
    for (const auto &[kind, cost] : costs_) {
        if (cost <= 0) {
            throw std::invalid_argument(std::string("cost for ") + kind_name(kind) + " must be positive");
        }
    }
}

CostModel CostModel::standard() {
    return CostModel({
        {GateKind::MS, 1},
        {GateKind::Shift, 1},
        {GateKind::Feynman, 5},
        {GateKind::Toffoli, 17},
        {GateKind::Max, 6},
        {GateKind::Min, 6},
        {GateKind::GQG, 8},
        {GateKind::C2CS, 8},
        {GateKind::Add, 8},
    });
}

int CostModel::cost(GateKind k) const {
    auto it = costs_.find(k);
    if (it == costs_.end()) {
        throw std::out_of_range(std::string("cost model has no entry for ") + kind_name(k));
    }
    return it->second;
}

int circuit_cost(const Circuit &c, const CostModel &model) {
    int total = 0;
    for (const Gate &g : c.gates()) {
        total += model.cost(kind_of(g));
    }
    return total;
}

int circuit_levels(const Circuit &c) {
    std::vector<int> busy_until(c.num_wires(), 0);
    int depth = 0;
    for (const Gate &g : c.gates()) {
        std::vector<WireId> w = wires_of(g);
        int level = 0;
        for (WireId id : w) {
            level = std::max(level, busy_until[id]);
        }
        level += 1;
        for (WireId id : w) {
            busy_until[id] = level;
        }
        depth = std::max(depth, level);
    }
    return depth;
}

int ancilla_count(const Circuit &c) {
    return static_cast<int>(
        std::count_if(c.wires().begin(), c.wires().end(), [](const Wire &w) { return w.role == WireRole::Ancilla; }));
}

std::map<GateKind, int> gate_counts(const Circuit &c) {
    std::map<GateKind, int> counts;
    for (const Gate &g : c.gates()) {
        counts[kind_of(g)]++;
    }
    return counts;
}

}  // namespace qsynth4
