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

#include "qsynth4/lowering.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "qsynth4/netlist.h"
#include "qsynth4/projection.h"

namespace qsynth4 {

void GateSequence::push(Gate g) {
    if (auto *s = std::get_if<ShiftGate>(&g)) {
        push_shift(s->target, s->shift);
        return;
    }
    gates_.push_back(std::move(g));
}

void GateSequence::push_shift(WireId wire, const ShiftOp &shift) {
    if (shift.is_identity()) {
        return;
    }
    for (size_t i = gates_.size(); i-- > 0;) {
        std::vector<WireId> ws = wires_of(gates_[i]);
        if (std::find(ws.begin(), ws.end(), wire) == ws.end()) {
            continue;
        }
        if (auto *prev = std::get_if<ShiftGate>(&gates_[i])) {
            const ShiftOp &fused = shift_compose(shift, prev->shift);
            if (fused.is_identity()) {
                gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                prev->shift = fused;
            }
            return;
        }
        break;
    }
    gates_.push_back(ShiftGate{wire, shift});
}

void GateSequence::append(const std::vector<Gate> &gates) {
    for (const Gate &g : gates) {
        push(g);
    }
}

std::vector<Gate> inverse_sequence(const std::vector<Gate> &gates) {
    std::vector<Gate> out;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (const auto *m = std::get_if<MsGate>(&*it)) {
            out.push_back(MsGate{m->control, m->target, shift_inverse(m->shift)});
        } else if (const auto *s = std::get_if<ShiftGate>(&*it)) {
            out.push_back(ShiftGate{s->target, shift_inverse(s->shift)});
        } else {
            throw std::invalid_argument(std::string("cannot invert a ") + kind_name(kind_of(*it)) + " gate");
        }
    }
    return out;
}

namespace {

// Translation by v + 3 in GF(4) sends v to 3 and is its own inverse.
const ShiftOp &conjugator(Gf4 v) {
    return shift_translate(gf4_add(v, Gf4(3)));
}

void emit_controlled(GateSequence &seq, WireId control, Gf4 v, const ShiftOp &shift, WireId target) {
    if (shift.is_identity()) {
        return;
    }
    if (v == Gf4(3)) {
        seq.push(MsGate{control, target, shift});
        return;
    }
    seq.push_shift(control, conjugator(v));
    seq.push(MsGate{control, target, shift});
    seq.push_shift(control, conjugator(v));
}

const ShiftOp &transposition(int x, int y) {
    ShiftOp::Perm p{Gf4(0), Gf4(1), Gf4(2), Gf4(3)};
    std::swap(p[x], p[y]);
    return shift_from_perm(p);
}

int chain_scratch(size_t conditions) {
    if (conditions <= 1) {
        return 0;
    }
    if (conditions <= 3) {
        return 1;
    }
    return 1 + static_cast<int>((conditions - 3 + 1) / 2);
}

// Drives a chain of zero scratch wires so that the returned wire holds 3 exactly when
// every (wire, value) condition holds. Each scratch takes up to three conditions and
// climbs 0 -> 1 -> (2 ->) 3; later scratches take the previous one as a condition.
WireId accumulate_and(GateSequence &seq, const std::vector<std::pair<WireId, Gf4>> &conds,
                      std::span<const WireId> scratch) {
    size_t pos = 0;
    WireId prev = -1;
    for (size_t s = 0; pos < conds.size(); s++) {
        WireId w = scratch[s];
        std::vector<std::pair<WireId, Gf4>> group;
        if (prev >= 0) {
            group.emplace_back(prev, Gf4(3));
        }
        while (group.size() < 3 && pos < conds.size()) {
            group.push_back(conds[pos++]);
        }
        std::vector<const ShiftOp *> steps;
        if (group.size() == 2) {
            steps = {&shift_translate(Gf4(1)), &transposition(1, 3)};
        } else {
            steps = {&shift_translate(Gf4(1)), &transposition(1, 2), &transposition(2, 3)};
        }
        for (size_t i = 0; i < group.size(); i++) {
            emit_controlled(seq, group[i].first, group[i].second, *steps[i], w);
        }
        prev = w;
    }
    return prev;
}

int scratch_needed(const Gate &g) {
    if (const auto *q = std::get_if<GqgGate>(&g)) {
        return chain_scratch(q->controls.size());
    }
    if (std::holds_alternative<C2csGate>(g)) {
        return 1;
    }
    return 0;
}

void realize_single_gqg(GateSequence &seq, WireId control, WireId target, const std::array<ShiftOp, 4> &shifts) {
    // Value 3 needs no conjugation, so it goes first; the remaining conjugators fuse
    // pairwise into one shift between consecutive M-S gates.
    emit_controlled(seq, control, Gf4(3), shifts[3], target);
    for (int v = 0; v < 3; v++) {
        emit_controlled(seq, control, Gf4(v), shifts[v], target);
    }
}

bool realize(const Gate &g, GateSequence &seq, std::span<const WireId> scratch) {
    if (const auto *q = std::get_if<GqgGate>(&g)) {
        if (q->controls.size() == 1) {
            realize_single_gqg(seq, q->controls[0], q->target, q->shifts);
            return true;
        }
        for (int v = 0; v < 4; v++) {
            if (q->shifts[v].is_identity()) {
                continue;
            }
            std::vector<std::pair<WireId, Gf4>> conds;
            for (WireId c : q->controls) {
                conds.emplace_back(c, Gf4(v));
            }
            GateSequence compute;
            WireId flag = accumulate_and(compute, conds, scratch);
            seq.append(compute.gates());
            seq.push(MsGate{flag, q->target, q->shifts[v]});
            seq.append(inverse_sequence(compute.gates()));
        }
        return true;
    }
    if (const auto *x = std::get_if<C2csGate>(&g)) {
        // Scratch reaches 1 on a == lo, 2 on a == hi; the matching b value then lifts
        // it to 3. No other combination reaches 3.
        WireId w = scratch[0];
        GateSequence compute;
        emit_controlled(compute, x->a, x->lo, shift_translate(Gf4(1)), w);
        emit_controlled(compute, x->a, x->hi, shift_translate(Gf4(2)), w);
        emit_controlled(compute, x->b, x->hi, transposition(1, 3), w);
        emit_controlled(compute, x->b, x->lo, transposition(2, 3), w);
        seq.append(compute.gates());
        seq.push(MsGate{w, x->target, shift_mod4_increment(x->amount)});
        seq.append(inverse_sequence(compute.gates()));
        return true;
    }
    if (const auto *x = std::get_if<FeynmanGate>(&g)) {
        std::array<ShiftOp, 4> shifts;
        for (Gf4 v : kAllDigits) {
            shifts[v.value()] = shift_translate(v);
        }
        realize_single_gqg(seq, x->a, x->b, shifts);
        return true;
    }
    if (const auto *x = std::get_if<AddGate>(&g)) {
        std::array<ShiftOp, 4> shifts;
        for (Gf4 v : kAllDigits) {
            shifts[v.value()] = shift_mod4_increment(v);
        }
        realize_single_gqg(seq, x->a, x->b, shifts);
        return true;
    }
    return false;
}

template <class F>
Gate remap(const Gate &g, F &&f) {
    Gate out = g;
    std::visit(
        [&](auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MsGate>) {
                x.control = f(x.control);
                x.target = f(x.target);
            } else if constexpr (std::is_same_v<T, ShiftGate>) {
                x.target = f(x.target);
            } else if constexpr (std::is_same_v<T, FeynmanGate> || std::is_same_v<T, AddGate>) {
                x.a = f(x.a);
                x.b = f(x.b);
            } else if constexpr (std::is_same_v<T, ToffoliGate>) {
                x.a = f(x.a);
                x.b = f(x.b);
                x.c = f(x.c);
            } else if constexpr (std::is_same_v<T, MaxGate> || std::is_same_v<T, MinGate>) {
                for (WireId &w : x.inputs) {
                    w = f(w);
                }
                x.target = f(x.target);
            } else if constexpr (std::is_same_v<T, GqgGate>) {
                for (WireId &w : x.controls) {
                    w = f(w);
                }
                x.target = f(x.target);
            } else if constexpr (std::is_same_v<T, C2csGate>) {
                x.a = f(x.a);
                x.b = f(x.b);
                x.target = f(x.target);
            }
        },
        out);
    return out;
}

std::string default_name(const Gate &g) {
    std::string name = kind_name(kind_of(g));
    if (const auto *q = std::get_if<GqgGate>(&g)) {
        name += std::to_string(q->controls.size());
        for (const ShiftOp &s : q->shifts) {
            name += "_" + s.symbol();
        }
    } else if (const auto *c = std::get_if<C2csGate>(&g)) {
        name += std::string("_") + to_char(c->lo) + to_char(c->hi) + "_+" + to_char(c->amount);
    }
    return name;
}

}  // namespace

std::vector<Gate> control_conjugation_gadget(Gf4 v, const ShiftOp &shift, WireId control, WireId target) {
    std::vector<Gate> out;
    if (v == Gf4(3)) {
        out.push_back(MsGate{control, target, shift});
        return out;
    }
    out.push_back(ShiftGate{control, conjugator(v)});
    out.push_back(MsGate{control, target, shift});
    out.push_back(ShiftGate{control, shift_inverse(conjugator(v))});
    return out;
}

int Gadget::actual_cost() const {
    return circuit_cost(replacement, CostModel::standard());
}

int Gadget::scratch_wires() const {
    return replacement.num_wires() - static_cast<int>(wires_of(pattern).size());
}

std::optional<Gadget> make_gadget(const Gate &g, std::string name) {
    std::vector<WireId> ws = wires_of(g);
    std::map<WireId, WireId> rename;
    for (size_t i = 0; i < ws.size(); i++) {
        rename[ws[i]] = static_cast<WireId>(i);
    }
    Gate pattern = remap(g, [&](WireId w) { return rename.at(w); });
    int k = static_cast<int>(ws.size());
    Circuit rep;
    for (int i = 0; i < k; i++) {
        rep.add_input();
    }
    int extra = scratch_needed(pattern);
    std::vector<WireId> scratch;
    for (int i = 0; i < extra; i++) {
        scratch.push_back(rep.add_ancilla(Gf4(0)));
    }
    GateSequence seq;
    if (!realize(pattern, seq, scratch)) {
        return std::nullopt;
    }
    for (const Gate &x : seq.gates()) {
        rep.append_gate(x);
    }
    Gadget gadget;
    gadget.name = name.empty() ? default_name(pattern) : std::move(name);
    gadget.declared_cost = CostModel::standard().cost(kind_of(pattern));
    gadget.pattern = std::move(pattern);
    gadget.replacement = std::move(rep);
    return gadget;
}

Equivalence check_gadget(const Gadget &gadget) {
    int k = static_cast<int>(wires_of(gadget.pattern).size());
    int w = gadget.replacement.num_wires();
    Equivalence result;
    size_t states = size_t{1} << (2 * k);
    BasisState macro(k);
    BasisState full(w);
    for (size_t idx = 0; idx < states; idx++) {
        size_t rest = idx;
        for (int i = k - 1; i >= 0; i--) {
            macro[i] = Gf4(static_cast<int>(rest & 3));
            rest >>= 2;
        }
        std::fill(full.begin(), full.end(), Gf4(0));
        std::copy(macro.begin(), macro.end(), full.begin());
        apply_gate(macro, gadget.pattern);
        for (const Gate &g : gadget.replacement.gates()) {
            apply_gate(full, g);
        }
        result.vectors_checked++;
        bool ok = std::equal(macro.begin(), macro.end(), full.begin()) &&
                  std::all_of(full.begin() + k, full.end(), [](Gf4 d) { return d == Gf4(0); });
        if (!ok) {
            result.equal = false;
            std::vector<Gf4> in(k);
            rest = idx;
            for (int i = k - 1; i >= 0; i--) {
                in[i] = Gf4(static_cast<int>(rest & 3));
                rest >>= 2;
            }
            result.counterexample = in;
            return result;
        }
    }
    return result;
}

std::vector<Gadget> gadget_library() {
    std::vector<Gadget> lib;
    auto add = [&](const Gate &g, std::string name) { lib.push_back(*make_gadget(g, std::move(name))); };

    for (Gf4 v : kAllDigits) {
        add(make_gqg({0}, 1, v, shift_translate(Gf4(1))), std::string("conj_v") + to_char(v));
    }
    for (Family fam : {Family::L, Family::J, Family::P}) {
        for (Gf4 i : kAllDigits) {
            add(make_gqg({0}, 1, i, shift_translate(fire_value(fam))),
                std::string("gqg_") + family_char(fam) + to_char(i));
        }
    }
    GqgGate general;
    general.controls = {0};
    general.target = 1;
    general.shifts = {shift_by_symbol("x0123"), shift_by_symbol("x23"), shift_by_symbol("x+2"),
                      shift_by_symbol("x132")};
    add(general, "gqg_general");
    add(make_gqg({0, 1}, 2, Gf4(1), shift_translate(Gf4(1))), "gqg2_L1");
    add(make_gqg({0, 1, 2}, 3, Gf4(2), shift_translate(Gf4(2))), "gqg3_J2");
    for (auto [lo, hi] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        for (int k = 1; k <= 3; k++) {
            add(make_c2cs(0, 1, Gf4(lo), Gf4(hi), Gf4(k), 2),
                "c2cs_" + std::to_string(lo) + std::to_string(hi) + "_+" + std::to_string(k));
        }
    }
    add(AddGate{0, 1}, "add");
    add(FeynmanGate{0, 1}, "feynman");
    return lib;
}

std::string serialize_library(const std::vector<Gadget> &gadgets) {
    std::string out;
    for (const Gadget &g : gadgets) {
        out += ".gadget " + g.name + "\n";
        out += ".pattern " + format_gate(g.pattern) + "\n";
        out += ".declared " + std::to_string(g.declared_cost) + "\n";
        out += serialize(g.replacement);
    }
    return out;
}

std::vector<Gadget> parse_library(std::string_view text) {
    std::vector<Gadget> out;
    struct Section {
        std::string name;
        int line;
        std::optional<Gate> pattern;
        std::optional<int> declared;
        std::string body;
        int body_line = 0;
    };
    std::vector<Section> sections;
    int line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        std::string_view trimmed = line.substr(std::min(line.find_first_not_of(" \t"), line.size()));
        auto starts = [&](std::string_view p) {
            return trimmed.starts_with(p) && (trimmed.size() == p.size() || trimmed[p.size()] == ' ');
        };
        if (starts(".gadget")) {
            std::string name(trimmed.substr(7));
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t\r") + 1);
            if (name.empty()) {
                throw ParseError(line_no, 1, "'.gadget' needs a name");
            }
            sections.push_back(Section{name, line_no, std::nullopt, std::nullopt, {}, 0});
            continue;
        }
        if (sections.empty()) {
            if (trimmed.empty() || trimmed[0] == '#') {
                continue;
            }
            throw ParseError(line_no, 1, "content before the first '.gadget'");
        }
        Section &s = sections.back();
        if (starts(".pattern")) {
            s.pattern = parse_gate(trimmed.substr(8), -1, line_no);
        } else if (starts(".declared")) {
            std::string_view num = trimmed.substr(9);
            num.remove_prefix(std::min(num.find_first_not_of(" \t"), num.size()));
            while (!num.empty() && (num.back() == ' ' || num.back() == '\r')) {
                num.remove_suffix(1);
            }
            int v = 0;
            auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
            if (ec != std::errc() || p != num.data() + num.size()) {
                throw ParseError(line_no, 1, "'.declared' needs an integer");
            }
            s.declared = v;
        } else {
            if (s.body.empty()) {
                s.body_line = line_no;
            }
            s.body += std::string(line) + "\n";
        }
    }
    for (Section &s : sections) {
        if (!s.pattern) {
            throw ParseError(s.line, 0, "gadget '" + s.name + "' has no '.pattern'");
        }
        Gadget g;
        g.name = s.name;
        g.pattern = *s.pattern;
        g.declared_cost = s.declared.value_or(CostModel::standard().cost(kind_of(g.pattern)));
        g.replacement = parse_netlist(s.body, s.body_line == 0 ? s.line : s.body_line);
        if (g.replacement.num_wires() < static_cast<int>(wires_of(g.pattern).size())) {
            throw ParseError(s.line, 0, "gadget '" + s.name + "' has fewer wires than its pattern");
        }
        out.push_back(std::move(g));
    }
    return out;
}

Circuit decompose(const Circuit &c, const DecomposeOptions &options) {
    Circuit out;
    for (const Wire &w : c.wires()) {
        out.add_wire(w.role, w.init);
    }
    int extra = 0;
    for (const Gate &g : c.gates()) {
        GateKind k = kind_of(g);
        if (k == GateKind::MS || k == GateKind::Shift || options.keep.count(k)) {
            continue;
        }
        if (k == GateKind::Toffoli || k == GateKind::Max || k == GateKind::Min) {
            throw std::invalid_argument(std::string("no M-S gadget for ") + kind_name(k) + " gates");
        }
        extra = std::max(extra, scratch_needed(g));
    }
    std::vector<WireId> scratch;
    for (int i = 0; i < extra; i++) {
        scratch.push_back(out.add_ancilla(Gf4(0)));
    }
    for (const Gate &g : c.gates()) {
        GateKind k = kind_of(g);
        if (k == GateKind::MS || k == GateKind::Shift || options.keep.count(k)) {
            out.append_gate(g);
            continue;
        }
        GateSequence seq;
        realize(g, seq, scratch);
        for (const Gate &x : seq.gates()) {
            out.append_gate(x);
        }
    }
    for (const Output &o : c.outputs()) {
        out.add_output(o.wire, o.name);
    }
    return out;
}

}  // namespace qsynth4
