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

#include "qsynth4/simulator.h"

#include <random>
#include <stdexcept>

namespace qsynth4 {

void apply_gate(BasisState &s, const Gate &g) {
    if (const auto *x = std::get_if<MsGate>(&g)) {
        if (s[x->control] == Gf4(3)) {
            s[x->target] = x->shift(s[x->target]);
        }
    } else if (const auto *x = std::get_if<ShiftGate>(&g)) {
        s[x->target] = x->shift(s[x->target]);
    } else if (const auto *x = std::get_if<FeynmanGate>(&g)) {
        s[x->b] = gf4_add(s[x->a], s[x->b]);
    } else if (const auto *x = std::get_if<ToffoliGate>(&g)) {
        s[x->c] = gf4_add(gf4_mul(s[x->a], s[x->b]), s[x->c]);
    } else if (const auto *x = std::get_if<MaxGate>(&g)) {
        Gf4 v = s[x->target];
        for (WireId w : x->inputs) {
            v = qmax(v, s[w]);
        }
        s[x->target] = v;
    } else if (const auto *x = std::get_if<MinGate>(&g)) {
        Gf4 v = s[x->target];
        for (WireId w : x->inputs) {
            v = qmin(v, s[w]);
        }
        s[x->target] = v;
    } else if (const auto *x = std::get_if<GqgGate>(&g)) {
        Gf4 v = s[x->controls[0]];
        for (WireId w : x->controls) {
            if (s[w] != v) {
                return;
            }
        }
        s[x->target] = x->shifts[v.value()](s[x->target]);
    } else if (const auto *x = std::get_if<C2csGate>(&g)) {
        Gf4 a = s[x->a];
        Gf4 b = s[x->b];
        if ((a == x->lo && b == x->hi) || (a == x->hi && b == x->lo)) {
            s[x->target] = mod4_add(s[x->target], x->amount);
        }
    } else if (const auto *x = std::get_if<AddGate>(&g)) {
        s[x->b] = mod4_add(s[x->a], s[x->b]);
    }
}

BasisState apply_gate(const BasisState &state, const Gate &g) {
    BasisState s = state;
    apply_gate(s, g);
    return s;
}

namespace {

// Reusable evaluation state for sweeps.
class Runner {
   public:
    explicit Runner(const Circuit &c) : c_(c), inputs_(c.input_wires()) {
        initial_.resize(c.num_wires());
        for (const Wire &w : c.wires()) {
            initial_[w.id] = w.init.value_or(Gf4(0));
        }
    }

    size_t num_inputs() const { return inputs_.size(); }

    const BasisState &run(std::span<const Gf4> in) {
        if (in.size() != inputs_.size()) {
            throw std::invalid_argument("circuit has " + std::to_string(inputs_.size()) + " inputs, got " +
                                        std::to_string(in.size()));
        }
        state_ = initial_;
        for (size_t i = 0; i < in.size(); i++) {
            state_[inputs_[i]] = in[i];
        }
        for (const Gate &g : c_.gates()) {
            apply_gate(state_, g);
        }
        return state_;
    }

   private:
    const Circuit &c_;
    std::vector<WireId> inputs_;
    BasisState initial_;
    BasisState state_;
};

void check_sweepable(const Circuit &c) {
    size_t m = c.input_wires().size();
    if (m > static_cast<size_t>(kMaxTableInputs)) {
        throw std::invalid_argument("exhaustive simulation is limited to " + std::to_string(kMaxTableInputs) +
                                    " inputs; circuit has " + std::to_string(m));
    }
}

void check_arity(const Circuit &c1, const Circuit &c2) {
    if (c1.input_wires().size() != c2.input_wires().size() || c1.outputs().size() != c2.outputs().size()) {
        throw std::invalid_argument("arity mismatch: " + std::to_string(c1.input_wires().size()) + " in / " +
                                    std::to_string(c1.outputs().size()) + " out vs " +
                                    std::to_string(c2.input_wires().size()) + " in / " +
                                    std::to_string(c2.outputs().size()) + " out");
    }
}

}  // namespace

BasisState run(const Circuit &c, std::span<const Gf4> inputs) {
    Runner r(c);
    return r.run(inputs);
}

QuaternaryFunction truth_table(const Circuit &c) {
    check_sweepable(c);
    Runner r(c);
    QuaternaryFunction f(static_cast<int>(r.num_inputs()), static_cast<int>(c.outputs().size()));
    for (size_t row = 0; row < f.num_rows(); row++) {
        std::vector<Gf4> in = f.inputs_of(row);
        const BasisState &s = r.run(in);
        for (size_t k = 0; k < c.outputs().size(); k++) {
            f.set_output(row, static_cast<int>(k), s[c.outputs()[k].wire]);
        }
    }
    return f;
}

Equivalence equivalent(const Circuit &c1, const Circuit &c2) {
    check_arity(c1, c2);
    check_sweepable(c1);
    Runner r1(c1);
    Runner r2(c2);
    Equivalence result;
    size_t rows = size_t{1} << (2 * r1.num_inputs());
    QuaternaryFunction shape(static_cast<int>(r1.num_inputs()), 0);
    for (size_t row = 0; row < rows; row++) {
        std::vector<Gf4> in = shape.inputs_of(row);
        const BasisState &s1 = r1.run(in);
        const BasisState &s2 = r2.run(in);
        result.vectors_checked++;
        for (size_t k = 0; k < c1.outputs().size(); k++) {
            if (s1[c1.outputs()[k].wire] != s2[c2.outputs()[k].wire]) {
                result.equal = false;
                result.counterexample = in;
                return result;
            }
        }
    }
    return result;
}

Equivalence equivalent(const Circuit &c, const QuaternaryFunction &f) {
    if (c.input_wires().size() != static_cast<size_t>(f.num_inputs()) ||
        c.outputs().size() != static_cast<size_t>(f.num_outputs())) {
        throw std::invalid_argument("arity mismatch: circuit has " + std::to_string(c.input_wires().size()) +
                                    " in / " + std::to_string(c.outputs().size()) + " out, table has " +
                                    std::to_string(f.num_inputs()) + " in / " + std::to_string(f.num_outputs()) +
                                    " out");
    }
    Runner r(c);
    Equivalence result;
    for (size_t row = 0; row < f.num_rows(); row++) {
        std::vector<Gf4> in = f.inputs_of(row);
        const BasisState &s = r.run(in);
        result.vectors_checked++;
        for (int k = 0; k < f.num_outputs(); k++) {
            if (s[c.outputs()[k].wire] != f.output(row, k)) {
                result.equal = false;
                result.counterexample = in;
                return result;
            }
        }
    }
    return result;
}

Equivalence equivalent_sampled(const Circuit &c1, const Circuit &c2, uint64_t samples, uint64_t seed) {
    check_arity(c1, c2);
    Runner r1(c1);
    Runner r2(c2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, 3);
    Equivalence result;
    result.exhaustive = false;
    std::vector<Gf4> in(r1.num_inputs());
    for (uint64_t n = 0; n < samples; n++) {
        for (Gf4 &d : in) {
            d = Gf4(digit(rng));
        }
        const BasisState &s1 = r1.run(in);
        const BasisState &s2 = r2.run(in);
        result.vectors_checked++;
        for (size_t k = 0; k < c1.outputs().size(); k++) {
            if (s1[c1.outputs()[k].wire] != s2[c2.outputs()[k].wire]) {
                result.equal = false;
                result.counterexample = in;
                return result;
            }
        }
    }
    return result;
}

std::vector<std::string> lint_max_min(const Circuit &c, bool require_fresh) {
    std::vector<std::string> issues;
    std::vector<bool> written(c.num_wires(), false);
    for (size_t i = 0; i < c.gates().size(); i++) {
        const Gate &g = c.gates()[i];
        GateKind k = kind_of(g);
        WireId t = target_of(g);
        if (k == GateKind::Max || k == GateKind::Min) {
            const Wire &w = c.wires()[t];
            std::string where = "gate " + std::to_string(i) + " (" + kind_name(k) + " -> q" + std::to_string(t) + ")";
            if (w.role != WireRole::Ancilla) {
                issues.push_back(where + ": target is not an ancilla");
            } else if (require_fresh) {
                Gf4 want = k == GateKind::Max ? Gf4(0) : Gf4(3);
                if (written[t]) {
                    issues.push_back(where + ": target was already written");
                } else if (*w.init != want) {
                    issues.push_back(where + ": fresh target must start at " + std::string(1, to_char(want)));
                }
            }
        }
        written[t] = true;
    }
    return issues;
}

}  // namespace qsynth4
