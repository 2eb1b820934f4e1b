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

#include "qsynth4/synth.h"

#include <algorithm>
#include <map>
#include <optional>

#include "qsynth4/simulator.h"

namespace qsynth4 {

std::vector<Minterm> extract_minterms(const QuaternaryFunction &f, int output) {
    std::vector<Minterm> out;
    for (size_t row = 0; row < f.num_rows(); row++) {
        Gf4 level = f.output(row, output);
        if (level == Gf4(0)) {
            continue;
        }
        Minterm t;
        t.level = level;
        std::vector<Gf4> in = f.inputs_of(row);
        for (size_t v = 0; v < in.size(); v++) {
            t.literals.emplace_back(static_cast<int>(v), in[v]);
        }
        out.push_back(std::move(t));
    }
    return out;
}

Expr build_expression(std::span<const Minterm> minterms, int num_vars) {
    Expr e;
    e.num_vars = num_vars;
    for (const Minterm &t : minterms) {
        Family fam = family_for_level(t.level);
        Product p;
        for (const auto &[v, value] : t.literals) {
            p.factors.emplace_back(make_literal(fam, value, {v}));
        }
        if (p.factors.empty()) {
            p.factors.emplace_back(Constant{t.level});
        }
        e.terms.push_back(std::move(p));
    }
    return e;
}

namespace {

bool is_plain(const Factor &f) {
    const auto *l = std::get_if<Literal>(&f);
    return l && !l->proj.complemented;
}

bool is_plain_single(const Factor &f) {
    return is_plain(f) && std::get<Literal>(f).vars.size() == 1;
}

bool contains_all(const std::vector<int> &super, const std::vector<int> &sub) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// Whether two factors of one product can never both be nonzero.
bool contradicts(const Factor &x, const Factor &y) {
    const auto *lx = std::get_if<Literal>(&x);
    const auto *ly = std::get_if<Literal>(&y);
    if (lx && ly) {
        const Projection &px = lx->proj;
        const Projection &py = ly->proj;
        if (!px.complemented && !py.complemented) {
            // Same variable pinned to two different values.
            if (px.index == py.index) {
                return false;
            }
            for (int v : lx->vars) {
                if (std::binary_search(ly->vars.begin(), ly->vars.end(), v)) {
                    return true;
                }
            }
            return false;
        }
        if (px.complemented == py.complemented) {
            return false;
        }
        // Rule 5: F_i(S) * F'_i(T) with T inside S.
        const Literal &plain = px.complemented ? *ly : *lx;
        const Literal &comp = px.complemented ? *lx : *ly;
        return plain.proj.index == comp.proj.index && contains_all(plain.vars, comp.vars);
    }
    const auto *pm = std::get_if<PairMerge>(&x);
    const Literal *lit = ly;
    if (!pm) {
        pm = std::get_if<PairMerge>(&y);
        lit = lx;
    }
    if (pm && lit && !lit->proj.complemented) {
        Gf4 i = lit->proj.index;
        bool touches = std::binary_search(lit->vars.begin(), lit->vars.end(), pm->a) ||
                       std::binary_search(lit->vars.begin(), lit->vars.end(), pm->b);
        return touches && i != pm->lo && i != pm->hi;
    }
    return false;
}

Gf4 product_max(const Product &p) {
    Gf4 v(3);
    for (const Factor &f : p.factors) {
        v = qmin(v, max_value(f));
    }
    return v;
}

std::optional<Gf4> as_constant(const Product &p) {
    if (p.factors.empty()) {
        return Gf4(3);
    }
    if (p.factors.size() == 1 && std::holds_alternative<Constant>(p.factors[0])) {
        return std::get<Constant>(p.factors[0]).value;
    }
    return std::nullopt;
}

class Simplifier {
   public:
    Simplifier(const SimplifyOptions &options, SimplifyStats &stats) : options_(options), stats_(stats) {}

    // Rules 1, 2, 5, 8 inside one product. Returns false if the product is identically 0.
    bool normalize_product(Product &p) {
        std::sort(p.factors.begin(), p.factors.end());
        size_t before = p.factors.size();
        p.factors.erase(std::unique(p.factors.begin(), p.factors.end()), p.factors.end());
        stats_.idempotent += static_cast<int>(before - p.factors.size());

        std::optional<Gf4> constant;
        std::vector<Factor> rest;
        for (Factor &f : p.factors) {
            if (const auto *c = std::get_if<Constant>(&f)) {
                if (constant) {
                    stats_.absorb_constants++;
                }
                constant = constant ? qmin(*constant, c->value) : c->value;
            } else {
                rest.push_back(std::move(f));
            }
        }
        if (constant && *constant == Gf4(0)) {
            stats_.absorb_constants++;
            return false;
        }
        for (size_t i = 0; i < rest.size(); i++) {
            for (size_t j = i + 1; j < rest.size(); j++) {
                if (contradicts(rest[i], rest[j])) {
                    stats_.complement++;
                    return false;
                }
            }
        }
        if (constant && !rest.empty()) {
            Gf4 ceiling(0);
            for (const Factor &f : rest) {
                ceiling = qmax(ceiling, max_value(f));
            }
            if (*constant >= ceiling) {
                stats_.absorb_constants++;
                constant.reset();
            }
        }
        if (constant) {
            rest.emplace_back(Constant{*constant});
        }
        std::sort(rest.begin(), rest.end());
        p.factors = std::move(rest);
        return true;
    }

    // Rules 3, 4, 6 and duplicate terms.
    void normalize_sum(std::vector<Product> &terms) {
        std::vector<Product> kept;
        for (Product &p : terms) {
            if (normalize_product(p)) {
                kept.push_back(std::move(p));
            } else {
                stats_.absorb_constants++;
            }
        }
        std::sort(kept.begin(), kept.end());
        size_t before = kept.size();
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        stats_.idempotent += static_cast<int>(before - kept.size());

        // Rule 6: F_i(S) + F'_i(S) = fire value.
        std::vector<bool> gone(kept.size(), false);
        std::vector<Product> added;
        for (size_t i = 0; i < kept.size(); i++) {
            if (gone[i] || kept[i].factors.size() != 1 || !is_plain(kept[i].factors[0])) {
                continue;
            }
            const Literal &l = std::get<Literal>(kept[i].factors[0]);
            Literal comp = l;
            comp.proj.complemented = true;
            for (size_t j = 0; j < kept.size(); j++) {
                if (!gone[j] && kept[j].factors.size() == 1 && kept[j].factors[0] == Factor(comp)) {
                    gone[i] = gone[j] = true;
                    added.push_back(Product{{Constant{fire_value(l.proj.family)}}});
                    stats_.complement++;
                    break;
                }
            }
        }
        std::vector<Product> next;
        for (size_t i = 0; i < kept.size(); i++) {
            if (!gone[i]) {
                next.push_back(std::move(kept[i]));
            }
        }
        for (Product &p : added) {
            next.push_back(std::move(p));
        }

        // Rules 3 and 4: fold constant terms; drop terms they dominate.
        std::optional<Gf4> constant;
        std::vector<Product> rest;
        for (Product &p : next) {
            if (auto c = as_constant(p)) {
                if (constant) {
                    stats_.absorb_constants++;
                }
                constant = constant ? qmax(*constant, *c) : *c;
            } else {
                rest.push_back(std::move(p));
            }
        }
        if (constant && *constant == Gf4(0)) {
            stats_.absorb_constants++;
            constant.reset();
        }
        terms.clear();
        for (Product &p : rest) {
            if (constant && product_max(p) <= *constant) {
                stats_.absorb_constants++;
                continue;
            }
            terms.push_back(std::move(p));
        }
        if (constant) {
            terms.push_back(Product{{Constant{*constant}}});
        }
        std::sort(terms.begin(), terms.end());
    }

    struct PairCandidate {
        size_t u, v;  // factor positions
        Product partner;
        PairMerge merged;
        bool zero_pair;
    };

    // Every way of reading `p` as one half of a symmetric pair.
    static std::vector<PairCandidate> pair_candidates(const Product &p) {
        std::vector<PairCandidate> out;
        for (size_t u = 0; u < p.factors.size(); u++) {
            if (!is_plain_single(p.factors[u])) {
                continue;
            }
            const Literal &lu = std::get<Literal>(p.factors[u]);
            for (size_t v = u + 1; v < p.factors.size(); v++) {
                if (!is_plain_single(p.factors[v])) {
                    continue;
                }
                const Literal &lv = std::get<Literal>(p.factors[v]);
                if (lu.proj.family != lv.proj.family || lu.proj.index == lv.proj.index || lu.vars[0] == lv.vars[0]) {
                    continue;
                }
                Product q = p;
                q.factors[u] = make_literal(lu.proj.family, lv.proj.index, lu.vars);
                q.factors[v] = make_literal(lu.proj.family, lu.proj.index, lv.vars);
                std::sort(q.factors.begin(), q.factors.end());
                PairMerge m = make_pair_merge(lu.vars[0], lv.vars[0], lu.proj.index, lv.proj.index,
                                              fire_value(lu.proj.family));
                bool zero = lu.proj.index == Gf4(0) || lv.proj.index == Gf4(0);
                out.push_back(PairCandidate{u, v, std::move(q), m, zero});
            }
        }
        return out;
    }

    // Rule 7. Pairs are matched greedily in term order.
    bool merge_pairs(std::vector<Product> &terms) {
        std::map<Product, std::vector<size_t>> index;
        for (size_t i = 0; i < terms.size(); i++) {
            index[terms[i]].push_back(i);
        }
        std::vector<bool> consumed(terms.size(), false);
        std::vector<Product> merged;
        bool changed = false;
        for (size_t i = 0; i < terms.size(); i++) {
            if (consumed[i]) {
                continue;
            }
            for (PairCandidate &cand : pair_candidates(terms[i])) {
                if (cand.zero_pair) {
                    continue;
                }
                auto it = index.find(cand.partner);
                if (it == index.end()) {
                    continue;
                }
                auto partner = std::find_if(it->second.begin(), it->second.end(),
                                            [&](size_t j) { return j != i && !consumed[j]; });
                if (partner == it->second.end()) {
                    continue;
                }
                consumed[i] = consumed[*partner] = true;
                Product p;
                for (size_t f = 0; f < terms[i].factors.size(); f++) {
                    if (f != cand.u && f != cand.v) {
                        p.factors.push_back(terms[i].factors[f]);
                    }
                }
                p.factors.emplace_back(cand.merged);
                std::sort(p.factors.begin(), p.factors.end());
                merged.push_back(std::move(p));
                stats_.pair_merges++;
                changed = true;
                break;
            }
        }
        if (!changed) {
            return false;
        }
        std::vector<Product> next;
        for (size_t i = 0; i < terms.size(); i++) {
            if (!consumed[i]) {
                next.push_back(std::move(terms[i]));
            }
        }
        for (Product &p : merged) {
            next.push_back(std::move(p));
        }
        terms = std::move(next);
        return true;
    }

    // Rule 9: F_i(a1)...F_i(an) -> F_i(a1,...,an).
    bool merge_multi(std::vector<Product> &terms) {
        bool changed = false;
        for (Product &p : terms) {
            std::map<std::pair<Family, Gf4>, std::vector<int>> groups;
            std::map<std::pair<Family, Gf4>, int> sizes;
            std::vector<Factor> rest;
            for (Factor &f : p.factors) {
                if (is_plain(f)) {
                    const Literal &l = std::get<Literal>(f);
                    auto key = std::make_pair(l.proj.family, l.proj.index);
                    auto &vs = groups[key];
                    vs.insert(vs.end(), l.vars.begin(), l.vars.end());
                    sizes[key]++;
                } else {
                    rest.push_back(std::move(f));
                }
            }
            for (auto &[key, vars] : groups) {
                if (sizes[key] > 1) {
                    stats_.multi_merges++;
                    changed = true;
                }
                rest.emplace_back(make_literal(key.first, key.second, vars));
            }
            std::sort(rest.begin(), rest.end());
            p.factors = std::move(rest);
        }
        return changed;
    }

    int count_zero_pairs(const std::vector<Product> &terms) const {
        std::map<Product, int> multiplicity;
        for (const Product &p : terms) {
            multiplicity[p]++;
        }
        int n = 0;
        for (const Product &p : terms) {
            for (const PairCandidate &cand : pair_candidates(p)) {
                if (cand.zero_pair && multiplicity.count(cand.partner)) {
                    n++;
                }
            }
        }
        return n / 2;
    }

    Expr run(const Expr &input) {
        Expr e = input;
        while (true) {
            stats_.passes++;
            Expr before = e;
            normalize_sum(e.terms);
            bool paired = options_.merge_pairs && merge_pairs(e.terms);
            if (!paired && options_.merge_multi) {
                merge_multi(e.terms);
            }
            normalize_sum(e.terms);
            if (e == before) {
                break;
            }
        }
        stats_.zero_pairs_skipped = count_zero_pairs(e.terms);
        return e;
    }

   private:
    const SimplifyOptions &options_;
    SimplifyStats &stats_;
};

}  // namespace

Expr simplify(const Expr &e, const SimplifyOptions &options, SimplifyStats *stats) {
    SimplifyStats local;
    Simplifier s(options, stats ? *stats : local);
    return s.run(e);
}

namespace {

WireId lower_factor(const Factor &f, Circuit &c, std::span<const WireId> var_wires) {
    auto wire_of = [&](int v) {
        if (v < 0 || static_cast<size_t>(v) >= var_wires.size()) {
            throw std::invalid_argument("expression variable x" + std::to_string(v) + " has no wire");
        }
        return var_wires[v];
    };
    if (const auto *l = std::get_if<Literal>(&f)) {
        Gf4 fire = fire_value(l->proj.family);
        // A complemented literal starts at its fire value and is cleared when it matches.
        WireId t = c.add_ancilla(l->proj.complemented ? fire : Gf4(0));
        std::vector<WireId> controls;
        for (int v : l->vars) {
            controls.push_back(wire_of(v));
        }
        c.append_gate(make_gqg(std::move(controls), t, l->proj.index, shift_translate(fire)));
        return t;
    }
    if (const auto *p = std::get_if<PairMerge>(&f)) {
        if (p->lo == Gf4(0)) {
            throw std::invalid_argument("pair factor " + to_string(f) + " contains 0 and has no C2CS realization");
        }
        WireId t = c.add_ancilla(Gf4(0));
        c.append_gate(make_c2cs(wire_of(p->a), wire_of(p->b), p->lo, p->hi, p->level, t));
        return t;
    }
    return c.add_constant(std::get<Constant>(f).value);
}

// Folds `operands` into one wire with a MIN or MAX gate.
template <class FoldGate>
WireId fold(std::vector<WireId> operands, Circuit &c, Gf4 identity, bool fresh) {
    if (operands.size() == 1) {
        return operands[0];
    }
    auto target = operands.end();
    if (!fresh) {
        target = std::find_if(operands.begin(), operands.end(),
                              [&](WireId w) { return c.wires()[w].role == WireRole::Ancilla; });
    }
    FoldGate g;
    if (target == operands.end()) {
        g.target = c.add_ancilla(identity);
    } else {
        g.target = *target;
        operands.erase(target);
    }
    g.inputs = std::move(operands);
    WireId out = g.target;
    c.append_gate(std::move(g));
    return out;
}

}  // namespace

WireId lower_into(const Expr &e, Circuit &c, std::span<const WireId> var_wires, const LowerOptions &options) {
    if (e.terms.empty()) {
        return c.add_constant(Gf4(0));
    }
    std::vector<WireId> term_wires;
    for (const Product &p : e.terms) {
        if (p.factors.empty()) {
            term_wires.push_back(c.add_constant(Gf4(3)));
            continue;
        }
        std::vector<WireId> factor_wires;
        for (const Factor &f : p.factors) {
            factor_wires.push_back(lower_factor(f, c, var_wires));
        }
        term_wires.push_back(fold<MinGate>(std::move(factor_wires), c, Gf4(3), options.fresh_min_max_targets));
    }
    return fold<MaxGate>(std::move(term_wires), c, Gf4(0), options.fresh_min_max_targets);
}

Circuit lower(const Expr &e, const LowerOptions &options) {
    Circuit c;
    std::vector<WireId> vars;
    for (int v = 0; v < e.num_vars; v++) {
        vars.push_back(c.add_input());
    }
    WireId out = lower_into(e, c, vars, options);
    c.add_output(out, "f");
    return c;
}

SynthResult synth(const QuaternaryFunction &f, const SynthOptions &options) {
    if (f.num_inputs() > kMaxTableInputs) {
        throw std::invalid_argument("synthesis is limited to " + std::to_string(kMaxTableInputs) + " inputs");
    }
    SynthResult result;
    Circuit &c = result.circuit;
    std::vector<WireId> vars;
    for (int v = 0; v < f.num_inputs(); v++) {
        vars.push_back(c.add_input());
    }
    SynthStats &stats = result.stats;
    for (int k = 0; k < f.num_outputs(); k++) {
        OutputStats os;
        os.name = k < static_cast<int>(options.output_names.size()) ? options.output_names[k] : "f" + std::to_string(k);
        std::vector<Minterm> minterms = extract_minterms(f, k);
        for (const Minterm &t : minterms) {
            (t.level == Gf4(1) ? os.n : t.level == Gf4(2) ? os.p : os.s)++;
        }
        os.max_ancilla = static_cast<int>(minterms.size()) * f.num_inputs();
        Expr e = simplify(build_expression(minterms, f.num_inputs()), options.simplify, &os.simplify);
        os.expression = to_string(e);
        int before = ancilla_count(c);
        WireId out = lower_into(e, c, vars, options.lower);
        os.ancilla = ancilla_count(c) - before;
        c.add_output(out, os.name);
        stats.n += os.n;
        stats.p += os.p;
        stats.s += os.s;
        stats.max_ancilla += os.max_ancilla;
        result.expressions.push_back(std::move(e));
        stats.outputs.push_back(std::move(os));
    }
    stats.reduced_ancilla = ancilla_count(c);
    stats.cost = circuit_cost(c, CostModel::standard());
    stats.levels = circuit_levels(c);
    stats.gate_counts = gate_counts(c);

    std::vector<std::string> lint = lint_max_min(c, options.lower.fresh_min_max_targets);
    if (!lint.empty()) {
        throw SynthesisError("synthesized circuit fails the MAX/MIN lint: " + lint.front());
    }
    Equivalence check = equivalent(c, f);
    if (!check.equal) {
        throw SynthesisError("synthesized circuit differs from its truth table at input " +
                             digits(*check.counterexample));
    }
    return result;
}

}  // namespace qsynth4
