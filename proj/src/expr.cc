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

#include "qsynth4/expr.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qsynth4 {

Literal make_literal(Family family, Gf4 index, std::vector<int> vars, bool complemented) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.empty()) {
        throw std::invalid_argument("literal needs at least one variable");
    }
    return Literal{Projection{family, index, complemented}, std::move(vars)};
}

PairMerge make_pair_merge(int a, int b, Gf4 i, Gf4 j, Gf4 level) {
    if (a == b) {
        throw std::invalid_argument("pair merge needs two distinct variables");
    }
    if (i == j) {
        throw std::invalid_argument("pair merge needs two distinct values");
    }
    if (level == Gf4(0)) {
        throw std::invalid_argument("pair merge level must be nonzero");
    }
    return PairMerge{std::min(a, b), std::max(a, b), std::min(i, j), std::max(i, j), level};
}

Gf4 max_value(const Factor &f) {
    if (const auto *l = std::get_if<Literal>(&f)) {
        return fire_value(l->proj.family);
    }
    if (const auto *p = std::get_if<PairMerge>(&f)) {
        return p->level;
    }
    return std::get<Constant>(f).value;
}

namespace {

Gf4 var(std::span<const Gf4> inputs, int v) {
    if (v < 0 || static_cast<size_t>(v) >= inputs.size()) {
        throw std::invalid_argument("unbound variable x" + std::to_string(v));
    }
    return inputs[v];
}

}  // namespace

Gf4 eval_factor(const Factor &f, std::span<const Gf4> inputs) {
    if (const auto *l = std::get_if<Literal>(&f)) {
        bool all = true;
        for (int v : l->vars) {
            all = all && var(inputs, v) == l->proj.index;
        }
        return (all != l->proj.complemented) ? fire_value(l->proj.family) : Gf4(0);
    }
    if (const auto *p = std::get_if<PairMerge>(&f)) {
        Gf4 x = var(inputs, p->a);
        Gf4 y = var(inputs, p->b);
        bool hit = (x == p->lo && y == p->hi) || (x == p->hi && y == p->lo);
        return hit ? p->level : Gf4(0);
    }
    return std::get<Constant>(f).value;
}

Gf4 eval_product(const Product &p, std::span<const Gf4> inputs) {
    Gf4 v(3);
    for (const Factor &f : p.factors) {
        v = qmin(v, eval_factor(f, inputs));
    }
    return v;
}

Gf4 eval_expr(const Expr &e, std::span<const Gf4> inputs) {
    if (inputs.size() < static_cast<size_t>(e.num_vars)) {
        throw std::invalid_argument("expression has " + std::to_string(e.num_vars) + " variables, got " +
                                    std::to_string(inputs.size()) + " values");
    }
    Gf4 v(0);
    for (const Product &p : e.terms) {
        v = qmax(v, eval_product(p, inputs));
    }
    return v;
}

bool is_family_consistent(const Expr &e) {
    for (const Product &p : e.terms) {
        std::optional<Gf4> level;
        for (const Factor &f : p.factors) {
            if (std::holds_alternative<Constant>(f)) {
                continue;
            }
            Gf4 v = max_value(f);
            if (level && *level != v) {
                return false;
            }
            level = v;
        }
    }
    return true;
}

int literal_count(const Expr &e) {
    int n = 0;
    for (const Product &p : e.terms) {
        for (const Factor &f : p.factors) {
            n += std::holds_alternative<Literal>(f) ? 1 : 0;
        }
    }
    return n;
}

std::string to_string(const Factor &f) {
    if (const auto *l = std::get_if<Literal>(&f)) {
        std::string s = to_string(l->proj) + "(";
        for (size_t i = 0; i < l->vars.size(); i++) {
            s += (i ? ",x" : "x") + std::to_string(l->vars[i]);
        }
        return s + ")";
    }
    if (const auto *p = std::get_if<PairMerge>(&f)) {
        return std::string("C2CS{") + to_char(p->lo) + "," + to_char(p->hi) + "}(x" + std::to_string(p->a) + ",x" +
               std::to_string(p->b) + ";" + to_char(p->level) + ")";
    }
    return std::string(1, to_char(std::get<Constant>(f).value));
}

std::string to_string(const Product &p) {
    if (p.factors.empty()) {
        return "3";
    }
    std::string s;
    for (const Factor &f : p.factors) {
        s += to_string(f);
    }
    return s;
}

std::string to_string(const Expr &e) {
    if (e.terms.empty()) {
        return "0";
    }
    std::string s;
    for (size_t i = 0; i < e.terms.size(); i++) {
        s += (i ? " + " : "") + to_string(e.terms[i]);
    }
    return s;
}

}  // namespace qsynth4
