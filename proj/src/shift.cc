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

#include "qsynth4/shift.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qsynth4 {

ShiftOp::ShiftOp(std::string_view symbol, Gf4 a2, Gf4 a1, Gf4 a0)
    : symbol_(symbol), a2_(a2), a1_(a1), a0_(a0) {
    for (Gf4 x : kAllDigits) {
        perm_[x.value()] = gf4_add(gf4_add(gf4_mul(a2, gf4_mul(x, x)), gf4_mul(a1, x)), a0);
    }
    std::array<bool, 4> seen{};
    for (Gf4 y : perm_) {
        if (seen[y.value()]) {
            throw std::invalid_argument("polynomial for shift '" + symbol_ + "' is not a permutation");
        }
        seen[y.value()] = true;
    }
}

bool ShiftOp::is_identity() const {
    for (Gf4 x : kAllDigits) {
        if (perm_[x.value()] != x) {
            return false;
        }
    }
    return true;
}

int ShiftOp::perm_code() const {
    int code = 0;
    for (Gf4 y : perm_) {
        code = code * 4 + y.value();
    }
    return code;
}

namespace {

struct Catalog {
    std::vector<ShiftOp> ops;
    std::array<int, 256> by_code{};
    std::array<int, 24> inverse{};
    std::array<std::array<int, 24>, 24> compose{};

    Catalog() {
        struct Row {
            const char *symbol;
            int a2, a1, a0;
        };
        static constexpr Row kRows[] = {
            {"x+0", 0, 1, 0},   {"x+1", 0, 1, 1},   {"x+2", 0, 1, 2},   {"x+3", 0, 1, 3},
            {"x123", 0, 2, 0},  {"x013", 0, 2, 1},  {"x021", 0, 2, 2},  {"x032", 0, 2, 3},
            {"x132", 0, 3, 0},  {"x012", 0, 3, 1},  {"x023", 0, 3, 2},  {"x031", 0, 3, 3},
            {"x23", 1, 0, 0},   {"x01", 1, 0, 1},   {"x0213", 1, 0, 2}, {"x0312", 1, 0, 3},
            {"x12", 2, 0, 0},   {"x0132", 2, 0, 1}, {"x0231", 2, 0, 2}, {"x03", 2, 0, 3},
            {"x13", 3, 0, 0},   {"x0123", 3, 0, 1}, {"x02", 3, 0, 2},   {"x0321", 3, 0, 3},
        };
        by_code.fill(-1);
        for (const Row &r : kRows) {
            ops.emplace_back(r.symbol, Gf4(r.a2), Gf4(r.a1), Gf4(r.a0));
            int code = ops.back().perm_code();
            if (by_code[code] != -1) {
                throw std::logic_error("duplicate permutation in shift catalog");
            }
            by_code[code] = static_cast<int>(ops.size()) - 1;
        }
        // Closure under composition and inversion; a gap here would be a catalog defect.
        for (size_t f = 0; f < ops.size(); f++) {
            ShiftOp::Perm inv{};
            for (Gf4 x : kAllDigits) {
                inv[ops[f](x).value()] = x;
            }
            inverse[f] = lookup(inv);
            for (size_t g = 0; g < ops.size(); g++) {
                ShiftOp::Perm fg{};
                for (Gf4 x : kAllDigits) {
                    fg[x.value()] = ops[f](ops[g](x));
                }
                compose[f][g] = lookup(fg);
            }
        }
    }

    int lookup(const ShiftOp::Perm &p) const {
        int code = 0;
        for (Gf4 y : p) {
            code = code * 4 + y.value();
        }
        int idx = by_code[code];
        if (idx < 0) {
            throw std::logic_error("shift catalog is not closed");
        }
        return idx;
    }

    int index_of(const ShiftOp &op) const {
        int idx = by_code[op.perm_code()];
        if (idx < 0) {
            throw std::logic_error("shift is not in the catalog");
        }
        return idx;
    }
};

const Catalog &catalog() {
    static const Catalog c;
    return c;
}

}  // namespace

std::span<const ShiftOp> shift_catalog() {
    return catalog().ops;
}

Gf4 shift_apply(const ShiftOp &op, Gf4 x) {
    return op(x);
}

const ShiftOp &shift_from_perm(const ShiftOp::Perm &perm) {
    std::array<bool, 4> seen{};
    for (Gf4 y : perm) {
        if (seen[y.value()]) {
            throw std::invalid_argument("not a permutation of {0,1,2,3}");
        }
        seen[y.value()] = true;
    }
    return catalog().ops[catalog().lookup(perm)];
}

bool try_shift_by_symbol(std::string_view symbol, const ShiftOp *&out) {
    std::string s(symbol);
    if (s.starts_with("x^{") && s.ends_with("}")) {
        s = "x" + s.substr(3, s.size() - 4);
    }
    for (const ShiftOp &op : catalog().ops) {
        if (op.symbol() == s) {
            out = &op;
            return true;
        }
    }
    return false;
}

const ShiftOp &shift_by_symbol(std::string_view symbol) {
    const ShiftOp *op = nullptr;
    if (!try_shift_by_symbol(symbol, op)) {
        throw std::invalid_argument("unknown shift symbol '" + std::string(symbol) + "'");
    }
    return *op;
}

const ShiftOp &shift_compose(const ShiftOp &f, const ShiftOp &g) {
    const Catalog &c = catalog();
    return c.ops[c.compose[c.index_of(f)][c.index_of(g)]];
}

const ShiftOp &shift_inverse(const ShiftOp &f) {
    const Catalog &c = catalog();
    return c.ops[c.inverse[c.index_of(f)]];
}

const ShiftOp &shift_identity() {
    return catalog().ops[0];
}

const ShiftOp &shift_translate(Gf4 c) {
    return catalog().ops[c.value()];
}

const ShiftOp &shift_mod4_increment(Gf4 k) {
    ShiftOp::Perm p{};
    for (Gf4 x : kAllDigits) {
        p[x.value()] = mod4_add(x, k);
    }
    return shift_from_perm(p);
}

}  // namespace qsynth4
