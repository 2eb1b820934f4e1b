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

#ifndef QSYNTH4_EXPR_H
#define QSYNTH4_EXPR_H

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qsynth4/gf4.h"
#include "qsynth4/projection.h"

namespace qsynth4 {

// Sum-of-products expressions over projection literals. A sum is a quaternary MAX and a
// product is a quaternary MIN: a product of J literals has to evaluate to 2 when all of
// them fire, which GF(4) multiplication would turn into 3, and a sum has to saturate
// (J + 2 = 2), which GF(4) addition would not.

/// Projection over one or more variables. Plain: fire value iff every variable equals
/// the index. Complemented: 0 iff every variable equals the index, fire value otherwise.
struct Literal {
    Projection proj;
    /// Sorted, distinct variable indices.
    std::vector<int> vars;

    auto operator<=>(const Literal &) const = default;
    bool operator==(const Literal &) const = default;
};

/// Symmetric pair factor: `level` iff the values of variables a and b are {lo, hi} in
/// either order, else 0. Stands for F_lo(a)F_hi(b) + F_hi(a)F_lo(b).
struct PairMerge {
    int a = 0;
    int b = 1;
    Gf4 lo{1};
    Gf4 hi{2};
    Gf4 level{1};

    auto operator<=>(const PairMerge &) const = default;
    bool operator==(const PairMerge &) const = default;
};

struct Constant {
    Gf4 value;

    auto operator<=>(const Constant &) const = default;
    bool operator==(const Constant &) const = default;
};

using Factor = std::variant<Literal, PairMerge, Constant>;

/// MIN of its factors; the empty product is the MIN identity 3.
struct Product {
    std::vector<Factor> factors;

    auto operator<=>(const Product &) const = default;
    bool operator==(const Product &) const = default;
};

/// MAX of its terms over `num_vars` variables; the empty sum is 0.
struct Expr {
    int num_vars = 0;
    std::vector<Product> terms;

    bool operator==(const Expr &) const = default;
};

Literal make_literal(Family family, Gf4 index, std::vector<int> vars, bool complemented = false);
PairMerge make_pair_merge(int a, int b, Gf4 i, Gf4 j, Gf4 level);

/// Largest value the factor can take.
Gf4 max_value(const Factor &f);

Gf4 eval_factor(const Factor &f, std::span<const Gf4> inputs);
Gf4 eval_product(const Product &p, std::span<const Gf4> inputs);

/// Throws std::invalid_argument when `inputs` has fewer values than the expression has
/// variables or a factor references a variable outside the assignment.
Gf4 eval_expr(const Expr &e, std::span<const Gf4> inputs);

/// True when, in every product, all literal and pair factors fire at the same level.
bool is_family_consistent(const Expr &e);

int literal_count(const Expr &e);

/// Human-readable form such as "L0(x0)L2(x1) + C2CS{1,3}(x0,x1;1) + P1(x0,x1)".
std::string to_string(const Factor &f);
std::string to_string(const Product &p);
std::string to_string(const Expr &e);

}  // namespace qsynth4

#endif
