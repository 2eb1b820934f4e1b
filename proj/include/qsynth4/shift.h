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

#ifndef QSYNTH4_SHIFT_H
#define QSYNTH4_SHIFT_H

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "qsynth4/gf4.h"

namespace qsynth4 {

/// A one-qudit shift operation: the permutation x -> a2*x^2 + a1*x + a0 over GF(4).
///
/// Every permutation of {0,1,2,3} has exactly one such polynomial form, so the 24
/// catalog entries are the whole symmetric group S4. Instances are cheap values; the
/// canonical ones live in `shift_catalog()` and are compared by their permutation.
class ShiftOp {
   public:
    using Perm = std::array<Gf4, 4>;

    ShiftOp() : ShiftOp("x+0", Gf4(0), Gf4(1), Gf4(0)) {}
    ShiftOp(std::string_view symbol, Gf4 a2, Gf4 a1, Gf4 a0);

    const std::string &symbol() const { return symbol_; }
    std::array<Gf4, 3> coeffs() const { return {a2_, a1_, a0_}; }
    const Perm &perm() const { return perm_; }
    Gf4 operator()(Gf4 x) const { return perm_[x.value()]; }
    bool is_identity() const;

    /// Dense index 0..255 of the permutation table, base 4 with perm[0] most significant.
    int perm_code() const;

    bool operator==(const ShiftOp &other) const { return perm_ == other.perm_; }

   private:
    std::string symbol_;
    Gf4 a2_, a1_, a0_;
    Perm perm_;
};

/// The 24 shift operations, in table order (translations, then the linear maps 2x+c and
/// 3x+c, then the quadratic maps).
std::span<const ShiftOp> shift_catalog();

Gf4 shift_apply(const ShiftOp &op, Gf4 x);

/// Catalog member whose permutation equals `perm`. Throws std::invalid_argument if `perm`
/// is not a permutation of {0,1,2,3}.
const ShiftOp &shift_from_perm(const ShiftOp::Perm &perm);

/// Catalog member by ASCII symbol ("x+1", "x0123", "x23", ...); also accepts the
/// brace form "x^{0123}". Throws std::invalid_argument for unknown symbols.
const ShiftOp &shift_by_symbol(std::string_view symbol);
bool try_shift_by_symbol(std::string_view symbol, const ShiftOp *&out);

/// f . g, i.e. x -> f(g(x)).
const ShiftOp &shift_compose(const ShiftOp &f, const ShiftOp &g);
const ShiftOp &shift_inverse(const ShiftOp &f);

/// The identity x+0.
const ShiftOp &shift_identity();

/// GF(4) translation x -> x + c.
const ShiftOp &shift_translate(Gf4 c);

/// x -> x + k modulo 4 (k = 1 is the cyclic shift x0123).
const ShiftOp &shift_mod4_increment(Gf4 k);

}  // namespace qsynth4

#endif
