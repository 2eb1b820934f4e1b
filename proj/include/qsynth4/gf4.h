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

#ifndef QSYNTH4_GF4_H
#define QSYNTH4_GF4_H

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsynth4 {

/// A quaternary digit in {0, 1, 2, 3}. Every wire state in a circuit is one of these.
///
/// Two different additions act on these digits and they are never aliased:
/// `gf4_add` is addition in GF(4) (used by Feynman and Toffoli), `mod4_add` is integer
/// addition modulo 4 (used by NOT and ADD).
class Gf4 {
   public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(int v) : value_(static_cast<uint8_t>(v)) {
        if (v < 0 || v > 3) {
            throw std::invalid_argument("quaternary digit out of range: " + std::to_string(v));
        }
    }

    constexpr uint8_t value() const { return value_; }
    constexpr explicit operator int() const { return value_; }

    constexpr auto operator<=>(const Gf4 &) const = default;

   private:
    uint8_t value_ = 0;
};

/// All four digits in ascending order, for exhaustive loops.
inline constexpr std::array<Gf4, 4> kAllDigits{Gf4(0), Gf4(1), Gf4(2), Gf4(3)};

namespace detail {

// GF(4) addition and multiplication, transcribed digit for digit.
inline constexpr uint8_t kGf4AddTable[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
inline constexpr uint8_t kGf4MulTable[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

}  // namespace detail

constexpr Gf4 gf4_add(Gf4 a, Gf4 b) {
    return Gf4(detail::kGf4AddTable[a.value()][b.value()]);
}

constexpr Gf4 gf4_mul(Gf4 a, Gf4 b) {
    return Gf4(detail::kGf4MulTable[a.value()][b.value()]);
}

constexpr Gf4 mod4_add(Gf4 a, Gf4 b) {
    return Gf4((a.value() + b.value()) & 3);
}

/// Quaternary NOT: a + 1 modulo 4.
constexpr Gf4 quat_not(Gf4 a) {
    return mod4_add(a, Gf4(1));
}

constexpr Gf4 qmax(Gf4 a, Gf4 b) {
    return a < b ? b : a;
}

constexpr Gf4 qmin(Gf4 a, Gf4 b) {
    return b < a ? b : a;
}

/// Parses a single character '0'..'3'. Returns false on anything else.
constexpr bool parse_digit(char c, Gf4 &out) {
    if (c < '0' || c > '3') {
        return false;
    }
    out = Gf4(c - '0');
    return true;
}

constexpr char to_char(Gf4 a) {
    return static_cast<char>('0' + a.value());
}

}  // namespace qsynth4

#endif
