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

#ifndef QSYNTH4_PROJECTION_H
#define QSYNTH4_PROJECTION_H

#include <compare>
#include <string>

#include "qsynth4/gf4.h"

namespace qsynth4 {

/// L fires with 1, J with 2, P with 3.
enum class Family : uint8_t { L = 1, J = 2, P = 3 };

constexpr Gf4 fire_value(Family f) {
    return Gf4(static_cast<int>(f));
}

/// Family whose projections fire with `level` (1, 2 or 3).
Family family_for_level(Gf4 level);

char family_char(Family f);

/// One of the 24 projection operators L_i, J_i, P_i and their complements L'_i, J'_i, P'_i.
struct Projection {
    Family family = Family::L;
    Gf4 index;
    bool complemented = false;

    auto operator<=>(const Projection &) const = default;
};

/// Plain: fire value iff a == index, else 0. Complemented: 0 iff a == index, else fire value.
constexpr Gf4 projection(Projection kind, Gf4 a) {
    bool hit = (a == kind.index) != kind.complemented;
    return hit ? fire_value(kind.family) : Gf4(0);
}

/// "L2", "J'0", ...
std::string to_string(Projection kind);

}  // namespace qsynth4

#endif
