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

#include "qsynth4/projection.h"

#include <stdexcept>

namespace qsynth4 {

Family family_for_level(Gf4 level) {
    switch (level.value()) {
        case 1:
            return Family::L;
        case 2:
            return Family::J;
        case 3:
            return Family::P;
        default:
            throw std::invalid_argument("level 0 has no projection family");
    }
}

char family_char(Family f) {
    switch (f) {
        case Family::L:
            return 'L';
        case Family::J:
            return 'J';
        case Family::P:
            return 'P';
    }
    return '?';
}

std::string to_string(Projection kind) {
    std::string s(1, family_char(kind.family));
    if (kind.complemented) {
        s += '\'';
    }
    s += to_char(kind.index);
    return s;
}

}  // namespace qsynth4
