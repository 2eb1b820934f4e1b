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


#ifndef QSYNTH4_SEARCH_H
#define QSYNTH4_SEARCH_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsynth4/circuit.h"

namespace qsynth4 {

/// Permutation of the 4^w basis states of w wires: perm[s] is the image of state s.
/// States are indexed base 4 with wire 0 most significant.
using StatePerm = std::vector<int>;

inline constexpr int kMaxSearchWires = 2;
inline constexpr int kMaxSearchGates = 6;

/// Basis-state permutation of a gate list on wires 0..num_wires-1. Throws
/// std::invalid_argument when the gates are not a bijection (MAX, MIN) or use other wires.
StatePerm state_permutation(const std::vector<Gate> &gates, int num_wires);

/// The generator set: every non-identity shift on each wire, then MS(i -> j) with
/// every non-identity shift for each ordered pair i != j.
std::vector<Gate> search_generators(int num_wires);

struct SearchStats {
    uint64_t forward_states = 0;
    uint64_t backward_states = 0;
};

/// Minimal-length gate sequence over `search_generators(num_wires)` realizing `target`,
/// or nullopt when none exists with at most `max_gates` gates. Meet-in-the-middle
/// breadth-first search from the identity and from the target.
std::optional<std::vector<Gate>> search_decomposition(const StatePerm &target, int num_wires,
                                                      int max_gates = kMaxSearchGates,
                                                      SearchStats *stats = nullptr);

/// Wraps a search result as a netlist over `num_wires` input wires.
Circuit search_result_circuit(const std::vector<Gate> &gates, int num_wires);

}  // namespace qsynth4

#endif
