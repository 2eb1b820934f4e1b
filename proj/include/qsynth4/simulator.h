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

#ifndef QSYNTH4_SIMULATOR_H
#define QSYNTH4_SIMULATOR_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsynth4/circuit.h"
#include "qsynth4/function.h"

namespace qsynth4 {

// Every gate in the library maps basis states to basis states, so a circuit is
// simulated exactly by tracking one digit per wire.

/// One digit per wire, indexed by wire id.
using BasisState = std::vector<Gf4>;

/// Writes only the gate's target wire.
void apply_gate(BasisState &state, const Gate &g);
BasisState apply_gate(const BasisState &state, const Gate &g);

/// Initializes ancilla and constant wires, binds `inputs` to the primary-input wires in
/// id order, and applies every gate. Throws std::invalid_argument when the number of
/// inputs does not match.
BasisState run(const Circuit &c, std::span<const Gf4> inputs);

/// Exhaustive sweep over all 4^m assignments of the primary inputs, reading the declared
/// outputs. Throws std::invalid_argument beyond kMaxTableInputs inputs.
QuaternaryFunction truth_table(const Circuit &c);

struct Equivalence {
    bool equal = true;
    /// First mismatching input vector (ascending order), when not equal.
    std::optional<std::vector<Gf4>> counterexample;
    /// False when the verdict came from random sampling rather than a full sweep.
    bool exhaustive = true;
    uint64_t vectors_checked = 0;
};

/// Throws std::invalid_argument when input or output counts differ.
Equivalence equivalent(const Circuit &c1, const Circuit &c2);

/// Circuit against a table; exhaustive up to kMaxTableInputs inputs.
Equivalence equivalent(const Circuit &c, const QuaternaryFunction &f);

/// Random-vector comparison for circuits too wide to sweep. Deterministic for a seed.
Equivalence equivalent_sampled(const Circuit &c1, const Circuit &c2, uint64_t samples, uint64_t seed);

/// Max/Min gates lose information, so they may only write ancilla wires. Returns one
/// message per offending gate; empty means clean. With `require_fresh`, the target must
/// also be untouched by earlier gates and initialized to 0 (Max) or 3 (Min).
std::vector<std::string> lint_max_min(const Circuit &c, bool require_fresh = false);

}  // namespace qsynth4

#endif
