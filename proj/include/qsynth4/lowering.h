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

#ifndef QSYNTH4_LOWERING_H
#define QSYNTH4_LOWERING_H

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qsynth4/circuit.h"
#include "qsynth4/simulator.h"

namespace qsynth4 {

// Lowering of macro gates to M-S gates plus bare one-qudit shifts.
//
// An M-S gate only fires on control value 3. Firing on another value v is done by
// conjugating the control with a shift that sends v to 3 and undoing it afterwards.
// Conditions on two or more controls (multi-control GQG, C2CS) are first accumulated
// on a zero-initialized scratch wire that ends at 3 exactly when all conditions hold;
// the scratch is uncomputed afterwards, so one scratch wire can serve every gadget
// in a circuit.

/// Gate list builder that fuses consecutive shifts on the same wire and drops
/// identity shifts.
class GateSequence {
   public:
    void push(Gate g);
    void push_shift(WireId wire, const ShiftOp &shift);
    void append(const std::vector<Gate> &gates);
    const std::vector<Gate> &gates() const { return gates_; }

   private:
    std::vector<Gate> gates_;
};

/// Inverse of a sequence of MS and Shift gates. Throws std::invalid_argument for other kinds.
std::vector<Gate> inverse_sequence(const std::vector<Gate> &gates);

/// [s on control, MS(control -> target, shift), s^-1 on control] with s sending v to 3;
/// a bare MS when v == 3. Net effect: target <- shift(target) iff control == v.
std::vector<Gate> control_conjugation_gadget(Gf4 v, const ShiftOp &shift, WireId control = 0, WireId target = 1);

/// A macro gate on wires 0..k-1 together with its M-S-level realization. Scratch wires,
/// if any, are ancillae numbered from k.
struct Gadget {
    std::string name;
    Gate pattern;
    Circuit replacement;
    /// Published M-S count for the macro kind.
    int declared_cost = 0;

    /// MS and shift gates in the replacement, one each.
    int actual_cost() const;
    int scratch_wires() const;
};

/// Builds the realization of `g` after renaming its wires to 0..k-1 in `wires_of`
/// order. Returns nullopt for primitives (MS, Shift) and for kinds without a gadget
/// (Toffoli, MAX, MIN).
std::optional<Gadget> make_gadget(const Gate &g, std::string name = {});

/// Compares the gadget with its pattern on every basis state of the pattern's wires,
/// with scratch starting at 0; scratch must also end at 0.
Equivalence check_gadget(const Gadget &gadget);

/// The shipped set: control conjugation for each control value, single-control GQG in
/// every projection configuration plus a general one, multi-control GQG, C2CS for every
/// pair and amount, ADD and Feynman.
std::vector<Gadget> gadget_library();

/// Each section: `.gadget <name>`, `.pattern <gate line>`, `.declared <cost>`, then
/// the replacement netlist.
std::string serialize_library(const std::vector<Gadget> &gadgets);
std::vector<Gadget> parse_library(std::string_view text);

struct DecomposeOptions {
    /// Macro kinds copied through unchanged. Everything else must be lowered; removing
    /// a kind without a gadget from this set makes decompose fail.
    std::set<GateKind> keep{GateKind::Toffoli, GateKind::Max, GateKind::Min};
};

/// Replaces every macro gate not in `keep` by its gadget. The result is equivalent to
/// `c` on its inputs and outputs; scratch wires are appended as ancillae at the end.
/// Throws std::invalid_argument when a kind outside `keep` has no gadget.
Circuit decompose(const Circuit &c, const DecomposeOptions &options = {});

}  // namespace qsynth4

#endif
