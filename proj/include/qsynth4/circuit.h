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

#ifndef QSYNTH4_CIRCUIT_H
#define QSYNTH4_CIRCUIT_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsynth4/gf4.h"
#include "qsynth4/shift.h"

namespace qsynth4 {

using WireId = int;

enum class WireRole : uint8_t { Input, Ancilla, Constant };

struct Wire {
    WireId id = 0;
    WireRole role = WireRole::Input;
    /// Set for ancilla and constant wires, empty for primary inputs.
    std::optional<Gf4> init;

    bool operator==(const Wire &) const = default;
};

/// Muthukrishnan-Stroud gate: target <- shift(target) iff control == 3.
struct MsGate {
    WireId control = 0;
    WireId target = 0;
    ShiftOp shift;
    bool operator==(const MsGate &) const = default;
};

/// Unconditional one-qudit shift.
struct ShiftGate {
    WireId target = 0;
    ShiftOp shift;
    bool operator==(const ShiftGate &) const = default;
};

/// b <- a + b over GF(4).
struct FeynmanGate {
    WireId a = 0;
    WireId b = 0;
    bool operator==(const FeynmanGate &) const = default;
};

/// c <- a*b + c over GF(4).
struct ToffoliGate {
    WireId a = 0;
    WireId b = 0;
    WireId c = 0;
    bool operator==(const ToffoliGate &) const = default;
};

/// target <- max(inputs..., target).
struct MaxGate {
    std::vector<WireId> inputs;
    WireId target = 0;
    bool operator==(const MaxGate &) const = default;
};

/// target <- min(inputs..., target).
struct MinGate {
    std::vector<WireId> inputs;
    WireId target = 0;
    bool operator==(const MinGate &) const = default;
};

/// Generalized quaternary gate: if every control holds the same value v, target <- shifts[v](target).
struct GqgGate {
    std::vector<WireId> controls;
    WireId target = 0;
    std::array<ShiftOp, 4> shifts;
    bool operator==(const GqgGate &) const = default;
};

/// Controlled cyclic shift: target <- target + amount (mod 4) iff {a, b} == {lo, hi}.
/// The pair is unordered and stored with lo < hi; both are drawn from {1, 2, 3}.
struct C2csGate {
    WireId a = 0;
    WireId b = 0;
    WireId target = 0;
    Gf4 lo{1};
    Gf4 hi{2};
    Gf4 amount{1};
    bool operator==(const C2csGate &) const = default;
};

/// b <- a + b modulo 4.
struct AddGate {
    WireId a = 0;
    WireId b = 0;
    bool operator==(const AddGate &) const = default;
};

using Gate = std::variant<MsGate, ShiftGate, FeynmanGate, ToffoliGate, MaxGate, MinGate, GqgGate, C2csGate, AddGate>;

enum class GateKind : uint8_t { MS, Shift, Feynman, Toffoli, Max, Min, GQG, C2CS, Add };

inline constexpr std::array<GateKind, 9> kAllGateKinds{
    GateKind::MS,  GateKind::Shift, GateKind::Feynman, GateKind::Toffoli, GateKind::Max,
    GateKind::Min, GateKind::GQG,   GateKind::C2CS,    GateKind::Add,
};

GateKind kind_of(const Gate &g);
const char *kind_name(GateKind k);

/// Every wire a gate touches, the target last.
std::vector<WireId> wires_of(const Gate &g);
WireId target_of(const Gate &g);

/// C2CS with the pair normalized to lo < hi.
C2csGate make_c2cs(WireId a, WireId b, Gf4 i, Gf4 j, Gf4 amount, WireId target);

/// GQG applying `shift` when every control equals `value`, identity otherwise.
GqgGate make_gqg(std::vector<WireId> controls, WireId target, Gf4 value, const ShiftOp &shift);

/// Throws std::invalid_argument for duplicate wires, wires outside [0, num_wires), or
/// malformed parameters (C2CS pair/amount, empty MAX/MIN/GQG input lists).
void validate_gate(const Gate &g, int num_wires);

struct Output {
    WireId wire = 0;
    std::string name;
    bool operator==(const Output &) const = default;
};

/// Ordered gate netlist over densely numbered wires.
class Circuit {
   public:
    WireId add_input();
    WireId add_ancilla(Gf4 init = Gf4(0));
    WireId add_constant(Gf4 value);
    WireId add_wire(WireRole role, std::optional<Gf4> init);

    /// Validates `g` against the current wires before appending.
    void append_gate(Gate g);
    void add_output(WireId wire, std::string name);

    const std::vector<Wire> &wires() const { return wires_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<Output> &outputs() const { return outputs_; }
    int num_wires() const { return static_cast<int>(wires_.size()); }

    /// Primary-input wires in id order; this is the variable order of truth tables.
    std::vector<WireId> input_wires() const;

    bool operator==(const Circuit &) const = default;

   private:
    std::vector<Wire> wires_;
    std::vector<Gate> gates_;
    std::vector<Output> outputs_;
};

/// M-S gate count per gate kind. The default model holds the published constants.
class CostModel {
   public:
    CostModel() = default;
    explicit CostModel(std::map<GateKind, int> costs);

    /// Feynman 5, Toffoli 17, MAX 6, MIN 6, GQG 8, C2CS 8, ADD 8, M-S 1; a bare one-qudit
    /// shift counts as one M-S gate with a constant-3 control.
    static CostModel standard();

    bool has(GateKind k) const { return costs_.count(k) != 0; }
    /// Throws std::out_of_range for kinds the model does not price.
    int cost(GateKind k) const;

   private:
    std::map<GateKind, int> costs_;
};

int circuit_cost(const Circuit &c, const CostModel &model);

/// Circuit depth under as-soon-as-possible scheduling on wire conflicts.
int circuit_levels(const Circuit &c);

int ancilla_count(const Circuit &c);

std::map<GateKind, int> gate_counts(const Circuit &c);

}  // namespace qsynth4

#endif
