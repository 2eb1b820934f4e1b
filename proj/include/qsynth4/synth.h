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

#ifndef QSYNTH4_SYNTH_H
#define QSYNTH4_SYNTH_H

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsynth4/circuit.h"
#include "qsynth4/expr.h"
#include "qsynth4/function.h"

namespace qsynth4 {

/// One input vector with a nonzero output: a product of one literal per variable that
/// asserts `level`.
struct Minterm {
    /// (variable, required value), one per variable in variable order.
    std::vector<std::pair<int, Gf4>> literals;
    Gf4 level{1};

    bool operator==(const Minterm &) const = default;
};

/// One minterm per row with a nonzero value on `output`, in ascending row order.
std::vector<Minterm> extract_minterms(const QuaternaryFunction &f, int output = 0);

/// Sum over the minterms; each becomes a product of L (level 1), J (level 2) or P
/// (level 3) literals. No minterms gives the constant-0 expression.
Expr build_expression(std::span<const Minterm> minterms, int num_vars);

struct SimplifyOptions {
    /// Merge symmetric product pairs F_i(a)F_j(b) + F_j(a)F_i(b) into a pair factor.
    /// Only pairs with i, j in {1,2,3} are merged; those are the pairs a C2CS gate
    /// can detect.
    bool merge_pairs = true;
    /// Collapse F_i(a1)...F_i(an) into one multi-argument literal.
    bool merge_multi = true;
};

/// How often each rewrite fired; rules are grouped as they are numbered.
struct SimplifyStats {
    int absorb_constants = 0;  // rules 1-4
    int complement = 0;        // rules 5-6
    int pair_merges = 0;       // rule 7
    int idempotent = 0;        // rule 8
    int multi_merges = 0;      // rule 9
    /// Symmetric pairs left unmerged because one of the two values is 0.
    int zero_pairs_skipped = 0;
    int passes = 0;
};

/// Rewrites to a fixpoint under MIN/MAX semantics; evaluation is preserved on every input.
Expr simplify(const Expr &e, const SimplifyOptions &options = {}, SimplifyStats *stats = nullptr);

struct LowerOptions {
    /// Give each MIN and MAX its own fresh ancilla (3 for MIN, 0 for MAX) instead of
    /// accumulating into one of the operand ancillae.
    bool fresh_min_max_targets = false;
};

/// Appends the gadgets for `e` to `c` and returns the wire carrying its value.
/// `var_wires[v]` is the wire holding variable v. Literals become GQG gates on fresh
/// zero ancillae, pair factors become C2CS gates, multi-factor products a MIN and
/// multi-term sums a MAX. Throws std::invalid_argument for pair factors containing 0.
WireId lower_into(const Expr &e, Circuit &c, std::span<const WireId> var_wires, const LowerOptions &options = {});

/// Stand-alone circuit with `e.num_vars` inputs and a single output "f".
Circuit lower(const Expr &e, const LowerOptions &options = {});

struct OutputStats {
    std::string name;
    int n = 0;  // rows equal to 1
    int p = 0;  // rows equal to 2
    int s = 0;  // rows equal to 3
    int max_ancilla = 0;
    int ancilla = 0;
    SimplifyStats simplify;
    std::string expression;
};

struct SynthStats {
    int n = 0;
    int p = 0;
    int s = 0;
    /// (n + p + s) * m summed over outputs: one ancilla per literal before simplification.
    int max_ancilla = 0;
    /// Ancilla wires actually used.
    int reduced_ancilla = 0;
    /// Under CostModel::standard().
    int cost = 0;
    int levels = 0;
    std::map<GateKind, int> gate_counts;
    std::vector<OutputStats> outputs;
};

struct SynthOptions {
    SimplifyOptions simplify;
    LowerOptions lower;
    /// Output names; defaults to f0, f1, ...
    std::vector<std::string> output_names;
};

struct SynthResult {
    Circuit circuit;
    SynthStats stats;
    std::vector<Expr> expressions;
};

/// The synthesized circuit failed its own exhaustive check. Never expected; reported
/// instead of returning a wrong netlist.
class SynthesisError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Synthesizes each output over shared input wires with its own ancillae, then checks
/// the circuit against `f` on every input before returning.
SynthResult synth(const QuaternaryFunction &f, const SynthOptions &options = {});

}  // namespace qsynth4

#endif
