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


#ifndef QSYNTH4_BENCHMARKS_H
#define QSYNTH4_BENCHMARKS_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsynth4/function.h"

namespace qsynth4 {

// Built-in generators:
//   halfadd(a, b)      sum (a + b) mod 4, carry 1 iff a + b >= 4
//   fulladd(a, b, c)   same with carry-in c in {0, 1}; rows with c >= 2 are 0
//   sum2(a, b)         (a + b) mod 4
//   mul2(a, b)         a * b over GF(4)
//   arb2(a, b)         the worked two-qudit example function
std::span<const std::string_view> generator_names();
bool is_generator(std::string_view name);
/// Throws std::invalid_argument for unknown names.
QuaternaryFunction make_generator(std::string_view name);

/// Output names used when synthesizing a generator.
std::vector<std::string> generator_output_names(std::string_view name);

/// Published comparison figures for one benchmark. Baseline columns are empty where no
/// figure was published.
struct ReferenceRow {
    std::string_view name;
    int max_ancilla;
    int reduced_ancilla;
    int levels;
    std::optional<int> baseline_levels;
    int cost;
    std::optional<int> baseline_cost;
    /// False when the benchmark's quaternary encoding is unknown, so the figures are not
    /// comparable with ours.
    bool comparable;
};

std::span<const ReferenceRow> reference_rows();
const ReferenceRow *find_reference(std::string_view name);

/// halfadd, fulladd, sum2, mul2, xor5, rd53, rd73, ham3.
std::span<const std::string_view> benchmark_names();

}  // namespace qsynth4

#endif
