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

#ifndef QSYNTH4_FUNCTION_H
#define QSYNTH4_FUNCTION_H

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsynth4/gf4.h"
#include "qsynth4/parse_error.h"

namespace qsynth4 {

/// Largest input count for which a complete table is materialized.
inline constexpr int kMaxTableInputs = 12;

/// Completely specified m-input, k-output quaternary truth table.
///
/// Rows are indexed by the input vector read as a base-4 number with input 0 most
/// significant, so row order is ascending lexicographic order of input vectors.
class QuaternaryFunction {
   public:
    QuaternaryFunction() = default;
    /// All outputs start at 0. Throws std::invalid_argument if num_inputs exceeds
    /// kMaxTableInputs or either count is negative.
    QuaternaryFunction(int num_inputs, int num_outputs, std::string name = {});

    int num_inputs() const { return num_inputs_; }
    int num_outputs() const { return num_outputs_; }
    size_t num_rows() const { return size_t{1} << (2 * num_inputs_); }
    const std::string &name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    Gf4 output(size_t row, int k) const { return table_[row * num_outputs_ + k]; }
    void set_output(size_t row, int k, Gf4 v) { table_[row * num_outputs_ + k] = v; }
    std::span<const Gf4> outputs(size_t row) const {
        return std::span<const Gf4>(table_).subspan(row * num_outputs_, num_outputs_);
    }

    std::vector<Gf4> inputs_of(size_t row) const;
    static size_t row_of(std::span<const Gf4> inputs);

    /// Single-output projection onto output k.
    QuaternaryFunction output_function(int k) const;

    /// Table equality; the name is ignored.
    bool operator==(const QuaternaryFunction &other) const {
        return num_inputs_ == other.num_inputs_ && num_outputs_ == other.num_outputs_ && table_ == other.table_;
    }

   private:
    int num_inputs_ = 0;
    int num_outputs_ = 0;
    std::string name_;
    std::vector<Gf4> table_;
};

/// Digit string of an input vector, e.g. "031".
std::string digits(std::span<const Gf4> values);

// Quaternary truth-table text (.qtt):
//
//   .i 2
//   .o 1
//   .name example
//   00 0
//   01 3
//   ...
//   .e
//
// Every one of the 4^M input rows must appear exactly once. With `.ordered`, rows
// carry only the output digits and are taken in ascending input order. `.e` is
// optional; '#' starts a comment.

/// Canonical form: explicit input digits, ascending order, terminated by `.e`.
std::string serialize_qtt(const QuaternaryFunction &f);

/// Throws ParseError with the offending line for bad digits, wrong widths, duplicate
/// rows, or missing rows (incomplete tables are rejected).
QuaternaryFunction parse_qtt(std::string_view text);

}  // namespace qsynth4

#endif
