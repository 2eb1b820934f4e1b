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


#ifndef QSYNTH4_PLA_H
#define QSYNTH4_PLA_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsynth4/function.h"

namespace qsynth4 {

/// Completely specified binary table. Row index reads the inputs as a binary number
/// with input bit 0 most significant.
class BinaryTable {
   public:
    BinaryTable() = default;
    /// Throws std::invalid_argument beyond 2 * kMaxTableInputs input bits.
    BinaryTable(int num_inputs, int num_outputs);

    int num_inputs() const { return num_inputs_; }
    int num_outputs() const { return num_outputs_; }
    size_t num_rows() const { return size_t{1} << num_inputs_; }
    bool bit(size_t row, int k) const { return bits_[row * num_outputs_ + k] != 0; }
    void set_bit(size_t row, int k, bool v) { bits_[row * num_outputs_ + k] = v ? 1 : 0; }

    bool operator==(const BinaryTable &) const = default;

   private:
    int num_inputs_ = 0;
    int num_outputs_ = 0;
    std::vector<uint8_t> bits_;
};

/// Two-level binary table in the usual .i/.o/.p/.e form. Rows not listed are 0 and
/// rows listed more than once are OR'd. Don't-care input or output bits are rejected.
BinaryTable parse_pla(std::string_view text);

/// Every row listed explicitly, ascending.
std::string serialize_pla(const BinaryTable &t);

/// Packs bit pairs into qudits, high bit first within a pair and the first pair in
/// qudit 0. An odd bit count is padded with a constant-0 bit in front of bit 0.
/// Quaternary rows that set a padding bit lie outside the binary domain and map to 0.
QuaternaryFunction pack_binary(const BinaryTable &t, std::string name = {});

/// Inverse of pack_binary for tables packed from `num_inputs` x `num_outputs` bits.
BinaryTable unpack_binary(const QuaternaryFunction &f, int num_inputs, int num_outputs);

QuaternaryFunction ingest_pla(std::string_view text, std::string name = {});

}  // namespace qsynth4

#endif
