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

#ifndef QSYNTH4_NETLIST_H
#define QSYNTH4_NETLIST_H

#include <string>
#include <string_view>

#include "qsynth4/circuit.h"
#include "qsynth4/parse_error.h"

namespace qsynth4 {

// Line-oriented netlist text:
//
//   .wires 3
//   .input q0
//   .input q1
//   .ancilla q2 = 0
//   .const q3 = 2
//   .output f q2
//   ms q0 q1 x+1
//   shift q0 x0123
//   feynman q0 q1
//   toffoli q0 q1 q2
//   max q0 q1 -> q2
//   min q0 q1 -> q2
//   gqg q0 q1 -> q2 [x+0,x+1,x+0,x+0]
//   c2cs q0 q1 {1,3} +2 -> q2
//   add q0 q1
//
// '#' starts a comment. `serialize` emits exactly this canonical form, so
// serialize(parse(serialize(c))) == serialize(c).

std::string serialize(const Circuit &c);

/// Throws ParseError with line and column on malformed input. `first_line` offsets the
/// reported line numbers when the text is a slice of a larger file.
Circuit parse_netlist(std::string_view text, int first_line = 1);

/// One gate in netlist syntax, without a trailing newline.
std::string format_gate(const Gate &g);

/// Parses a single gate line. Wire ids are range-checked against `num_wires` only if
/// it is non-negative.
Gate parse_gate(std::string_view line, int num_wires = -1, int line_no = 1);

}  // namespace qsynth4

#endif
