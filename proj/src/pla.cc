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


#include "qsynth4/pla.h"

#include <charconv>
#include <stdexcept>

#include "qsynth4/parse_error.h"

namespace qsynth4 {

namespace {

int qudits_for(int bits) {
    return (bits + 1) / 2;
}

// Bit i of an n-bit value, read msb-first, after front padding to an even width.
std::vector<Gf4> pack_bits(size_t value, int bits) {
    int padded = 2 * qudits_for(bits);
    std::vector<Gf4> out(qudits_for(bits));
    for (int j = 0; j < static_cast<int>(out.size()); j++) {
        int shift = padded - 2 * (j + 1);
        out[j] = Gf4(static_cast<int>((value >> shift) & 3));
    }
    return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '|')) {
            i++;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '|') {
            j++;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

int parse_count(std::string_view tok, int line_no, const char *what) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 0) {
        throw ParseError(line_no, 0, std::string("bad ") + what + " count '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

BinaryTable::BinaryTable(int num_inputs, int num_outputs) : num_inputs_(num_inputs), num_outputs_(num_outputs) {
    if (num_inputs < 0 || num_outputs < 0 || num_inputs > 2 * kMaxTableInputs) {
        throw std::invalid_argument("binary table size out of range");
    }
    bits_.assign(num_rows() * static_cast<size_t>(num_outputs), 0);
}

BinaryTable parse_pla(std::string_view text) {
    int num_in = -1;
    int num_out = -1;
    BinaryTable t;
    bool sized = false;
    int line_no = 0;
    size_t pos = 0;
    bool ended = false;
    while (pos < text.size() && !ended) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string_view> toks = split_ws(line);
        if (toks.empty()) {
            continue;
        }
        std::string_view head = toks[0];
        if (head[0] == '.') {
            if (head == ".i" || head == ".o") {
                if (toks.size() != 2) {
                    throw ParseError(line_no, 0, std::string("'") + std::string(head) + "' needs one count");
                }
                if (sized) {
                    throw ParseError(line_no, 0, std::string("'") + std::string(head) + "' after the first row");
                }
                (head == ".i" ? num_in : num_out) = parse_count(toks[1], line_no, head == ".i" ? "input" : "output");
            } else if (head == ".e" || head == ".end") {
                ended = true;
            } else if (head == ".p" || head == ".ilb" || head == ".ob" || head == ".type" || head == ".mv" ||
                       head == ".model" || head == ".phase") {
                continue;
            } else {
                throw ParseError(line_no, 1, "unknown directive '" + std::string(head) + "'");
            }
            continue;
        }
        if (num_in < 0 || num_out < 0) {
            throw ParseError(line_no, 1, "row before '.i' and '.o'");
        }
        if (!sized) {
            if (num_in > 2 * kMaxTableInputs) {
                throw ParseError(line_no, 0, "too many input bits (" + std::to_string(num_in) + ")");
            }
            t = BinaryTable(num_in, num_out);
            sized = true;
        }
        std::string_view in;
        std::string_view out;
        if (toks.size() == 2) {
            in = toks[0];
            out = toks[1];
        } else if (toks.size() == 1 && static_cast<int>(toks[0].size()) == num_in + num_out) {
            in = toks[0].substr(0, num_in);
            out = toks[0].substr(num_in);
        } else {
            throw ParseError(line_no, 1, "expected '<inputs> <outputs>'");
        }
        int col = static_cast<int>(in.data() - line.data()) + 1;
        if (static_cast<int>(in.size()) != num_in) {
            throw ParseError(line_no, col,
                             "expected " + std::to_string(num_in) + " input bits, got " + std::to_string(in.size()));
        }
        size_t row = 0;
        for (size_t i = 0; i < in.size(); i++) {
            char ch = in[i];
            if (ch == '-') {
                throw ParseError(line_no, col + static_cast<int>(i), "don't-care inputs are not supported");
            }
            if (ch != '0' && ch != '1') {
                throw ParseError(line_no, col + static_cast<int>(i), std::string("bad input bit '") + ch + "'");
            }
            row = 2 * row + (ch == '1');
        }
        int ocol = static_cast<int>(out.data() - line.data()) + 1;
        if (static_cast<int>(out.size()) != num_out) {
            throw ParseError(line_no, ocol,
                             "expected " + std::to_string(num_out) + " output bits, got " + std::to_string(out.size()));
        }
        for (int k = 0; k < num_out; k++) {
            char ch = out[k];
            if (ch == '1') {
                t.set_bit(row, k, true);
            } else if (ch == '-') {
                throw ParseError(line_no, ocol + k, "don't-care outputs are not supported");
            } else if (ch != '0' && ch != '~') {
                throw ParseError(line_no, ocol + k, std::string("bad output bit '") + ch + "'");
            }
        }
    }
    if (num_in < 0 || num_out < 0) {
        throw ParseError(line_no, 0, "missing '.i' or '.o' header");
    }
    if (!sized) {
        t = BinaryTable(num_in, num_out);
    }
    return t;
}

std::string serialize_pla(const BinaryTable &t) {
    std::string out = ".i " + std::to_string(t.num_inputs()) + "\n.o " + std::to_string(t.num_outputs()) + "\n";
    out += ".p " + std::to_string(t.num_rows()) + "\n";
    for (size_t r = 0; r < t.num_rows(); r++) {
        for (int i = t.num_inputs() - 1; i >= 0; i--) {
            out += ((r >> i) & 1) ? '1' : '0';
        }
        out += ' ';
        for (int k = 0; k < t.num_outputs(); k++) {
            out += t.bit(r, k) ? '1' : '0';
        }
        out += '\n';
    }
    out += ".e\n";
    return out;
}

QuaternaryFunction pack_binary(const BinaryTable &t, std::string name) {
    QuaternaryFunction f(qudits_for(t.num_inputs()), qudits_for(t.num_outputs()), std::move(name));
    for (size_t r = 0; r < t.num_rows(); r++) {
        size_t qrow = QuaternaryFunction::row_of(pack_bits(r, t.num_inputs()));
        size_t value = 0;
        for (int k = 0; k < t.num_outputs(); k++) {
            value = 2 * value + (t.bit(r, k) ? 1 : 0);
        }
        std::vector<Gf4> outs = pack_bits(value, t.num_outputs());
        for (size_t k = 0; k < outs.size(); k++) {
            f.set_output(qrow, static_cast<int>(k), outs[k]);
        }
    }
    return f;
}

BinaryTable unpack_binary(const QuaternaryFunction &f, int num_inputs, int num_outputs) {
    if (f.num_inputs() != qudits_for(num_inputs) || f.num_outputs() != qudits_for(num_outputs)) {
        throw std::invalid_argument("function shape does not match the bit counts");
    }
    BinaryTable t(num_inputs, num_outputs);
    int padded = 2 * qudits_for(num_outputs);
    for (size_t r = 0; r < t.num_rows(); r++) {
        std::span<const Gf4> outs = f.outputs(QuaternaryFunction::row_of(pack_bits(r, num_inputs)));
        size_t value = 0;
        for (Gf4 d : outs) {
            value = 4 * value + static_cast<size_t>(d.value());
        }
        if (padded != num_outputs && (value >> num_outputs) != 0) {
            throw std::invalid_argument("output sets a padding bit");
        }
        for (int k = 0; k < num_outputs; k++) {
            t.set_bit(r, k, (value >> (num_outputs - 1 - k)) & 1);
        }
    }
    return t;
}

QuaternaryFunction ingest_pla(std::string_view text, std::string name) {
    return pack_binary(parse_pla(text), std::move(name));
}

}  // namespace qsynth4
