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

#include "qsynth4/function.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qsynth4 {

QuaternaryFunction::QuaternaryFunction(int num_inputs, int num_outputs, std::string name)
    : num_inputs_(num_inputs), num_outputs_(num_outputs), name_(std::move(name)) {
    if (num_inputs < 0 || num_outputs < 0) {
        throw std::invalid_argument("negative input or output count");
    }
    if (num_inputs > kMaxTableInputs) {
        throw std::invalid_argument("truth tables are limited to " + std::to_string(kMaxTableInputs) + " inputs");
    }
    table_.assign(num_rows() * static_cast<size_t>(num_outputs), Gf4(0));
}

std::vector<Gf4> QuaternaryFunction::inputs_of(size_t row) const {
    std::vector<Gf4> v(num_inputs_);
    for (int i = num_inputs_ - 1; i >= 0; i--) {
        v[i] = Gf4(static_cast<int>(row & 3));
        row >>= 2;
    }
    return v;
}

size_t QuaternaryFunction::row_of(std::span<const Gf4> inputs) {
    size_t row = 0;
    for (Gf4 d : inputs) {
        row = (row << 2) | d.value();
    }
    return row;
}

QuaternaryFunction QuaternaryFunction::output_function(int k) const {
    if (k < 0 || k >= num_outputs_) {
        throw std::out_of_range("output index out of range");
    }
    QuaternaryFunction f(num_inputs_, 1, name_);
    for (size_t r = 0; r < num_rows(); r++) {
        f.set_output(r, 0, output(r, k));
    }
    return f;
}

std::string digits(std::span<const Gf4> values) {
    std::string s;
    for (Gf4 d : values) {
        s += to_char(d);
    }
    return s;
}

std::string serialize_qtt(const QuaternaryFunction &f) {
    std::string out = ".i " + std::to_string(f.num_inputs()) + "\n.o " + std::to_string(f.num_outputs()) + "\n";
    if (!f.name().empty()) {
        out += ".name " + f.name() + "\n";
    }
    for (size_t r = 0; r < f.num_rows(); r++) {
        std::vector<Gf4> in = f.inputs_of(r);
        if (!in.empty()) {
            out += digits(in) + " ";
        }
        out += digits(f.outputs(r)) + "\n";
    }
    out += ".e\n";
    return out;
}

namespace {

std::vector<std::pair<std::string, int>> split_tokens(std::string_view line) {
    std::vector<std::pair<std::string, int>> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') {
            break;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            i++;
            continue;
        }
        size_t s = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') {
            i++;
        }
        out.emplace_back(std::string(line.substr(s, i - s)), static_cast<int>(s) + 1);
    }
    return out;
}

int parse_count(const std::string &s, int line, int col) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0) {
        throw ParseError(line, col, "expected a non-negative integer, got '" + s + "'");
    }
    return v;
}

std::vector<Gf4> parse_digits(const std::string &s, size_t width, int line, int col, const char *what) {
    if (s.size() != width) {
        throw ParseError(line, col,
                         std::string(what) + " must have " + std::to_string(width) + " digits, got '" + s + "'");
    }
    std::vector<Gf4> v(width);
    for (size_t i = 0; i < width; i++) {
        if (!parse_digit(s[i], v[i])) {
            throw ParseError(line, col + static_cast<int>(i),
                             std::string("invalid quaternary digit '") + s[i] + "' (expected 0..3)");
        }
    }
    return v;
}

}  // namespace

QuaternaryFunction parse_qtt(std::string_view text) {
    int m = -1;
    int k = -1;
    bool ordered = false;
    std::string name;
    QuaternaryFunction f;
    std::vector<bool> seen;
    size_t next_ordered_row = 0;
    size_t rows_seen = 0;
    bool body_started = false;
    bool ended = false;

    auto ensure_table = [&](int line) {
        if (body_started) {
            return;
        }
        if (m < 0 || k < 0) {
            throw ParseError(line, 0, "row before both '.i' and '.o'");
        }
        try {
            f = QuaternaryFunction(m, k, name);
        } catch (const std::invalid_argument &e) {
            throw ParseError(line, 0, e.what());
        }
        seen.assign(f.num_rows(), false);
        body_started = true;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto toks = split_tokens(line);
        if (toks.empty()) {
            continue;
        }
        if (ended) {
            throw ParseError(line_no, toks[0].second, "content after '.e'");
        }
        const std::string &head = toks[0].first;
        if (head[0] == '.') {
            if (body_started && head != ".e") {
                throw ParseError(line_no, toks[0].second, "directive '" + head + "' after table rows");
            }
            auto arg = [&]() -> const std::pair<std::string, int> & {
                if (toks.size() != 2) {
                    throw ParseError(line_no, toks[0].second, "'" + head + "' takes exactly one argument");
                }
                return toks[1];
            };
            if (head == ".i") {
                m = parse_count(arg().first, line_no, arg().second);
            } else if (head == ".o") {
                k = parse_count(arg().first, line_no, arg().second);
            } else if (head == ".name") {
                name = arg().first;
            } else if (head == ".ordered") {
                ordered = true;
            } else if (head == ".e") {
                ended = true;
            } else {
                throw ParseError(line_no, toks[0].second, "unknown directive '" + head + "'");
            }
            continue;
        }
        ensure_table(line_no);
        size_t row;
        std::vector<Gf4> outs;
        bool inline_inputs = !ordered && m > 0;
        if (inline_inputs) {
            if (toks.size() != 2) {
                throw ParseError(line_no, toks[0].second, "expected '<inputs> <outputs>'");
            }
            auto ins = parse_digits(toks[0].first, m, line_no, toks[0].second, "input field");
            outs = parse_digits(toks[1].first, k, line_no, toks[1].second, "output field");
            row = QuaternaryFunction::row_of(ins);
        } else {
            if (toks.size() != 1) {
                throw ParseError(line_no, toks[1].second, "ordered rows carry only the output digits");
            }
            outs = parse_digits(toks[0].first, k, line_no, toks[0].second, "output field");
            row = next_ordered_row++;
            if (row >= f.num_rows()) {
                throw ParseError(line_no, toks[0].second, "more rows than 4^" + std::to_string(m));
            }
        }
        if (seen[row]) {
            throw ParseError(line_no, toks[0].second, "duplicate row for input " + digits(f.inputs_of(row)));
        }
        seen[row] = true;
        rows_seen++;
        for (int j = 0; j < k; j++) {
            f.set_output(row, j, outs[j]);
        }
    }
    ensure_table(line_no);
    if (rows_seen != f.num_rows()) {
        for (size_t r = 0; r < f.num_rows(); r++) {
            if (!seen[r]) {
                throw ParseError(line_no, 0,
                                 "incomplete truth table: " + std::to_string(f.num_rows() - rows_seen) +
                                     " row(s) missing, first missing input " + digits(f.inputs_of(r)));
            }
        }
    }
    return f;
}

}  // namespace qsynth4
