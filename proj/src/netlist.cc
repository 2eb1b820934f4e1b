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

#include "qsynth4/netlist.h"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace qsynth4 {

namespace {

struct Token {
    std::string text;
    int column;
};

// Whitespace split, except that a bracketed group "[...]" or "{...}" stays one token
// even if it contains spaces.
std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            i++;
            continue;
        }
        if (line[i] == '#') {
            break;
        }
        size_t start = i;
        std::string text;
        char close = 0;
        while (i < line.size()) {
            char ch = line[i];
            if (close == 0 && (ch == ' ' || ch == '\t' || ch == '\r' || ch == '#')) {
                break;
            }
            if (ch == '[') {
                close = ']';
            } else if (ch == '{' && close == 0) {
                close = '}';
            } else if (ch == close) {
                close = 0;
            }
            if (ch != ' ' && ch != '\t') {
                text += ch;
            }
            i++;
        }
        if (close != 0) {
            throw ParseError(line_no, static_cast<int>(start) + 1, std::string("missing '") + close + "'");
        }
        out.push_back(Token{text, static_cast<int>(start) + 1});
    }
    return out;
}

class LineParser {
   public:
    LineParser(std::vector<Token> tokens, int line_no, int num_wires)
        : tokens_(std::move(tokens)), line_no_(line_no), num_wires_(num_wires) {}

    bool done() const { return pos_ >= tokens_.size(); }

    [[noreturn]] void fail(const std::string &msg) const {
        int col = pos_ < tokens_.size() ? tokens_[pos_].column : (tokens_.empty() ? 0 : tokens_.back().column);
        throw ParseError(line_no_, col, msg);
    }

    const Token &peek() const {
        if (done()) {
            fail("unexpected end of line");
        }
        return tokens_[pos_];
    }

    std::string take() {
        std::string t = peek().text;
        pos_++;
        return t;
    }

    void expect(std::string_view what) {
        if (done() || tokens_[pos_].text != what) {
            fail("expected '" + std::string(what) + "'");
        }
        pos_++;
    }

    void expect_end() {
        if (!done()) {
            fail("unexpected token '" + tokens_[pos_].text + "'");
        }
    }

    static std::optional<int> to_int(std::string_view s) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size()) {
            return std::nullopt;
        }
        return v;
    }

    bool next_is_wire() const {
        return !done() && tokens_[pos_].text.size() >= 2 && tokens_[pos_].text[0] == 'q' &&
               to_int(std::string_view(tokens_[pos_].text).substr(1)).has_value();
    }

    WireId wire() {
        if (!next_is_wire()) {
            fail("expected a wire like 'q0'");
        }
        int id = *to_int(std::string_view(tokens_[pos_].text).substr(1));
        if (id < 0 || (num_wires_ >= 0 && id >= num_wires_)) {
            fail("unknown wire q" + std::to_string(id));
        }
        pos_++;
        return id;
    }

    std::vector<WireId> wires_until_arrow() {
        std::vector<WireId> ws;
        while (next_is_wire()) {
            ws.push_back(wire());
        }
        if (ws.empty()) {
            fail("expected at least one wire");
        }
        expect("->");
        return ws;
    }

    Gf4 digit() {
        std::string t = peek().text;
        Gf4 d;
        if (t.size() != 1 || !parse_digit(t[0], d)) {
            fail("expected a digit 0..3, got '" + t + "'");
        }
        pos_++;
        return d;
    }

    ShiftOp shift(std::string_view text) const {
        const ShiftOp *op = nullptr;
        if (!try_shift_by_symbol(text, op)) {
            fail("unknown shift symbol '" + std::string(text) + "'");
        }
        return *op;
    }

    ShiftOp shift() {
        std::string t = peek().text;
        ShiftOp s = shift(t);
        pos_++;
        return s;
    }

    std::array<ShiftOp, 4> shift_list() {
        std::string t = peek().text;
        if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
            fail("expected a shift list like [x+0,x+1,x+0,x+0]");
        }
        std::array<ShiftOp, 4> out;
        std::string body = t.substr(1, t.size() - 2);
        std::stringstream ss(body);
        std::string item;
        size_t n = 0;
        while (std::getline(ss, item, ',')) {
            if (n >= 4) {
                fail("shift list must have exactly 4 entries");
            }
            out[n++] = shift(item);
        }
        if (n != 4) {
            fail("shift list must have exactly 4 entries");
        }
        pos_++;
        return out;
    }

    std::pair<Gf4, Gf4> pair() {
        std::string t = peek().text;
        Gf4 i, j;
        if (t.size() != 5 || t[0] != '{' || t[2] != ',' || t[4] != '}' || !parse_digit(t[1], i) ||
            !parse_digit(t[3], j)) {
            fail("expected a value pair like {1,3}");
        }
        pos_++;
        return {i, j};
    }

    Gf4 amount() {
        std::string t = peek().text;
        Gf4 k;
        if (t.size() != 2 || t[0] != '+' || !parse_digit(t[1], k)) {
            fail("expected an amount like +1");
        }
        pos_++;
        return k;
    }

   private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int line_no_;
    int num_wires_;
};

Gate parse_gate_tokens(LineParser &p) {
    std::string op = p.take();
    Gate g;
    if (op == "ms") {
        MsGate x;
        x.control = p.wire();
        x.target = p.wire();
        x.shift = p.shift();
        g = x;
    } else if (op == "shift") {
        ShiftGate x;
        x.target = p.wire();
        x.shift = p.shift();
        g = x;
    } else if (op == "feynman") {
        FeynmanGate x;
        x.a = p.wire();
        x.b = p.wire();
        g = x;
    } else if (op == "toffoli") {
        ToffoliGate x;
        x.a = p.wire();
        x.b = p.wire();
        x.c = p.wire();
        g = x;
    } else if (op == "max") {
        MaxGate x;
        x.inputs = p.wires_until_arrow();
        x.target = p.wire();
        g = x;
    } else if (op == "min") {
        MinGate x;
        x.inputs = p.wires_until_arrow();
        x.target = p.wire();
        g = x;
    } else if (op == "gqg") {
        GqgGate x;
        x.controls = p.wires_until_arrow();
        x.target = p.wire();
        x.shifts = p.shift_list();
        g = x;
    } else if (op == "c2cs") {
        WireId a = p.wire();
        WireId b = p.wire();
        auto [i, j] = p.pair();
        Gf4 k = p.amount();
        p.expect("->");
        WireId t = p.wire();
        g = make_c2cs(a, b, i, j, k, t);
    } else if (op == "add") {
        AddGate x;
        x.a = p.wire();
        x.b = p.wire();
        g = x;
    } else {
        throw ParseError(0, 0, "unknown gate '" + op + "'");
    }
    p.expect_end();
    return g;
}

std::string wire_name(WireId id) {
    return "q" + std::to_string(id);
}

}  // namespace

std::string format_gate(const Gate &g) {
    std::string s = kind_name(kind_of(g));
    auto wires = [&](const std::vector<WireId> &ws) {
        for (WireId w : ws) {
            s += " " + wire_name(w);
        }
    };
    if (const auto *x = std::get_if<MsGate>(&g)) {
        wires({x->control, x->target});
        s += " " + x->shift.symbol();
    } else if (const auto *x = std::get_if<ShiftGate>(&g)) {
        wires({x->target});
        s += " " + x->shift.symbol();
    } else if (const auto *x = std::get_if<FeynmanGate>(&g)) {
        wires({x->a, x->b});
    } else if (const auto *x = std::get_if<ToffoliGate>(&g)) {
        wires({x->a, x->b, x->c});
    } else if (const auto *x = std::get_if<MaxGate>(&g)) {
        wires(x->inputs);
        s += " -> " + wire_name(x->target);
    } else if (const auto *x = std::get_if<MinGate>(&g)) {
        wires(x->inputs);
        s += " -> " + wire_name(x->target);
    } else if (const auto *x = std::get_if<GqgGate>(&g)) {
        wires(x->controls);
        s += " -> " + wire_name(x->target) + " [";
        for (size_t v = 0; v < 4; v++) {
            s += (v ? "," : "") + x->shifts[v].symbol();
        }
        s += "]";
    } else if (const auto *x = std::get_if<C2csGate>(&g)) {
        wires({x->a, x->b});
        s += std::string(" {") + to_char(x->lo) + "," + to_char(x->hi) + "} +" + to_char(x->amount) + " -> " +
             wire_name(x->target);
    } else if (const auto *x = std::get_if<AddGate>(&g)) {
        wires({x->a, x->b});
    }
    return s;
}

Gate parse_gate(std::string_view line, int num_wires, int line_no) {
    LineParser p(tokenize(line, line_no), line_no, num_wires);
    try {
        Gate g = parse_gate_tokens(p);
        if (num_wires >= 0) {
            validate_gate(g, num_wires);
        } else {
            validate_gate(g, 1 << 30);
        }
        return g;
    } catch (const ParseError &e) {
        if (e.line() == 0) {
            throw ParseError(line_no, 1, e.message());
        }
        throw;
    } catch (const std::invalid_argument &e) {
        throw ParseError(line_no, 1, e.what());
    }
}

std::string serialize(const Circuit &c) {
    std::string out = ".wires " + std::to_string(c.num_wires()) + "\n";
    for (const Wire &w : c.wires()) {
        switch (w.role) {
            case WireRole::Input:
                out += ".input " + wire_name(w.id) + "\n";
                break;
            case WireRole::Ancilla:
                out += ".ancilla " + wire_name(w.id) + " = " + to_char(*w.init) + "\n";
                break;
            case WireRole::Constant:
                out += ".const " + wire_name(w.id) + " = " + to_char(*w.init) + "\n";
                break;
        }
    }
    for (const Output &o : c.outputs()) {
        out += ".output " + o.name + " " + wire_name(o.wire) + "\n";
    }
    for (const Gate &g : c.gates()) {
        out += format_gate(g) + "\n";
    }
    return out;
}

Circuit parse_netlist(std::string_view text, int first_line) {
    struct PendingOutput {
        std::string name;
        WireId wire;
        int line;
    };
    int num_wires = -1;
    std::vector<std::optional<Wire>> decls;
    std::vector<PendingOutput> outputs;
    std::vector<std::pair<Gate, int>> gates;
    auto declared_wires = [&]() { return num_wires; };

    int line_no = first_line - 1;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;

        std::vector<Token> tokens = tokenize(line, line_no);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const std::string &head = tokens[0].text;
        if (head[0] != '.') {
            if (num_wires < 0) {
                throw ParseError(line_no, tokens[0].column, "gate before '.wires'");
            }
            gates.emplace_back(parse_gate(line, num_wires, line_no), line_no);
        } else {
            LineParser p(tokens, line_no, declared_wires());
            p.take();
            if (head == ".wires") {
                if (num_wires >= 0) {
                    p.fail("duplicate '.wires'");
                }
                std::string t = p.take();
                auto n = LineParser::to_int(t);
                if (!n || *n < 0) {
                    throw ParseError(line_no, tokens[1].column, "expected a wire count");
                }
                p.expect_end();
                num_wires = *n;
                decls.assign(num_wires, std::nullopt);
            } else if (head == ".input" || head == ".ancilla" || head == ".const") {
                if (num_wires < 0) {
                    p.fail("wire declaration before '.wires'");
                }
                WireId id = p.wire();
                Wire w{id, WireRole::Input, std::nullopt};
                if (head == ".ancilla") {
                    w.role = WireRole::Ancilla;
                    w.init = Gf4(0);
                    if (!p.done()) {
                        p.expect("=");
                        w.init = p.digit();
                    }
                } else if (head == ".const") {
                    w.role = WireRole::Constant;
                    p.expect("=");
                    w.init = p.digit();
                }
                p.expect_end();
                if (decls[id].has_value()) {
                    throw ParseError(line_no, tokens[1].column, "wire q" + std::to_string(id) + " declared twice");
                }
                decls[id] = w;
            } else if (head == ".output") {
                if (num_wires < 0) {
                    p.fail("output before '.wires'");
                }
                std::string name = p.take();
                WireId id = p.wire();
                p.expect_end();
                outputs.push_back(PendingOutput{name, id, line_no});
            } else {
                throw ParseError(line_no, tokens[0].column, "unknown directive '" + head + "'");
            }
        }
        if (end == text.size()) {
            break;
        }
    }
    if (num_wires < 0) {
        throw ParseError(line_no, 0, "missing '.wires'");
    }
    Circuit c;
    for (int id = 0; id < num_wires; id++) {
        if (!decls[id].has_value()) {
            throw ParseError(line_no, 0, "wire q" + std::to_string(id) + " is never declared");
        }
        c.add_wire(decls[id]->role, decls[id]->init);
    }
    for (const PendingOutput &o : outputs) {
        try {
            c.add_output(o.wire, o.name);
        } catch (const std::invalid_argument &e) {
            throw ParseError(o.line, 0, e.what());
        }
    }
    for (auto &[g, where] : gates) {
        c.append_gate(std::move(g));
    }
    return c;
}

}  // namespace qsynth4
