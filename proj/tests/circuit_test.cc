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


#include "qsynth4/circuit.h"

#include <random>

#include "gtest/gtest.h"
#include "qsynth4/netlist.h"

using namespace qsynth4;

TEST(circuit, standard_cost_constants) {
    CostModel m = CostModel::standard();
    EXPECT_EQ(m.cost(GateKind::Feynman), 5);
    EXPECT_EQ(m.cost(GateKind::Toffoli), 17);
    EXPECT_EQ(m.cost(GateKind::Max), 6);
    EXPECT_EQ(m.cost(GateKind::Min), 6);
    EXPECT_EQ(m.cost(GateKind::GQG), 8);
    EXPECT_EQ(m.cost(GateKind::C2CS), 8);
    EXPECT_EQ(m.cost(GateKind::Add), 8);
    EXPECT_EQ(m.cost(GateKind::MS), 1);
    EXPECT_EQ(m.cost(GateKind::Shift), 1);
}

TEST(circuit, custom_cost_model) {
    CostModel m({{GateKind::MS, 2}});
    EXPECT_TRUE(m.has(GateKind::MS));
    EXPECT_FALSE(m.has(GateKind::Add));
    EXPECT_THROW(m.cost(GateKind::Add), std::out_of_range);
    EXPECT_THROW(CostModel({{GateKind::MS, 0}}), std::invalid_argument);
}

TEST(circuit, cost_and_levels) {
    Circuit c;
    WireId a = c.add_input();
    WireId b = c.add_input();
    WireId t = c.add_ancilla();
    WireId u = c.add_ancilla();
    c.append_gate(FeynmanGate{a, t});
    c.append_gate(AddGate{b, u});
    c.append_gate(MaxGate{{t}, u});
    EXPECT_EQ(circuit_cost(c, CostModel::standard()), 5 + 8 + 6);
    EXPECT_EQ(circuit_levels(c), 2);
    EXPECT_EQ(ancilla_count(c), 2);
    auto counts = gate_counts(c);
    EXPECT_EQ(counts[GateKind::Feynman], 1);
    EXPECT_EQ(counts[GateKind::Max], 1);
    EXPECT_EQ(counts.count(GateKind::Toffoli), 0u);
    EXPECT_EQ(circuit_levels(Circuit{}), 0);
}

TEST(circuit, levels_serialize_shared_wires) {
    Circuit c;
    WireId a = c.add_input();
    WireId b = c.add_input();
    WireId d = c.add_input();
    for (int i = 0; i < 3; i++) {
        c.append_gate(MsGate{a, b, shift_translate(Gf4(1))});
    }
    c.append_gate(ShiftGate{d, shift_translate(Gf4(2))});
    EXPECT_EQ(circuit_levels(c), 3);
}

TEST(circuit, validation) {
    Circuit c;
    WireId a = c.add_input();
    WireId b = c.add_input();
    EXPECT_THROW(c.append_gate(FeynmanGate{a, a}), std::invalid_argument);
    EXPECT_THROW(c.append_gate(FeynmanGate{a, 7}), std::invalid_argument);
    EXPECT_THROW(c.append_gate(MaxGate{{}, b}), std::invalid_argument);
    C2csGate bad;
    bad.a = a;
    bad.b = b;
    bad.target = b;
    EXPECT_THROW(c.append_gate(bad), std::invalid_argument);
    WireId t = c.add_ancilla();
    EXPECT_THROW(c.append_gate(make_c2cs(a, b, Gf4(0), Gf4(1), Gf4(1), t)), std::invalid_argument);
    EXPECT_THROW(c.append_gate(make_c2cs(a, b, Gf4(2), Gf4(2), Gf4(1), t)), std::invalid_argument);
    EXPECT_THROW(c.append_gate(make_c2cs(a, b, Gf4(1), Gf4(2), Gf4(0), t)), std::invalid_argument);
    EXPECT_THROW(c.add_output(9, "f"), std::invalid_argument);
    EXPECT_THROW(c.add_wire(WireRole::Input, Gf4(1)), std::invalid_argument);
    EXPECT_TRUE(c.gates().empty());
}

TEST(circuit, c2cs_pair_is_normalized) {
    C2csGate g = make_c2cs(0, 1, Gf4(3), Gf4(1), Gf4(2), 2);
    EXPECT_EQ(g.lo, Gf4(1));
    EXPECT_EQ(g.hi, Gf4(3));
}

TEST(netlist, round_trip_is_byte_stable) {
    Circuit c;
    WireId a = c.add_input();
    WireId b = c.add_input();
    WireId t = c.add_ancilla();
    WireId k = c.add_constant(Gf4(2));
    c.append_gate(MsGate{a, b, shift_by_symbol("x0123")});
    c.append_gate(ShiftGate{a, shift_by_symbol("x13")});
    c.append_gate(FeynmanGate{a, b});
    c.append_gate(ToffoliGate{a, b, t});
    c.append_gate(MaxGate{{a, b}, t});
    c.append_gate(MinGate{{k}, t});
    c.append_gate(make_gqg({a, b}, t, Gf4(1), shift_by_symbol("x+2")));
    c.append_gate(make_c2cs(a, b, Gf4(1), Gf4(3), Gf4(2), t));
    c.append_gate(AddGate{a, b});
    c.add_output(t, "f");
    std::string text = serialize(c);
    Circuit back = parse_netlist(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(serialize(back), text);
}

TEST(netlist, parses_documented_syntax) {
    Circuit c = parse_netlist(
        ".wires 3\n"
        ".input q0\n.input q1\n.ancilla q2\n"
        "# comment line\n"
        "gqg q0 -> q2 [x+0,x+1,x+0,x+0]   # L1\n"
        "c2cs q1 q0 {3,1} +2 -> q2\n"
        ".output f q2\n");
    ASSERT_EQ(c.gates().size(), 2u);
    const auto &g = std::get<GqgGate>(c.gates()[0]);
    EXPECT_EQ(g.shifts[1].symbol(), "x+1");
    const auto &x = std::get<C2csGate>(c.gates()[1]);
    EXPECT_EQ(x.lo, Gf4(1));
    EXPECT_EQ(x.hi, Gf4(3));
    EXPECT_EQ(x.amount, Gf4(2));
    EXPECT_EQ(c.wires()[2].init, Gf4(0));
    ASSERT_EQ(c.outputs().size(), 1u);
    EXPECT_EQ(c.outputs()[0].name, "f");
}

TEST(netlist, errors_cite_location) {
    auto line_of = [](const std::string &text) {
        try {
            parse_netlist(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of(".wires 2\n.input q0\n.input q1\nms q0 q1 x0124\n"), 4);
    EXPECT_EQ(line_of(".wires 2\n.input q0\n.input q1\nfeynman q0 q5\n"), 4);
    EXPECT_EQ(line_of(".wires 2\n.input q0\n.input q0\n"), 3);
    // Undeclared wires are reported at the end of the input.
    EXPECT_EQ(line_of(".wires 2\n.input q0\n"), 3);
    EXPECT_EQ(line_of(".wires 1\n.input q0\nfrobnicate q0\n"), 3);
    EXPECT_EQ(line_of(".wires 2\n.input q0\n.ancilla q1 = 4\n"), 3);
    EXPECT_EQ(line_of(".wires 3\n.input q0\n.input q1\n.ancilla q2\nc2cs q0 q1 {0,1} +1 -> q2\n"), 5);
}

TEST(netlist, gate_lines) {
    Gate g = parse_gate("max q0 q1 -> q2");
    EXPECT_EQ(format_gate(g), "max q0 q1 -> q2");
    EXPECT_EQ(format_gate(parse_gate("shift q1 x^{0123}")), "shift q1 x0123");
    EXPECT_THROW(parse_gate("ms q0 q3 x+1", 2), ParseError);
}

namespace {

Gate random_gate(std::mt19937_64 &rng, int wires) {
    auto w = [&]() { return static_cast<WireId>(rng() % wires); };
    std::vector<WireId> ws;
    while (ws.size() < 3) {
        WireId x = w();
        if (std::find(ws.begin(), ws.end(), x) == ws.end()) {
            ws.push_back(x);
        }
    }
    const ShiftOp &s = shift_catalog()[rng() % 24];
    switch (rng() % 9) {
        case 0:
            return MsGate{ws[0], ws[1], s};
        case 1:
            return ShiftGate{ws[0], s};
        case 2:
            return FeynmanGate{ws[0], ws[1]};
        case 3:
            return ToffoliGate{ws[0], ws[1], ws[2]};
        case 4:
            return MaxGate{{ws[0], ws[1]}, ws[2]};
        case 5:
            return MinGate{{ws[0]}, ws[2]};
        case 6:
            return make_gqg({ws[0], ws[1]}, ws[2], Gf4(rng() % 4), s);
        case 7:
            return make_c2cs(ws[0], ws[1], Gf4(1), Gf4(2 + rng() % 2), Gf4(1 + rng() % 3), ws[2]);
        default:
            return AddGate{ws[0], ws[1]};
    }
}

}  // namespace

TEST(circuit, cost_additive_and_levels_bounded) {
    std::mt19937_64 rng(3);
    CostModel m = CostModel::standard();
    for (int t = 0; t < 50; t++) {
        Circuit a, b, ab;
        for (int i = 0; i < 4; i++) {
            a.add_input();
            b.add_input();
            ab.add_input();
        }
        int na = rng() % 6, nb = rng() % 6;
        for (int i = 0; i < na + nb; i++) {
            Gate g = random_gate(rng, 4);
            (i < na ? a : b).append_gate(g);
            ab.append_gate(g);
        }
        EXPECT_EQ(circuit_cost(ab, m), circuit_cost(a, m) + circuit_cost(b, m));
        EXPECT_LE(circuit_levels(ab), static_cast<int>(ab.gates().size()));
        EXPECT_LE(circuit_levels(ab), circuit_levels(a) + circuit_levels(b));
    }
    Circuit shared;
    shared.add_input();
    shared.add_input();
    for (int i = 0; i < 9; i++) {
        shared.append_gate(i % 2 ? Gate{AddGate{0, 1}} : Gate{MsGate{1, 0, shift_translate(Gf4(2))}});
    }
    EXPECT_EQ(circuit_levels(shared), 9);
}

TEST(circuit, duplicate_wires_rejected_per_kind) {
    const ShiftOp &s = shift_translate(Gf4(1));
    std::vector<Gate> bad{
        MsGate{0, 0, s},
        FeynmanGate{1, 1},
        ToffoliGate{0, 0, 1},
        ToffoliGate{0, 1, 1},
        ToffoliGate{1, 0, 1},
        MaxGate{{0, 0}, 1},
        MaxGate{{0}, 0},
        MinGate{{1, 0}, 1},
        make_gqg({0, 0}, 1, Gf4(1), s),
        make_gqg({0}, 0, Gf4(1), s),
        make_c2cs(0, 0, Gf4(1), Gf4(2), Gf4(1), 1),
        make_c2cs(0, 1, Gf4(1), Gf4(2), Gf4(1), 1),
        AddGate{2, 2},
    };
    for (const Gate &g : bad) {
        EXPECT_THROW(validate_gate(g, 3), std::invalid_argument) << format_gate(g);
    }
}
