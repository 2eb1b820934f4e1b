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


#include "qsynth4/simulator.h"

#include <algorithm>
#include <set>
#include <utility>

#include "gtest/gtest.h"
#include "qsynth4/netlist.h"
#include "test_util.h"

using namespace qsynth4;
using namespace qsynth4::testing;

namespace {

Circuit two_wire(const Gate &g) {
    Circuit c;
    c.add_output(c.add_input(), "a");
    c.add_output(c.add_input(), "b");
    c.append_gate(g);
    return c;
}

}  // namespace

TEST(simulator, ms_fires_only_on_three) {
    const ShiftOp &s = shift_by_symbol("x0123");
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            BasisState st{Gf4(a), Gf4(b)};
            apply_gate(st, MsGate{0, 1, s});
            EXPECT_EQ(st[0].value(), a);
            EXPECT_EQ(st[1].value(), a == 3 ? (b + 1) % 4 : b);
        }
    }
}

TEST(simulator, two_and_three_wire_gates) {
    for (size_t r = 0; r < 64; r++) {
        auto v = digits_of(r, 3);
        int a = v[0].value(), b = v[1].value(), c = v[2].value();
        BasisState st(v.begin(), v.end());
        apply_gate(st, FeynmanGate{0, 1});
        EXPECT_EQ(st[1].value(), oracle_add(a, b));
        st.assign(v.begin(), v.end());
        apply_gate(st, AddGate{0, 1});
        EXPECT_EQ(st[1].value(), (a + b) % 4);
        st.assign(v.begin(), v.end());
        apply_gate(st, ToffoliGate{0, 1, 2});
        EXPECT_EQ(st[2].value(), oracle_add(oracle_mul(a, b), c));
        EXPECT_EQ(st[0].value(), a);
        st.assign(v.begin(), v.end());
        apply_gate(st, MaxGate{{0, 1}, 2});
        EXPECT_EQ(st[2].value(), std::max({a, b, c}));
        st.assign(v.begin(), v.end());
        apply_gate(st, MinGate{{0, 1}, 2});
        EXPECT_EQ(st[2].value(), std::min({a, b, c}));
    }
}

TEST(simulator, gqg_needs_common_control_value) {
    GqgGate g;
    g.controls = {0, 1};
    g.target = 2;
    g.shifts = {shift_by_symbol("x+1"), shift_by_symbol("x+2"), shift_by_symbol("x+3"), shift_by_symbol("x12")};
    for (size_t r = 0; r < 64; r++) {
        auto v = digits_of(r, 3);
        BasisState st(v.begin(), v.end());
        apply_gate(st, g);
        Gf4 want = v[0] == v[1] ? g.shifts[v[0].value()](v[2]) : v[2];
        EXPECT_EQ(st[2], want) << digits(v);
    }
}

TEST(simulator, c2cs_fires_on_unordered_pair) {
    C2csGate g = make_c2cs(0, 1, Gf4(1), Gf4(3), Gf4(2), 2);
    for (size_t r = 0; r < 64; r++) {
        auto v = digits_of(r, 3);
        int a = v[0].value(), b = v[1].value(), t = v[2].value();
        BasisState st(v.begin(), v.end());
        apply_gate(st, g);
        bool fire = (a == 1 && b == 3) || (a == 3 && b == 1);
        EXPECT_EQ(st[2].value(), fire ? (t + 2) % 4 : t);
    }
}

TEST(simulator, feynman_and_add_differ_first_at_one_one) {
    Equivalence eq = equivalent(two_wire(FeynmanGate{0, 1}), two_wire(AddGate{0, 1}));
    EXPECT_FALSE(eq.equal);
    ASSERT_TRUE(eq.counterexample.has_value());
    EXPECT_EQ(digits(*eq.counterexample), "11");
    EXPECT_TRUE(eq.exhaustive);
}

TEST(simulator, truth_table_and_function_equivalence) {
    Circuit c = two_wire(AddGate{0, 1});
    QuaternaryFunction f = truth_table(c);
    EXPECT_EQ(f.num_inputs(), 2);
    EXPECT_EQ(f.num_outputs(), 2);
    for (size_t r = 0; r < 16; r++) {
        auto v = f.inputs_of(r);
        EXPECT_EQ(f.output(r, 1), mod4_add(v[0], v[1]));
    }
    EXPECT_TRUE(equivalent(c, f).equal);
    f.set_output(5, 1, Gf4(0));
    Equivalence eq = equivalent(c, f);
    EXPECT_FALSE(eq.equal);
    EXPECT_EQ(digits(*eq.counterexample), "11");
}

TEST(simulator, arity_mismatch_throws) {
    Circuit c = two_wire(AddGate{0, 1});
    QuaternaryFunction f(1, 1);
    EXPECT_THROW(equivalent(c, f), std::invalid_argument);
    std::vector<Gf4> one{Gf4(1)};
    EXPECT_THROW(run(c, one), std::invalid_argument);
}

TEST(simulator, sampled_equivalence) {
    Circuit a = two_wire(FeynmanGate{0, 1});
    Equivalence same = equivalent_sampled(a, a, 50, 3);
    EXPECT_TRUE(same.equal);
    EXPECT_FALSE(same.exhaustive);
    EXPECT_EQ(same.vectors_checked, 50u);
    Equivalence diff = equivalent_sampled(a, two_wire(AddGate{0, 1}), 200, 3);
    EXPECT_FALSE(diff.equal);
}

TEST(simulator, ancilla_and_constant_wires_start_at_init) {
    Circuit c = parse_netlist(
        ".wires 3\n.input q0\n.ancilla q1 = 2\n.const q2 = 3\n.output f q1\n"
        "max q0 -> q1\nms q2 q0 x0123\n");
    std::vector<Gf4> in{Gf4(1)};
    BasisState st = run(c, in);
    EXPECT_EQ(st[1], Gf4(2));
    EXPECT_EQ(st[0], Gf4(2));
}

TEST(simulator, lint_max_min_targets) {
    Circuit c = parse_netlist(".wires 3\n.input q0\n.input q1\n.ancilla q2 = 0\nmax q0 -> q1\n");
    EXPECT_FALSE(lint_max_min(c).empty());
    Circuit ok = parse_netlist(".wires 3\n.input q0\n.input q1\n.ancilla q2 = 0\nmax q0 q1 -> q2\n");
    EXPECT_TRUE(lint_max_min(ok).empty());
    EXPECT_TRUE(lint_max_min(ok, true).empty());
    Circuit bad_init = parse_netlist(".wires 3\n.input q0\n.input q1\n.ancilla q2 = 1\nmin q0 q1 -> q2\n");
    EXPECT_FALSE(lint_max_min(bad_init, true).empty());
}

namespace {

Gate random_reversible(std::mt19937_64 &rng, int wires) {
    std::vector<WireId> ws(wires);
    for (int i = 0; i < wires; i++) {
        ws[i] = i;
    }
    std::shuffle(ws.begin(), ws.end(), rng);
    const ShiftOp &s = shift_catalog()[rng() % 24];
    switch (rng() % 6) {
        case 0:
            return MsGate{ws[0], ws[1], s};
        case 1:
            return FeynmanGate{ws[0], ws[1]};
        case 2:
            return ToffoliGate{ws[0], ws[1], ws[2]};
        case 3: {
            std::vector<WireId> cs(ws.begin() + 1, ws.begin() + 1 + 1 + rng() % (wires - 1));
            GqgGate g;
            g.controls = cs;
            g.target = ws[0];
            for (ShiftOp &x : g.shifts) {
                x = shift_catalog()[rng() % 24];
            }
            return g;
        }
        case 4:
            return make_c2cs(ws[0], ws[1], Gf4(1 + rng() % 2), Gf4(3), Gf4(1 + rng() % 3), ws[2]);
        default:
            return AddGate{ws[0], ws[1]};
    }
}

}  // namespace

TEST(simulator, reversible_circuits_are_bijections) {
    std::mt19937_64 rng(21);
    for (int w = 3; w <= 6; w++) {
        for (int t = 0; t < 4; t++) {
            std::vector<Gate> gates;
            for (int i = 0; i < 8; i++) {
                gates.push_back(random_reversible(rng, w));
            }
            size_t n = size_t{1} << (2 * w);
            std::vector<bool> seen(n, false);
            for (size_t r = 0; r < n; r++) {
                auto v = digits_of(r, w);
                BasisState st(v.begin(), v.end());
                for (const Gate &g : gates) {
                    apply_gate(st, g);
                }
                size_t out = QuaternaryFunction::row_of(st);
                ASSERT_FALSE(seen[out]) << "w=" << w;
                seen[out] = true;
            }
        }
    }
}

TEST(simulator, max_min_are_not_injective) {
    std::set<BasisState> images;
    for (size_t r = 0; r < 16; r++) {
        auto v = digits_of(r, 2);
        images.insert(apply_gate(BasisState(v.begin(), v.end()), MaxGate{{0}, 1}));
    }
    EXPECT_LT(images.size(), 16u);
}

TEST(simulator, gates_touch_only_their_target) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 300; t++) {
        Gate g = random_reversible(rng, 5);
        if (t % 5 == 0) {
            g = MaxGate{{0, 1}, 4};
        } else if (t % 5 == 1) {
            g = MinGate{{2}, 3};
        } else if (t % 5 == 2) {
            g = ShiftGate{static_cast<WireId>(rng() % 5), shift_catalog()[rng() % 24]};
        }
        WireId target = target_of(g);
        auto v = digits_of(rng() % 1024, 5);
        BasisState before(v.begin(), v.end());
        BasisState after = apply_gate(std::as_const(before), g);
        EXPECT_EQ(apply_gate(std::as_const(before), g), after);
        for (int w = 0; w < 5; w++) {
            if (w != target) {
                EXPECT_EQ(after[w], before[w]);
            }
        }
    }
}
