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


#include "qsynth4/synth.h"

#include <chrono>

#include "gtest/gtest.h"
#include "qsynth4/benchmarks.h"
#include "qsynth4/simulator.h"
#include "test_util.h"

using namespace qsynth4;
using namespace qsynth4::testing;

namespace {

// Evaluation oracle written against the definitions, independent of eval_expr.
int oracle_factor(const Factor &f, const std::vector<Gf4> &in) {
    if (const auto *l = std::get_if<Literal>(&f)) {
        bool all = true;
        for (int v : l->vars) {
            all &= in[v] == l->proj.index;
        }
        bool hit = all != l->proj.complemented;
        return hit ? static_cast<int>(l->proj.family) : 0;
    }
    if (const auto *p = std::get_if<PairMerge>(&f)) {
        int a = in[p->a].value(), b = in[p->b].value();
        int lo = p->lo.value(), hi = p->hi.value();
        return ((a == lo && b == hi) || (a == hi && b == lo)) ? p->level.value() : 0;
    }
    return std::get<Constant>(f).value.value();
}

int oracle_expr(const Expr &e, const std::vector<Gf4> &in) {
    int sum = 0;
    for (const Product &p : e.terms) {
        int prod = 3;
        for (const Factor &f : p.factors) {
            prod = std::min(prod, oracle_factor(f, in));
        }
        sum = std::max(sum, prod);
    }
    return sum;
}

void expect_same_function(const Expr &a, const Expr &b, int m) {
    for (size_t r = 0; r < (size_t{1} << (2 * m)); r++) {
        auto in = digits_of(r, m);
        ASSERT_EQ(oracle_expr(a, in), oracle_expr(b, in)) << to_string(a) << " vs " << to_string(b) << " at "
                                                          << digits(in);
    }
}

Expr sum_of(int m, std::vector<Product> terms) {
    Expr e;
    e.num_vars = m;
    e.terms = std::move(terms);
    return e;
}

constexpr Family kFamilies[3] = {Family::L, Family::J, Family::P};

}  // namespace

TEST(expr, eval_matches_oracle) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; t++) {
        int m = 1 + t % 3;
        Expr e = random_expr(rng, m);
        for (size_t r = 0; r < (size_t{1} << (2 * m)); r++) {
            auto in = digits_of(r, m);
            ASSERT_EQ(eval_expr(e, in).value(), oracle_expr(e, in)) << to_string(e);
        }
    }
}

TEST(expr, eval_errors_and_forms) {
    Expr e = sum_of(2, {Product{{make_literal(Family::P, Gf4(1), {0, 1})}}});
    std::vector<Gf4> ones{Gf4(1), Gf4(1)};
    std::vector<Gf4> onetwo{Gf4(1), Gf4(2)};
    EXPECT_EQ(eval_expr(e, ones), Gf4(3));
    EXPECT_EQ(eval_expr(e, onetwo), Gf4(0));
    std::vector<Gf4> short_in{Gf4(1)};
    EXPECT_THROW(eval_expr(e, short_in), std::invalid_argument);
    EXPECT_EQ(to_string(e), "P1(x0,x1)");
    EXPECT_EQ(to_string(sum_of(1, {})), "0");
    EXPECT_THROW(make_literal(Family::L, Gf4(0), {}), std::invalid_argument);
    EXPECT_THROW(make_pair_merge(0, 0, Gf4(1), Gf4(2), Gf4(1)), std::invalid_argument);
    EXPECT_THROW(make_pair_merge(0, 1, Gf4(2), Gf4(2), Gf4(1)), std::invalid_argument);
}

TEST(rules, one_through_six_pointwise) {
    for (Family fam : kFamilies) {
        Gf4 top = fire_value(fam);
        for (Gf4 i : kAllDigits) {
            Projection p{fam, i, false};
            Projection pc{fam, i, true};
            for (Gf4 a : kAllDigits) {
                Gf4 x = projection(p, a);
                EXPECT_EQ(qmin(x, Gf4(0)), Gf4(0));                                     // 1
                EXPECT_EQ(qmin(x, top), x);                                             // 2
                EXPECT_EQ(qmax(x, Gf4(0)), x);                                          // 3
                EXPECT_EQ(qmax(x, top), top);                                           // 4
                EXPECT_EQ(qmin(x, projection(pc, a)), Gf4(0));                          // 5
                EXPECT_EQ(qmax(x, projection(pc, a)), top);                             // 6
            }
        }
    }
}

TEST(rules, eight_and_nine_pointwise) {
    for (Family fam : kFamilies) {
        for (Gf4 i : kAllDigits) {
            Projection p{fam, i, false};
            for (Gf4 a : kAllDigits) {
                EXPECT_EQ(qmin(projection(p, a), projection(p, a)), projection(p, a));
            }
            for (int arity = 1; arity <= 3; arity++) {
                std::vector<int> vars;
                for (int v = 0; v < arity; v++) {
                    vars.push_back(v);
                }
                Literal merged = make_literal(fam, i, vars);
                for (size_t r = 0; r < (size_t{1} << (2 * arity)); r++) {
                    auto in = digits_of(r, arity);
                    Gf4 chain = fire_value(fam);
                    for (Gf4 a : in) {
                        chain = qmin(chain, projection(p, a));
                    }
                    EXPECT_EQ(eval_factor(merged, in), chain);
                }
            }
        }
    }
}

TEST(rules, seven_pair_merges_preserve_evaluation) {
    for (Family fam : kFamilies) {
        for (int i = 1; i <= 3; i++) {
            for (int j = i + 1; j <= 3; j++) {
                Expr e = sum_of(2, {Product{{make_literal(fam, Gf4(i), {0}), make_literal(fam, Gf4(j), {1})}},
                                    Product{{make_literal(fam, Gf4(j), {0}), make_literal(fam, Gf4(i), {1})}}});
                SimplifyStats stats;
                Expr s = simplify(e, {}, &stats);
                EXPECT_EQ(stats.pair_merges, 1);
                ASSERT_EQ(s.terms.size(), 1u);
                ASSERT_EQ(s.terms[0].factors.size(), 1u);
                const auto &pm = std::get<PairMerge>(s.terms[0].factors[0]);
                EXPECT_EQ(pm.lo.value(), i);
                EXPECT_EQ(pm.hi.value(), j);
                EXPECT_EQ(pm.level, fire_value(fam));
                expect_same_function(e, s, 2);
            }
        }
    }
}

TEST(rules, zero_pairs_are_not_merged) {
    Expr e = sum_of(2, {Product{{make_literal(Family::L, Gf4(0), {0}), make_literal(Family::L, Gf4(2), {1})}},
                        Product{{make_literal(Family::L, Gf4(2), {0}), make_literal(Family::L, Gf4(0), {1})}}});
    SimplifyStats stats;
    Expr s = simplify(e, {}, &stats);
    EXPECT_EQ(s.terms.size(), 2u);
    EXPECT_EQ(stats.pair_merges, 0);
    EXPECT_EQ(stats.zero_pairs_skipped, 1);
    // The merged reading would also evaluate correctly; it is only outside the gate's domain.
    Expr merged = sum_of(2, {Product{{make_pair_merge(0, 1, Gf4(0), Gf4(2), Gf4(1))}}});
    expect_same_function(e, merged, 2);
}

TEST(rules, worked_instances) {
    Expr e = sum_of(2, {Product{{make_literal(Family::L, Gf4(3), {0}), make_literal(Family::L, Gf4(1), {1})}},
                        Product{{make_literal(Family::L, Gf4(1), {0}), make_literal(Family::L, Gf4(3), {1})}}});
    EXPECT_EQ(to_string(simplify(e)), "C2CS{1,3}(x0,x1;1)");
    Expr p = sum_of(2, {Product{{make_literal(Family::P, Gf4(1), {0}), make_literal(Family::P, Gf4(1), {1})}}});
    EXPECT_EQ(to_string(simplify(p)), "P1(x0,x1)");
    Expr dup = sum_of(1, {Product{{make_literal(Family::J, Gf4(2), {0}), make_literal(Family::J, Gf4(2), {0})}}});
    SimplifyStats st;
    EXPECT_EQ(to_string(simplify(dup, {}, &st)), "J2(x0)");
    EXPECT_GE(st.idempotent, 1);
    Expr comp = sum_of(1, {Product{{make_literal(Family::J, Gf4(2), {0})}},
                           Product{{make_literal(Family::J, Gf4(2), {0}, true)}}});
    EXPECT_EQ(to_string(simplify(comp)), "2");
    Expr kill = sum_of(1, {Product{{make_literal(Family::J, Gf4(2), {0}), make_literal(Family::J, Gf4(2), {0}, true)}}});
    EXPECT_TRUE(simplify(kill).terms.empty());
}

TEST(rules, random_simplify_preserves_evaluation) {
    std::mt19937_64 rng(2026);
    auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < 1000; t++) {
        int m = 1 + t % 3;
        Expr e = random_expr(rng, m);
        SimplifyOptions opts;
        opts.merge_pairs = t % 4 != 1;
        opts.merge_multi = t % 4 != 2;
        Expr s = simplify(e, opts);
        expect_same_function(e, s, m);
        EXPECT_EQ(simplify(s, opts), s) << "not a fixpoint: " << to_string(e);
    }
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 30.0);
}

TEST(synth, minterms_of_worked_example) {
    QuaternaryFunction f = make_generator("arb2");
    std::vector<Minterm> ms = extract_minterms(f);
    EXPECT_EQ(ms.size(), 14u);
    std::vector<std::string> level1;
    int level2 = 0, level3 = 0;
    bool has33 = false;
    for (const Minterm &m : ms) {
        std::string v;
        for (auto [var, val] : m.literals) {
            v += to_char(val);
        }
        if (m.level == Gf4(1)) {
            level1.push_back(v);
        } else if (m.level == Gf4(2)) {
            level2++;
            has33 |= v == "33";
        } else {
            level3++;
        }
    }
    EXPECT_EQ(level1, (std::vector<std::string>{"02", "20", "22", "31"}));
    EXPECT_EQ(level2, 5);
    EXPECT_EQ(level3, 5);
    EXPECT_TRUE(has33);
    EXPECT_TRUE(extract_minterms(QuaternaryFunction(2, 1)).empty());
}

TEST(synth, minterm_expression_reproduces_function) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; t++) {
        int m = 1 + t % 3;
        QuaternaryFunction f = random_function(rng, m, 1);
        Expr e = build_expression(extract_minterms(f), m);
        EXPECT_TRUE(is_family_consistent(e));
        for (size_t r = 0; r < f.num_rows(); r++) {
            ASSERT_EQ(eval_expr(e, f.inputs_of(r)), f.output(r, 0));
        }
    }
}

TEST(synth, build_expression_families) {
    std::vector<Minterm> ms{Minterm{{{0, Gf4(0)}, {1, Gf4(2)}}, Gf4(1)}, Minterm{{{0, Gf4(1)}, {1, Gf4(0)}}, Gf4(3)}};
    Expr e = build_expression(ms, 2);
    EXPECT_EQ(to_string(e), "L0(x0)L2(x1) + P1(x0)P0(x1)");
    EXPECT_TRUE(build_expression({}, 2).terms.empty());
    Expr arb = build_expression(extract_minterms(make_generator("arb2")), 2);
    std::vector<Gf4> ones{Gf4(1), Gf4(1)};
    EXPECT_EQ(eval_expr(arb, ones), Gf4(3));
}

TEST(synth, worked_example_simplified_form) {
    QuaternaryFunction f = make_generator("arb2");
    Expr s = simplify(build_expression(extract_minterms(f), 2));
    std::string text = to_string(s);
    EXPECT_NE(text.find("L2(x0,x1)"), std::string::npos) << text;
    EXPECT_NE(text.find("J3(x0,x1)"), std::string::npos) << text;
    EXPECT_NE(text.find("P1(x0,x1)"), std::string::npos) << text;
    EXPECT_NE(text.find("C2CS{1,2}(x0,x1;2)"), std::string::npos) << text;
    EXPECT_NE(text.find("C2CS{2,3}(x0,x1;3)"), std::string::npos) << text;
    expect_same_function(build_expression(extract_minterms(f), 2), s, 2);
}

TEST(synth, lowering_shapes) {
    Expr single = sum_of(1, {Product{{make_literal(Family::L, Gf4(2), {0})}}});
    Circuit c = lower(single);
    ASSERT_EQ(c.gates().size(), 1u);
    const auto &g = std::get<GqgGate>(c.gates()[0]);
    EXPECT_EQ(g.shifts[2].symbol(), "x+1");
    EXPECT_TRUE(g.shifts[0].is_identity() && g.shifts[1].is_identity() && g.shifts[3].is_identity());
    EXPECT_EQ(c.outputs()[0].wire, g.target);

    Expr pm = sum_of(2, {Product{{make_pair_merge(0, 1, Gf4(1), Gf4(3), Gf4(2))}}});
    Circuit cp = lower(pm);
    ASSERT_EQ(cp.gates().size(), 1u);
    const auto &x = std::get<C2csGate>(cp.gates()[0]);
    EXPECT_EQ(x.amount, Gf4(2));
    EXPECT_EQ(x.lo, Gf4(1));
    EXPECT_EQ(x.hi, Gf4(3));

    Expr two = sum_of(2, {Product{{make_literal(Family::J, Gf4(1), {0}), make_literal(Family::J, Gf4(3), {1})}},
                          Product{{make_literal(Family::J, Gf4(0), {0}), make_literal(Family::J, Gf4(0), {1})}}});
    for (bool fresh : {false, true}) {
        LowerOptions lo;
        lo.fresh_min_max_targets = fresh;
        Circuit ct = lower(two, lo);
        auto counts = gate_counts(ct);
        EXPECT_EQ(counts[GateKind::GQG], 4);
        EXPECT_EQ(counts[GateKind::Min], 2);
        EXPECT_EQ(counts[GateKind::Max], 1);
        EXPECT_TRUE(lint_max_min(ct, fresh).empty());
        for (size_t r = 0; r < 16; r++) {
            auto in = digits_of(r, 2);
            BasisState st = run(ct, in);
            EXPECT_EQ(st[ct.outputs()[0].wire].value(), oracle_expr(two, in));
        }
    }
}

TEST(synth, worked_example_round_trip) {
    QuaternaryFunction f = make_generator("arb2");
    SynthResult r = synth(f);
    EXPECT_EQ(truth_table(r.circuit), f);
    EXPECT_EQ(r.stats.n + r.stats.p + r.stats.s, 14);
    EXPECT_EQ(r.stats.max_ancilla, 28);
    EXPECT_LE(r.stats.reduced_ancilla, r.stats.max_ancilla);
    EXPECT_EQ(r.stats.reduced_ancilla, ancilla_count(r.circuit));
    EXPECT_EQ(r.stats.cost, circuit_cost(r.circuit, CostModel::standard()));
    EXPECT_EQ(r.stats.levels, circuit_levels(r.circuit));
}

TEST(synth, random_functions_round_trip) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 120; t++) {
        int m = 1 + t % 3;
        int k = 1 + t % 2;
        QuaternaryFunction f = random_function(rng, m, k);
        SynthOptions opts;
        opts.lower.fresh_min_max_targets = t % 5 == 0;
        opts.simplify.merge_pairs = t % 7 != 0;
        SynthResult r = synth(f, opts);
        ASSERT_EQ(truth_table(r.circuit), f);
        if (!opts.lower.fresh_min_max_targets) {
            EXPECT_LE(r.stats.reduced_ancilla, r.stats.max_ancilla);
        }
        EXPECT_TRUE(lint_max_min(r.circuit, opts.lower.fresh_min_max_targets).empty());
    }
}

TEST(synth, adders_and_bounds) {
    SynthResult h = synth(make_generator("halfadd"));
    EXPECT_LE(h.stats.max_ancilla, 36);
    EXPECT_EQ(h.stats.max_ancilla, 36);
    EXPECT_EQ(h.stats.outputs.size(), 2u);
    SynthResult fa = synth(make_generator("fulladd"));
    EXPECT_EQ(fa.stats.max_ancilla, 120);
    EXPECT_LE(fa.stats.reduced_ancilla, fa.stats.max_ancilla);
}

TEST(synth, constant_zero_function) {
    SynthResult r = synth(QuaternaryFunction(2, 1));
    EXPECT_EQ(r.stats.cost, 0);
    ASSERT_EQ(r.circuit.outputs().size(), 1u);
    const Wire &w = r.circuit.wires()[r.circuit.outputs()[0].wire];
    EXPECT_EQ(w.role, WireRole::Constant);
    EXPECT_EQ(w.init, Gf4(0));
}

TEST(synth, output_names) {
    SynthOptions opts;
    opts.output_names = {"sum", "carry"};
    SynthResult r = synth(make_generator("halfadd"), opts);
    EXPECT_EQ(r.circuit.outputs()[0].name, "sum");
    EXPECT_EQ(r.circuit.outputs()[1].name, "carry");
    SynthResult d = synth(make_generator("halfadd"));
    EXPECT_EQ(d.circuit.outputs()[1].name, "f1");
}
