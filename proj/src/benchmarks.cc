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


#include "qsynth4/benchmarks.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qsynth4 {

namespace {

constexpr std::array<std::string_view, 5> kGenerators{"halfadd", "fulladd", "sum2", "mul2", "arb2"};
constexpr std::array<std::string_view, 8> kBenchmarks{"halfadd", "fulladd", "sum2", "mul2",
                                                      "xor5",    "rd53",    "rd73", "ham3"};
constexpr std::array<int, 16> kArb2{0, 3, 1, 2, 3, 3, 2, 0, 1, 2, 1, 3, 2, 1, 3, 2};

const std::array<ReferenceRow, 8> kReference{{
    {"halfadd", 36, 6, 6, 23, 46, 114, true},
    {"fulladd", 120, 17, 17, 40, 128, 304, true},
    {"sum2", 24, 0, 4, std::nullopt, 8, std::nullopt, true},
    {"mul2", 16, 5, 5, std::nullopt, 40, std::nullopt, true},
    {"ham3", 135, 95, 25, std::nullopt, 135, std::nullopt, false},
    {"rd53", 275, 245, 15, std::nullopt, 120, std::nullopt, false},
    {"rd73", 475, 435, 35, std::nullopt, 280, std::nullopt, false},
    {"xor5", 150, 120, 7, std::nullopt, 56, std::nullopt, false},
}};

}  // namespace

std::span<const std::string_view> generator_names() {
    return kGenerators;
}

bool is_generator(std::string_view name) {
    return std::find(kGenerators.begin(), kGenerators.end(), name) != kGenerators.end();
}

QuaternaryFunction make_generator(std::string_view name) {
    if (name == "halfadd") {
        QuaternaryFunction f(2, 2, "halfadd");
        for (size_t r = 0; r < f.num_rows(); r++) {
            auto in = f.inputs_of(r);
            int total = in[0].value() + in[1].value();
            f.set_output(r, 0, Gf4(total % 4));
            f.set_output(r, 1, Gf4(total >= 4 ? 1 : 0));
        }
        return f;
    }
    if (name == "fulladd") {
        QuaternaryFunction f(3, 2, "fulladd");
        for (size_t r = 0; r < f.num_rows(); r++) {
            auto in = f.inputs_of(r);
            if (in[2].value() >= 2) {
                continue;
            }
            int total = in[0].value() + in[1].value() + in[2].value();
            f.set_output(r, 0, Gf4(total % 4));
            f.set_output(r, 1, Gf4(total >= 4 ? 1 : 0));
        }
        return f;
    }
    if (name == "sum2" || name == "mul2") {
        QuaternaryFunction f(2, 1, std::string(name));
        for (size_t r = 0; r < f.num_rows(); r++) {
            auto in = f.inputs_of(r);
            f.set_output(r, 0, name == "sum2" ? mod4_add(in[0], in[1]) : gf4_mul(in[0], in[1]));
        }
        return f;
    }
    if (name == "arb2") {
        QuaternaryFunction f(2, 1, "arb2");
        for (size_t r = 0; r < f.num_rows(); r++) {
            f.set_output(r, 0, Gf4(kArb2[r]));
        }
        return f;
    }
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::vector<std::string> generator_output_names(std::string_view name) {
    if (name == "halfadd" || name == "fulladd") {
        return {"sum", "carry"};
    }
    make_generator(name);
    return {"f"};
}

std::span<const ReferenceRow> reference_rows() {
    return kReference;
}

const ReferenceRow *find_reference(std::string_view name) {
    for (const ReferenceRow &r : kReference) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

std::span<const std::string_view> benchmark_names() {
    return kBenchmarks;
}

}  // namespace qsynth4
