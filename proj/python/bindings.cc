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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsynth4/benchmarks.h"
#include "qsynth4/lowering.h"
#include "qsynth4/netlist.h"
#include "qsynth4/parse_error.h"
#include "qsynth4/pla.h"
#include "qsynth4/search.h"
#include "qsynth4/simulator.h"
#include "qsynth4/synth.h"

namespace py = pybind11;
using namespace qsynth4;

namespace {

std::vector<Gf4> to_digits(const std::vector<int> &v) {
    std::vector<Gf4> out;
    out.reserve(v.size());
    for (int x : v) {
        out.push_back(Gf4(x));
    }
    return out;
}

std::vector<int> from_digits(std::span<const Gf4> v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (Gf4 x : v) {
        out.push_back(x.value());
    }
    return out;
}

py::dict equivalence_dict(const Equivalence &e) {
    py::dict d;
    d["equal"] = e.equal;
    d["exhaustive"] = e.exhaustive;
    d["vectors_checked"] = e.vectors_checked;
    if (e.counterexample) {
        d["counterexample"] = from_digits(*e.counterexample);
    } else {
        d["counterexample"] = py::none();
    }
    return d;
}

std::map<std::string, int> named_counts(const std::map<GateKind, int> &counts) {
    std::map<std::string, int> out;
    for (const auto &[k, n] : counts) {
        out[kind_name(k)] = n;
    }
    return out;
}

py::dict stats_dict(const SynthStats &s) {
    py::dict d;
    d["n"] = s.n;
    d["p"] = s.p;
    d["s"] = s.s;
    d["max_ancilla"] = s.max_ancilla;
    d["reduced_ancilla"] = s.reduced_ancilla;
    d["cost"] = s.cost;
    d["levels"] = s.levels;
    d["gate_counts"] = named_counts(s.gate_counts);
    py::list outs;
    for (const OutputStats &o : s.outputs) {
        py::dict od;
        od["name"] = o.name;
        od["n"] = o.n;
        od["p"] = o.p;
        od["s"] = o.s;
        od["max_ancilla"] = o.max_ancilla;
        od["ancilla"] = o.ancilla;
        od["expression"] = o.expression;
        outs.append(od);
    }
    d["outputs"] = outs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qsynth4, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SynthesisError>(m, "SynthesisError", PyExc_RuntimeError);

    py::class_<QuaternaryFunction>(m, "Function")
        .def(py::init<int, int, std::string>(), py::arg("num_inputs"), py::arg("num_outputs"),
             py::arg("name") = "")
        .def_property_readonly("num_inputs", &QuaternaryFunction::num_inputs)
        .def_property_readonly("num_outputs", &QuaternaryFunction::num_outputs)
        .def_property_readonly("num_rows", &QuaternaryFunction::num_rows)
        .def_property("name", &QuaternaryFunction::name, &QuaternaryFunction::set_name)
        .def("output", [](const QuaternaryFunction &f, size_t row, int k) { return f.output(row, k).value(); })
        .def("set_output",
             [](QuaternaryFunction &f, size_t row, int k, int v) { f.set_output(row, k, Gf4(v)); })
        .def("outputs", [](const QuaternaryFunction &f, size_t row) { return from_digits(f.outputs(row)); })
        .def("inputs_of", [](const QuaternaryFunction &f, size_t row) { return from_digits(f.inputs_of(row)); })
        .def("__eq__", &QuaternaryFunction::operator==)
        .def("__str__", &serialize_qtt);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("num_wires", &Circuit::num_wires)
        .def_property_readonly("num_gates", [](const Circuit &c) { return c.gates().size(); })
        .def_property_readonly("gates",
                               [](const Circuit &c) {
                                   std::vector<std::string> out;
                                   for (const Gate &g : c.gates()) {
                                       out.push_back(format_gate(g));
                                   }
                                   return out;
                               })
        .def("cost", [](const Circuit &c) { return circuit_cost(c, CostModel::standard()); })
        .def("levels", &circuit_levels)
        .def("ancilla_count", &ancilla_count)
        .def("gate_counts", [](const Circuit &c) { return named_counts(gate_counts(c)); })
        .def("run", [](const Circuit &c, const std::vector<int> &in) { return from_digits(run(c, to_digits(in))); })
        .def("truth_table", &truth_table)
        .def("__eq__", &Circuit::operator==)
        .def("__str__", &serialize);

    m.def("parse_qtt", [](const std::string &text) { return parse_qtt(text); });
    m.def("serialize_qtt", &serialize_qtt);
    m.def("parse_netlist", [](const std::string &text) { return parse_netlist(text); });
    m.def("serialize_netlist", &serialize);
    m.def("ingest_pla", [](const std::string &text, const std::string &name) { return ingest_pla(text, name); },
          py::arg("text"), py::arg("name") = "");

    m.def("generator_names", []() {
        std::vector<std::string> out;
        for (std::string_view n : generator_names()) {
            out.emplace_back(n);
        }
        return out;
    });
    m.def("make_generator", [](const std::string &name) { return make_generator(name); });

    m.def(
        "synth",
        [](const QuaternaryFunction &f, bool fresh_targets, std::vector<std::string> output_names) {
            SynthOptions opt;
            opt.lower.fresh_min_max_targets = fresh_targets;
            opt.output_names = std::move(output_names);
            SynthResult r = synth(f, opt);
            return py::make_tuple(r.circuit, stats_dict(r.stats));
        },
        py::arg("function"), py::arg("fresh_targets") = false,
        py::arg("output_names") = std::vector<std::string>{});

    m.def("equivalent", [](const Circuit &a, const Circuit &b) { return equivalence_dict(equivalent(a, b)); });
    m.def("verify", [](const Circuit &c, const QuaternaryFunction &f) { return equivalence_dict(equivalent(c, f)); });

    m.def("decompose", [](const Circuit &c) { return decompose(c); });
    m.def("gadget_names", []() {
        std::vector<std::string> out;
        for (const Gadget &g : gadget_library()) {
            out.push_back(g.name);
        }
        return out;
    });
    m.def("check_gadgets", []() {
        py::list out;
        for (const Gadget &g : gadget_library()) {
            py::dict d;
            d["name"] = g.name;
            d["declared_cost"] = g.declared_cost;
            d["actual_cost"] = g.actual_cost();
            d["scratch_wires"] = g.scratch_wires();
            d["equal"] = check_gadget(g).equal;
            out.append(d);
        }
        return out;
    });

    m.def(
        "search",
        [](const Circuit &c, int max_gates) -> py::object {
            std::vector<Gate> gates = c.gates();
            StatePerm target = state_permutation(gates, c.num_wires());
            auto found = search_decomposition(target, c.num_wires(), max_gates);
            if (!found) {
                return py::none();
            }
            return py::cast(search_result_circuit(*found, c.num_wires()));
        },
        py::arg("circuit"), py::arg("max_gates") = 5);
}
