# Copyright 2026 The qsynth4 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools

import pytest

import qsynth4


def test_generators_synthesize_and_verify():
    for name in qsynth4.generator_names():
        f = qsynth4.make_generator(name)
        circuit, stats = qsynth4.synth(f)
        assert qsynth4.verify(circuit, f)["equal"]
        assert stats["reduced_ancilla"] <= stats["max_ancilla"]
        assert circuit.cost() == stats["cost"]
        assert circuit.levels() == stats["levels"]


def test_halfadd_numbers():
    _, stats = qsynth4.synth(qsynth4.make_generator("halfadd"), output_names=["sum", "carry"])
    assert stats["n"] + stats["p"] + stats["s"] == 18
    assert [o["name"] for o in stats["outputs"]] == ["sum", "carry"]
    assert stats["max_ancilla"] == 36


def test_qtt_round_trip():
    f = qsynth4.make_generator("sum2")
    text = qsynth4.serialize_qtt(f)
    assert qsynth4.parse_qtt(text) == f


def test_netlist_round_trip_and_run():
    f = qsynth4.make_generator("mul2")
    circuit, _ = qsynth4.synth(f)
    again = qsynth4.parse_netlist(qsynth4.serialize_netlist(circuit))
    assert again == circuit
    assert qsynth4.equivalent(circuit, again)["equal"]
    field_mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    for a, b in itertools.product(range(4), repeat=2):
        state = circuit.run([a, b])
        assert len(state) == circuit.num_wires
        assert f.outputs(a * 4 + b) == [field_mul[a][b]]


def test_verify_reports_counterexample():
    circuit, _ = qsynth4.synth(qsynth4.make_generator("sum2"))
    wrong = qsynth4.make_generator("mul2")
    result = qsynth4.verify(circuit, wrong)
    assert not result["equal"]
    assert len(result["counterexample"]) == 2


def test_decompose_is_equivalent():
    circuit, _ = qsynth4.synth(qsynth4.make_generator("halfadd"))
    low = qsynth4.decompose(circuit)
    assert qsynth4.equivalent(circuit, low)["equal"]
    assert set(low.gate_counts()) <= {"ms", "shift", "toffoli", "max", "min"}


def test_gadgets_check():
    rows = qsynth4.check_gadgets()
    assert rows
    assert all(r["equal"] for r in rows)


def test_search_finds_short_circuit():
    target = qsynth4.parse_netlist(".wires 2\n.input q0\n.input q1\n.output a q0\n.output b q1\nms q0 q1 x+1\nms q0 q1 x+1\n")
    found = qsynth4.search(target, max_gates=3)
    assert found is not None
    assert found.num_gates <= 2
    assert qsynth4.equivalent(found, target)["equal"]


def test_pla_ingest():
    f = qsynth4.ingest_pla(".i 2\n.o 1\n11 1\n.e\n", "and2")
    assert (f.num_inputs, f.num_outputs) == (1, 1)
    assert [f.output(r, 0) for r in range(4)] == [0, 0, 0, 1]


def test_parse_errors_raise():
    with pytest.raises(qsynth4.ParseError):
        qsynth4.parse_netlist(".wires 1\n.input q0\nms q0 q7 x+1\n")
    with pytest.raises(ValueError):
        qsynth4.ingest_pla(".i 2\n.o 1\n1- 1\n.e\n")
