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

"""Quaternary GF(4) logic synthesis."""

from qsynth4._qsynth4 import (
    Circuit,
    Function,
    ParseError,
    SynthesisError,
    check_gadgets,
    decompose,
    equivalent,
    gadget_names,
    generator_names,
    ingest_pla,
    make_generator,
    parse_netlist,
    parse_qtt,
    search,
    serialize_netlist,
    serialize_qtt,
    synth,
    verify,
)

__all__ = [
    "Circuit",
    "Function",
    "ParseError",
    "SynthesisError",
    "check_gadgets",
    "decompose",
    "equivalent",
    "gadget_names",
    "generator_names",
    "ingest_pla",
    "make_generator",
    "parse_netlist",
    "parse_qtt",
    "search",
    "serialize_netlist",
    "serialize_qtt",
    "synth",
    "verify",
]
