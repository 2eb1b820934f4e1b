#!/usr/bin/env python3
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

"""Writes the binary benchmark tables (rd53, rd73, xor5) as fully listed PLA files.

rdNK: N input bits, output is the K-bit binary weight of the input.
xor5: parity of 5 input bits.
"""

import argparse
import pathlib


def weight_table(n, k):
    return [format(bin(r).count("1"), f"0{k}b") for r in range(2**n)]


def parity_table(n):
    return [str(bin(r).count("1") % 2) for r in range(2**n)]


def pla_text(name, n, rows):
    lines = [f"# {name}", f".i {n}", f".o {len(rows[0])}", f".p {len(rows)}"]
    for r, out in enumerate(rows):
        lines.append(f"{format(r, f'0{n}b')} {out}")
    lines.append(".e")
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("out_dir", type=pathlib.Path)
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    tables = {
        "rd53": (5, weight_table(5, 3)),
        "rd73": (7, weight_table(7, 3)),
        "xor5": (5, parity_table(5)),
    }
    for name, (n, rows) in tables.items():
        (args.out_dir / f"{name}.pla").write_text(pla_text(name, n, rows))


if __name__ == "__main__":
    main()
