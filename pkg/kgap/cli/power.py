# coding=utf-8
# Copyright 2026 The kgap authors.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
kgap power: replace every graph6 line by the graph6 of its k-th power.
"""
import argparse

from ..core.graph import from_graph6, power, read_graph6_lines, to_graph6
from .common import EXIT_OK


def add_parser(subparsers) -> argparse.ArgumentParser:
    p = subparsers.add_parser("power", help="k-th power of graph6 graphs read from stdin.")
    p.add_argument("-k", type=int, required=True, help="Power, k >= 1.")
    p.set_defaults(run=run)
    return p


def run(args, stdin, stdout) -> int:
    for _, text in read_graph6_lines(stdin):
        stdout.write(to_graph6(power(from_graph6(text), args.k)) + "\n")
    return EXIT_OK
