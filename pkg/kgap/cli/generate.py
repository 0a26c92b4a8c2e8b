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
kgap generate: emit one graph6 line for a named graph family.
"""
import argparse

from ..core.generators import GENERATOR_KINDS, generate
from ..core.graph import to_graph6
from .common import EXIT_OK


def add_parser(subparsers) -> argparse.ArgumentParser:
    p = subparsers.add_parser(
        "generate",
        help="Generate a graph as graph6.",
        description=(
            "Generate a graph and print it as one graph6 line.\n\n"
            "Examples:\n"
            "  kgap generate path 5\n"
            "  kgap generate prism 10\n"
            "  kgap generate random_regular 12 3 --seed 7\n"
        ),
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p.add_argument("kind", choices=list(GENERATOR_KINDS), help="Graph family.")
    p.add_argument("params", nargs="*", type=int, help="Integer parameters of the family.")
    p.add_argument("--seed", type=int, default=None, help="Seed for random families (default: none).")
    p.set_defaults(run=run)
    return p


def run(args, stdin, stdout) -> int:
    g = generate(args.kind, args.params, seed=args.seed)
    stdout.write(to_graph6(g) + "\n")
    return EXIT_OK
