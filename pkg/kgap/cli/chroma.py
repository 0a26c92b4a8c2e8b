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
kgap chroma: chromatic bounds, or exact chromatic numbers, of graph6 graphs read from stdin.

Without --exact each line of output is "<clique lower bound> <DSATUR upper bound>";
with --exact it is chi.
"""
import argparse

from ..coloring.oracle import clique_lower_bound, dsatur_coloring, exact_chromatic
from ..core.graph import from_graph6, power, read_graph6_lines
from .common import EXIT_OK, add_oracle_kwargs, oracle_limits


def add_parser(subparsers) -> argparse.ArgumentParser:
    p = subparsers.add_parser(
        "chroma",
        help="Chromatic number (bounds) of graph6 graphs read from stdin.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p.add_argument("-k", type=int, default=1, help="Color the k-th power instead (default: 1).")
    p.add_argument("--exact", action="store_true", help="Run the exact branch-and-bound oracle.")
    add_oracle_kwargs(p)
    p.set_defaults(run=run)
    return p


def run(args, stdin, stdout) -> int:
    limits = oracle_limits(args.oracle_kwargs)
    for _, text in read_graph6_lines(stdin):
        g = power(from_graph6(text), args.k)
        if args.exact:
            stdout.write(f"{exact_chromatic(g, limits)}\n")
        else:
            colors = dsatur_coloring(g)
            upper = max(colors) + 1 if colors else 0
            stdout.write(f"{clique_lower_bound(g)} {upper}\n")
    return EXIT_OK
