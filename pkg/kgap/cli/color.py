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
kgap color: run one of the greedy procedures on a graph and print the coloring.

Output is one "vertex:color" line per vertex (0-based colors), then a blank
line and the procedure report, unless --report-out sends the report to a file.
"""
import argparse
import logging

from ..coloring.colorizer import coloring_lines, run_improved_procedure, run_main_procedure, verify_coloring
from ..core.graph import from_graph6
from .common import EXIT_INVARIANT, EXIT_MALFORMED, EXIT_OK, fail, first_graph6

logger = logging.getLogger(__name__)


def add_parser(subparsers) -> argparse.ArgumentParser:
    p = subparsers.add_parser(
        "color",
        help="Color the k-th power with the main (or, with -s, the improved) procedure.",
        description=(
            "Color the k-th power of a graph with a greedy procedure.\n\n"
            "Examples:\n"
            "  kgap generate prism 10 | kgap color -k 3\n"
            "  kgap color -k 17 -s 1 --report json \"$(kgap generate prism 44)\"\n"
        ),
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p.add_argument("graph6", nargs="?", default=None, help="graph6 text (default: first line of stdin).")
    p.add_argument("-k", type=int, required=True, help="Power.")
    p.add_argument("-s", type=int, default=None, help="Ball radius; selects the improved procedure.")
    p.add_argument("--report", choices=["json", "text"], default="text", help="Report format (default: text).")
    p.add_argument("--report-out", default=None, help="Write the report to this file instead of stdout.")
    p.add_argument(
        "--check-nice",
        action="store_true",
        help="Fail when a step has fewer nice walks than its floor or case bound.",
    )
    p.set_defaults(run=run)
    return p


def run(args, stdin, stdout) -> int:
    text = first_graph6(args.graph6, stdin)
    if text is None:
        fail("no graph6 input")
        return EXIT_MALFORMED
    g = from_graph6(text)

    if args.s is None:
        coloring, report = run_main_procedure(g, args.k)
    else:
        coloring, report = run_improved_procedure(g, args.k, args.s)

    violations = verify_coloring(g, args.k, coloring)
    if violations:
        fail(f"coloring failed re-verification: {violations[0]}")
        return EXIT_INVARIANT
    if args.check_nice:
        bad = report.nice_violations()
        if bad:
            st = bad[0]
            fail(
                f"{len(bad)} step(s) below the nice-walk floor; first: vertex {st.vertex} "
                f"with {st.nice_count} nice walks (floor {report.nice_floor})"
            )
            return EXIT_INVARIANT
        short = report.bound_shortfalls()
        if short:
            st = short[0]
            fail(
                f"{len(short)} step(s) below their case bound; first: vertex {st.vertex} ({st.case}) "
                f"with {st.nice_count} nice walks (bound {st.analytic_bound})"
            )
            return EXIT_INVARIANT

    stdout.write("\n".join(coloring_lines(coloring, g.vertex_count)) + "\n")
    rendered = report.to_json() + "\n" if args.report == "json" else report.to_text()
    if args.report_out:
        with open(args.report_out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        stdout.write("\n" + rendered)
    logger.info(f"colored {g.vertex_count} vertices with {report.colors_used} of {report.palette_size} colors")
    return EXIT_OK
