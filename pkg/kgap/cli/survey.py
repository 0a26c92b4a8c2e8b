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
kgap survey: k-gap census over a graph6 stream, one CSV row per graph.
"""
import argparse
import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from functools import partial
from typing import Iterable, List, Optional, TextIO, Tuple

from tqdm import tqdm

from ..coloring.colorizer import run_improved_procedure, run_main_procedure
from ..coloring.oracle import OracleLimits, exact_gap
from ..core.bounds import max_improved_s, palette_improved, palette_main
from ..core.errors import DisconnectedGraphError, InvariantViolation, LimitsExceeded, MalformedGraph6Error
from ..core.graph import Graph, diameter, from_graph6, read_graph6_lines
from .common import EXIT_OK, add_oracle_kwargs, ascii_lines, oracle_limits

logger = logging.getLogger(__name__)

PROCEDURE_MAIN = "main"
PROCEDURE_IMPROVED = "improved"
PROCEDURE_NONE = "none"


@dataclass(frozen=True)
class SurveyRow:
    graph6: str
    n: int
    delta: int
    diameter: Optional[int]
    k: int
    chi: Optional[int]
    gap: Optional[int]
    procedure_used: str
    palette: Optional[int]
    ok: bool

    def __post_init__(self):
        if (self.chi is None) != (self.gap is None):
            raise ValueError("gap must be present exactly when chi is")

    @classmethod
    def header(cls) -> List[str]:
        return [fl.name for fl in fields(cls)]

    def as_csv(self) -> List[str]:
        out = []
        for value in astuple(self):
            if value is None:
                out.append("")
            elif isinstance(value, bool):
                out.append("true" if value else "false")
            else:
                out.append(str(value))
        return out


def choose_procedure(delta: int, diam: Optional[int], k: int) -> Tuple[str, Optional[int]]:
    """
    Procedure to run and its s (None for the main one).

    The improved procedure has the smaller palette, so it wins whenever it applies.
    """
    if diam is None or delta < 3:
        return PROCEDURE_NONE, None
    s = max_improved_s(k)
    if s >= 1 and diam >= k + 2 * s + 1:
        return PROCEDURE_IMPROVED, s
    if k >= 3 and diam >= 2 * k - 2:
        return PROCEDURE_MAIN, None
    return PROCEDURE_NONE, None


def survey_row(text: str, k: int, max_oracle: int, limits: OracleLimits) -> SurveyRow:
    g: Graph = from_graph6(text)
    delta = g.max_degree
    try:
        diam: Optional[int] = diameter(g)[0]
    except DisconnectedGraphError:
        diam = None

    chi = gap_value = None
    if delta >= 2 and g.vertex_count <= max_oracle:
        try:
            rec = exact_gap(g, k, limits)
            chi, gap_value = rec.chi, rec.gap
        except LimitsExceeded as e:
            logger.warning(f"oracle gave up on {text}: {e}")

    procedure, s = choose_procedure(delta, diam, k)
    palette = None
    ok = False
    if procedure != PROCEDURE_NONE:
        palette = palette_main(k, delta) if s is None else palette_improved(k, delta, s)
        try:
            if s is None:
                run_main_procedure(g, k)
            else:
                run_improved_procedure(g, k, s)
            ok = True
        except (InvariantViolation, LimitsExceeded) as e:
            logger.error(f"{procedure} procedure failed on {text}: {e}")

    return SurveyRow(
        graph6=text,
        n=g.vertex_count,
        delta=delta,
        diameter=diam,
        k=k,
        chi=chi,
        gap=gap_value,
        procedure_used=procedure,
        palette=palette,
        ok=ok,
    )


def _valid_lines(lines: Iterable[str]) -> List[str]:
    out = []
    for lineno, text in read_graph6_lines(lines):
        try:
            from_graph6(text)
        except MalformedGraph6Error as e:
            logger.warning(f"skipping line {lineno}: {e}")
            continue
        out.append(text)
    return out


def add_parser(subparsers) -> argparse.ArgumentParser:
    p = subparsers.add_parser(
        "survey",
        help="k-gap census over a graph6 stream, CSV on stdout.",
        description=(
            "Compute a CSV row per graph6 line: size, degree, diameter, exact chi of the\n"
            "k-th power when small enough, and the outcome of the applicable procedure.\n\n"
            "Example:\n"
            "  geng -c 10 -d3 -D3 | kgap survey -k 2 --jobs 4\n"
        ),
        formatter_class=argparse.RawTextHelpFormatter,
    )
    p.add_argument("input", nargs="?", default=None, help="graph6 file (default: stdin).")
    p.add_argument("-k", type=int, required=True, help="Power.")
    p.add_argument("--max-oracle", type=int, default=12, help="Largest n given to the exact oracle (default: 12).")
    p.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1).")
    p.add_argument("--progress", action="store_true", help="Show a progress bar on stderr.")
    add_oracle_kwargs(p)
    p.set_defaults(run=run)
    return p


def _compute(texts: List[str], k: int, max_oracle: int, limits: OracleLimits, jobs: int,
             progress: bool) -> Iterable[SurveyRow]:
    work = partial(survey_row, k=k, max_oracle=max_oracle, limits=limits)
    if jobs <= 1:
        for text in tqdm(texts, disable=not progress, desc="survey"):
            yield work(text)
        return
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        yield from tqdm(ex.map(work, texts), total=len(texts), disable=not progress, desc="survey")


def run(args, stdin: TextIO, stdout: TextIO) -> int:
    limits = oracle_limits(args.oracle_kwargs, max_vertices=max(args.max_oracle, 1))
    if args.input is None:
        texts = _valid_lines(ascii_lines(stdin))
    else:
        with open(args.input, "rb") as fh:
            texts = _valid_lines(ascii_lines(fh))

    writer = csv.writer(stdout, lineterminator="\n")
    writer.writerow(SurveyRow.header())
    for row in _compute(texts, args.k, args.max_oracle, limits, args.jobs, args.progress):
        writer.writerow(row.as_csv())
    logger.info(f"surveyed {len(texts)} graphs at k={args.k}")
    return EXIT_OK
