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
Per-step diagnostics of a greedy procedure run, with text and JSON renderings.
"""
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from ..core.bounds import f

REPORT_SCHEMA = 1

PHASE_PRECOLOR = "precolor"
PHASE_OUTER = "outer"
PHASE_N = "N"
PHASE_LAST = "last"


@dataclass
class StepRecord:
    """
    One original vertex of a procedure run.

    Attributes:
        vertex (int): The vertex.
        phase (str): "precolor", "outer" (V(G) minus N, or the bulk of the improved run),
            "N" (root x within distance k) or "last" (balls around the path centers).
        color (int): Color assigned, 0-based.
        root (Optional[int]): Root path vertex r_v.
        d (Optional[int]): d(v, r_v).
        dprime (Optional[int]): d(r_v, center).
        dist_center (Optional[int]): d(v, center).
        nice_count (Optional[int]): Color-aware nice walks at the time v was colored.
        literal_nice_count (Optional[int]): Vertex-level nice walks at the same moment.
        total_walks (Optional[int]): Walks considered.
        analytic_bound (Optional[int]): Nice walks the case analysis guarantees.
        available (Optional[int]): Palette colors absent from the radius-k ball.
        case (Optional[str]): Case label of the analysis that applies.
    """
    vertex: int
    phase: str
    color: int
    root: Optional[int] = None
    d: Optional[int] = None
    dprime: Optional[int] = None
    dist_center: Optional[int] = None
    nice_count: Optional[int] = None
    literal_nice_count: Optional[int] = None
    total_walks: Optional[int] = None
    analytic_bound: Optional[int] = None
    available: Optional[int] = None
    case: Optional[str] = None

    @property
    def is_greedy(self) -> bool:
        return self.phase != PHASE_PRECOLOR


@dataclass
class ProcedureReport:
    """
    Full trace of a procedure run.

    `steps` lists every original vertex exactly once, precolored vertices first,
    then greedy steps in coloring order.
    """
    procedure: str
    k: int
    delta: int
    palette_size: int
    nice_floor: int
    path: List[int]
    s: Optional[int] = None
    steps: List[StepRecord] = field(default_factory=list)
    success: bool = False
    colors_used: int = 0
    n_set: List[int] = field(default_factory=list)
    n_hat_size: int = 0
    bottleneck: List[int] = field(default_factory=list)

    @property
    def guaranteed_gap(self) -> int:
        """The lower bound on the k-gap that a successful run of this procedure proves."""
        return self.nice_floor

    @property
    def certified_gap(self) -> Optional[int]:
        """f(k, delta) + 1 minus the colors actually used; None before the run succeeded."""
        if not self.success:
            return None
        return f(self.k, self.delta) + 1 - self.colors_used

    def greedy_steps(self) -> List[StepRecord]:
        return [st for st in self.steps if st.is_greedy]

    def min_nice(self) -> Optional[int]:
        counts = [st.nice_count for st in self.greedy_steps() if st.nice_count is not None]
        return min(counts) if counts else None

    def nice_violations(self) -> List[StepRecord]:
        """Greedy steps with fewer nice walks than the procedure needs to never run out of colors."""
        return [st for st in self.greedy_steps() if st.nice_count is not None and st.nice_count < self.nice_floor]

    def bound_shortfalls(self) -> List[StepRecord]:
        """Greedy steps whose nice count is below the per-case analytic bound recorded for them."""
        return [
            st for st in self.greedy_steps()
            if st.nice_count is not None and st.analytic_bound is not None and st.nice_count < st.analytic_bound
        ]

    def bottleneck_counts(self) -> Dict[int, int]:
        wanted = set(self.bottleneck)
        return {st.vertex: st.nice_count for st in self.steps if st.vertex in wanted and st.nice_count is not None}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "procedure": self.procedure,
            "k": self.k,
            "s": self.s,
            "delta": self.delta,
            "palette_size": self.palette_size,
            "nice_floor": self.nice_floor,
            "success": self.success,
            "colors_used": self.colors_used,
            "certified_gap": self.certified_gap,
            "guaranteed_gap": self.guaranteed_gap,
            "min_nice": self.min_nice(),
            "bound_shortfalls": [st.vertex for st in self.bound_shortfalls()],
            "path": list(self.path),
            "n_set": list(self.n_set),
            "n_hat_size": self.n_hat_size,
            "bottleneck": {str(v): c for v, c in self.bottleneck_counts().items()},
            "steps": [asdict(st) for st in self.steps],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [
            f"procedure {self.procedure}",
            f"k {self.k}",
        ]
        if self.s is not None:
            lines.append(f"s {self.s}")
        lines += [
            f"delta {self.delta}",
            f"palette {self.palette_size}",
            f"success {str(self.success).lower()}",
            f"colors_used {self.colors_used}",
            f"certified_gap {'' if self.certified_gap is None else self.certified_gap}".rstrip(),
            f"guaranteed_gap {self.guaranteed_gap}",
            f"min_nice {'' if self.min_nice() is None else self.min_nice()}".rstrip(),
            f"bound_shortfalls {len(self.bound_shortfalls())}",
            "path " + " ".join(str(v) for v in self.path),
            "N " + " ".join(str(v) for v in self.n_set),
            f"N_hat_size {self.n_hat_size}",
        ]
        if self.bottleneck:
            lines.append("bottleneck " + " ".join(f"{v}:{c}" for v, c in self.bottleneck_counts().items()))
        cols = ("vertex", "phase", "color", "root", "d", "dprime", "dist_center",
                "nice_count", "literal_nice_count", "total_walks", "analytic_bound", "available", "case")
        lines.append("\t".join(cols))
        for st in self.steps:
            row = asdict(st)
            lines.append("\t".join("-" if row[c] is None else str(row[c]) for c in cols))
        return "\n".join(lines) + "\n"
