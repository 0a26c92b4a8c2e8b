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
The two greedy coloring procedures for powers of large-diameter graphs.

run_main_procedure precolors a shortest path of length 2k-2 and colors the
rest of the graph greedily, by decreasing distance to the path center x, with
f(k, delta) + 3 - k colors. run_improved_procedure precolors two radius-s balls
at distance k+2s+1 from each other and reaches f(k, delta) - f(s, delta)
colors. Both record the nice-walk count of every greedy step.
"""
import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.bounds import f, max_improved_s, palette_improved, palette_main
from ..core.errors import (
    InvalidParameterError,
    InvariantViolation,
    PaletteExhausted,
    PreconditionViolated,
    UncoloredVertexError,
)
from ..core.graph import UNREACHABLE, Graph, bfs, diameter, shortest_path
from ..core.partial_coloring import UNCOLORED, PartialColoring
from ..core.walks import AugmentedGraph, BoundCase, NiceCount, analytic_bound_main, augment, count_nice, enumerate_walks
from .report import PHASE_LAST, PHASE_N, PHASE_OUTER, PHASE_PRECOLOR, ProcedureReport, StepRecord

logger = logging.getLogger(__name__)

CASE_FAR = "far"
CASE_NEAR = "near"
CASE_CENTER = "center"


@dataclass(frozen=True)
class PathWitness:
    """
    A shortest path, optionally labeled for one of the procedures.

    Labels for the main procedure (length 2k-2): path = u_2 ... u_k x v_1 ... v_{k-1}.
    Labels for the improved procedure (length k+2s+1): path runs from u_1 to v_1,
    u_t and v_t are the vertices at distance t = floor((k+2s+1)/2) from u_1 and v_1.
    """
    path: Tuple[int, ...]
    k: Optional[int] = None
    s: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def labeled_main(self, k: int) -> "PathWitness":
        if self.length != 2 * k - 2:
            raise InvalidParameterError(f"main witness needs length {2 * k - 2}, got {self.length}")
        return replace(self, k=k, s=None)

    def labeled_improved(self, k: int, s: int) -> "PathWitness":
        if self.length != k + 2 * s + 1:
            raise InvalidParameterError(f"improved witness needs length {k + 2 * s + 1}, got {self.length}")
        return replace(self, k=k, s=s)

    def _require(self, improved: bool) -> int:
        if self.k is None or (self.s is not None) != improved:
            kind = "improved" if improved else "main"
            raise InvalidParameterError(f"witness is not labeled for the {kind} procedure")
        return self.k

    # main-procedure labels

    def u(self, i: int) -> int:
        k = self._require(False)
        if not 2 <= i <= k:
            raise InvalidParameterError(f"u_{i} undefined for k={k}")
        return self.path[i - 2]

    def v(self, j: int) -> int:
        k = self._require(False)
        if not 1 <= j <= k - 1:
            raise InvalidParameterError(f"v_{j} undefined for k={k}")
        return self.path[k - 1 + j]

    @property
    def x(self) -> int:
        k = self._require(False)
        return self.path[k - 1]

    # improved-procedure labels

    @property
    def t(self) -> int:
        self._require(True)
        return self.length // 2

    @property
    def u1(self) -> int:
        self._require(True)
        return self.path[0]

    @property
    def v1(self) -> int:
        self._require(True)
        return self.path[-1]

    @property
    def ut(self) -> int:
        return self.path[self.t]

    @property
    def vt(self) -> int:
        return self.path[self.length - self.t]

    def is_valid(self, g: Graph) -> bool:
        """Consecutive vertices adjacent and endpoints at distance equal to the length."""
        p = self.path
        if any(not g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1)):
            return False
        return bfs(g, p[0])[p[-1]] == self.length


def find_far_pair(g: Graph, target_distance: int) -> Optional[PathWitness]:
    """
    A shortest path with exactly target_distance edges, or None when the diameter is smaller.

    The path is the prefix of a shortest path between the diameter witnesses.

    Raises:
        DisconnectedGraphError: If g is disconnected.
    """
    if target_distance < 0:
        raise InvalidParameterError(f"target_distance must be >= 0, got {target_distance}")
    diam, (a, b) = diameter(g)
    if diam < target_distance:
        return None
    path = shortest_path(g, a, b)
    return PathWitness(path=tuple(path[: target_distance + 1]))


def precolor_main(g: Graph, w: PathWitness, k: int, vertex_count: Optional[int] = None,
                  palette_size: Optional[int] = None) -> PartialColoring:
    """
    Color u_i and v_i with i-1 (0-based), leaving the center x uncolored.

    Args:
        g: The graph the path lives in.
        w: Shortest path of length 2k-2.
        k: Power.
        vertex_count: Size of the coloring (|V(G-hat)| when used with an augmented graph).
        palette_size: Palette of the coloring; defaults to k.

    Returns:
        PartialColoring

    Raises:
        InvalidParameterError: If the witness length does not match k.
        InvariantViolation: If two equally colored path vertices are within distance k.
    """
    w = w.labeled_main(k)
    n = g.vertex_count if vertex_count is None else vertex_count
    coloring = PartialColoring.empty(n, k if palette_size is None else palette_size)
    for i in range(2, k + 1):
        coloring.assign(w.u(i), i - 1)
    for j in range(1, k):
        coloring.assign(w.v(j), j - 1)

    for i in range(2, k):
        d = bfs(g, w.u(i), cutoff=k)[w.v(i)]
        if d != UNREACHABLE:
            raise InvariantViolation(
                f"u_{i}={w.u(i)} and v_{i}={w.v(i)} share color {i - 1} at distance {d} <= k={k}; "
                f"the path is not shortest"
            )
    return coloring


@dataclass(frozen=True, eq=False)
class RootAssignment:
    """
    Root of every original vertex with respect to a path and its center.

    Attributes:
        center (int): x for the main procedure, u_t for the improved one.
        root (np.ndarray): r_v per vertex.
        d (np.ndarray): d(v, r_v).
        dprime (np.ndarray): d(r_v, center).
        dist_center (np.ndarray): d(v, center).
        n_set (List[int]): Original vertices with root = center and d(v, center) <= k, ascending.
    """
    center: int
    root: np.ndarray
    d: np.ndarray
    dprime: np.ndarray
    dist_center: np.ndarray
    n_set: List[int]

    def augmented_n_size(self, ag: AugmentedGraph) -> int:
        """Size of N taken over V(G-hat): tree nodes inherit the root of their anchor."""
        n = ag.original_count
        anchors = ag.anchor[n:]
        aux = (self.root[anchors] == self.center) & (self.dist_center[anchors] + ag.depth[n:] <= ag.k)
        return len(self.n_set) + int(aux.sum())


def _assign_roots(g: Graph, center: int, priority: Sequence[int], k: int) -> RootAssignment:
    dist_center = bfs(g, center).dist
    n = g.vertex_count
    root = np.full(n, -1, dtype=np.int64)
    d = np.zeros(n, dtype=np.int64)
    for p in priority:
        dp = bfs(g, p).dist
        on_path = (root == -1) & (dp + dist_center[p] == dist_center)
        root[on_path] = p
        d[on_path] = dp[on_path]
    if (root == -1).any():
        raise InvariantViolation("some vertex has no root; the center must be among the path vertices")
    dprime = dist_center[root]
    n_set = [int(v) for v in np.flatnonzero((root == center) & (dist_center <= k))]
    return RootAssignment(center=center, root=root, d=d, dprime=dprime, dist_center=dist_center, n_set=n_set)


def main_priority(w: PathWitness) -> List[int]:
    """Path vertices from largest to smallest: u_2 > v_{k-1} > u_3 > v_{k-2} > ... > u_k > v_1 > x."""
    k = w._require(False)
    out = []
    for i in range(2, k + 1):
        out.append(w.u(i))
        out.append(w.v(k + 1 - i))
    out.append(w.x)
    return out


def compute_roots(g: Graph, w: PathWitness) -> RootAssignment:
    """
    r_v for every vertex: the largest path vertex on a shortest path from v to x.

    Args:
        g: Graph.
        w: Witness labeled for the main procedure.

    Returns:
        RootAssignment
    """
    k = w._require(False)
    return _assign_roots(g, w.x, main_priority(w), k)


def improved_priority(w: PathWitness) -> List[int]:
    """Path vertices by decreasing distance to u_t, u-side before v-side."""
    t = w.t
    idx = sorted(range(len(w.path)), key=lambda i: (-abs(i - t), 0 if i < t else 1, w.path[i]))
    return [w.path[i] for i in idx]


def _greedy_step(ag: AugmentedGraph, coloring: PartialColoring, v: int) -> Tuple[NiceCount, int, Optional[int]]:
    """Nice count, free color count and minimum free color (None if none) for v."""
    order = enumerate_walks(ag, v, ag.k)
    nice = count_nice(order, coloring, ag.original_count)
    seen = coloring.colors[order.endpoints]
    seen = seen[seen != UNCOLORED]
    free = np.ones(coloring.palette_size, dtype=bool)
    free[seen] = False
    choices = np.flatnonzero(free)
    color = int(choices[0]) if choices.size else None
    return nice, int(choices.size), color


def _degree_and_diameter(g: Graph) -> Tuple[int, int]:
    delta = g.max_degree
    if delta < 3:
        raise PreconditionViolated("delta", f"maximum degree must be >= 3, got {delta}")
    diam, _ = diameter(g)
    return delta, diam


def _run_greedy(
    ag: AugmentedGraph,
    coloring: PartialColoring,
    report: ProcedureReport,
    schedule: Sequence[Tuple[int, str]],
    describe,
) -> None:
    for v, phase in schedule:
        nice, available, color = _greedy_step(ag, coloring, v)
        record = describe(v, phase)
        record.nice_count = nice.count
        record.literal_nice_count = nice.literal_count
        record.total_walks = nice.total
        record.available = available
        if available != coloring.palette_size - nice.forbidden:
            raise InvariantViolation(
                f"vertex {v}: {available} free colors but {nice.forbidden} non-nice walks "
                f"with palette {coloring.palette_size}"
            )
        if color is None:
            report.success = False
            raise PaletteExhausted(
                v,
                f"no free color for vertex {v} (palette {coloring.palette_size}, nice walks {nice.count})",
                report=report,
            )
        coloring.assign(v, color)
        record.color = color
        report.steps.append(record)
        logger.debug(
            f"colored {v} with {color} (phase {phase}, nice {nice.count}/{nice.total}, "
            f"bound {record.analytic_bound}, available {available})"
        )


def _finish(g: Graph, k: int, coloring: PartialColoring, report: ProcedureReport) -> None:
    violations = verify_coloring(g, k, coloring)
    if violations:
        raise InvariantViolation(f"procedure produced an improper coloring: {violations[0]}")
    report.success = True
    report.colors_used = coloring.colors_used(limit=g.vertex_count)
    logger.info(
        f"{report.procedure} procedure: k={k}, palette {report.palette_size}, "
        f"{report.colors_used} colors used, min nice {report.min_nice()}"
    )


def run_main_procedure(g: Graph, k: int) -> Tuple[PartialColoring, ProcedureReport]:
    """
    Color power(g, k) with f(k, delta) + 3 - k colors.

    Args:
        g: Connected graph with maximum degree delta >= 3 and diameter >= 2k-2.
        k: Power, k >= 3.

    Returns:
        Tuple[PartialColoring, ProcedureReport]: coloring over V(G-hat) (only
        the first |V(G)| entries are colored) and the run trace.

    Raises:
        PreconditionViolated: On k < 3, delta < 3 or a too small diameter.
        DisconnectedGraphError: If g is disconnected.
        PaletteExhausted: If a greedy step finds no free color.
    """
    if k < 3:
        raise PreconditionViolated("k", f"the main procedure needs k >= 3, got {k}")
    delta, diam = _degree_and_diameter(g)
    if diam < 2 * k - 2:
        raise PreconditionViolated("diameter", f"diameter {diam} < 2k-2 = {2 * k - 2}")

    w = find_far_pair(g, 2 * k - 2).labeled_main(k)
    ag = augment(g, k, delta)
    palette = palette_main(k, delta)
    coloring = precolor_main(g, w, k, vertex_count=ag.vertex_count, palette_size=palette)
    roots = compute_roots(g, w)
    x = w.x
    n = g.vertex_count
    path_set = set(w.path)

    report = ProcedureReport(
        procedure="main",
        k=k,
        delta=delta,
        palette_size=palette,
        nice_floor=k - 2,
        path=list(w.path),
        n_set=list(roots.n_set),
        n_hat_size=roots.augmented_n_size(ag),
        bottleneck=[u for u in g.neighbors(x) if u not in path_set],
    )
    for p in w.path:
        if p != x:
            report.steps.append(StepRecord(
                vertex=p, phase=PHASE_PRECOLOR, color=int(coloring.colors[p]), root=p, d=0,
                dprime=int(roots.dist_center[p]), dist_center=int(roots.dist_center[p]),
            ))

    precolored = set(p for p in w.path if p != x)
    in_n = set(roots.n_set)
    by_distance = sorted(range(n), key=lambda v: (-int(roots.dist_center[v]), v))
    schedule = [(v, PHASE_OUTER) for v in by_distance if v not in precolored and v not in in_n]
    schedule += [(v, PHASE_N) for v in by_distance if v in in_n]

    def describe(v: int, phase: str) -> StepRecord:
        r = int(roots.root[v])
        d = int(roots.d[v])
        dprime = int(roots.dprime[v])
        if phase == PHASE_N:
            case = BoundCase.ROOT_X_IN_N
        else:
            case = BoundCase.ROOT_NOT_X
        return StepRecord(
            vertex=v, phase=phase, color=UNCOLORED, root=r, d=d, dprime=dprime,
            dist_center=int(roots.dist_center[v]),
            analytic_bound=analytic_bound_main(d, dprime, k, case),
            case=case.value,
        )

    _run_greedy(ag, coloring, report, schedule, describe)
    _finish(g, k, coloring, report)
    return coloring, report


def precolor_improved(ag: AugmentedGraph, u1: int, v1: int, s: int,
                      palette_size: Optional[int] = None) -> PartialColoring:
    """
    Color the G-hat balls of radius s around u1 and v1 by first walk index.

    Every vertex w of N^s(u1) (resp. N^s(v1)) receives the smallest index i
    such that the i-th walk from u1 (resp. v1), the empty walk being index 0,
    ends in w. Auxiliary vertices are colored too.

    Args:
        ag: Augmented graph of height k.
        u1: Original vertex.
        v1: Original vertex at distance k + 2s + 1 from u1.
        s: Ball radius, 1 <= s <= k.
        palette_size: Palette of the coloring; defaults to f(s, delta) + 1.

    Returns:
        PartialColoring

    Raises:
        PreconditionViolated: If d(u1, v1) != k + 2s + 1.
        InvariantViolation: If the result is not proper on G-hat^k.
    """
    k = ag.k
    if not 1 <= s <= k:
        raise InvalidParameterError(f"s={s} outside [1, {k}]")
    dist = bfs(ag.graph, u1)[v1]
    if dist != k + 2 * s + 1:
        raise PreconditionViolated("distance", f"d({u1}, {v1}) = {dist}, expected k+2s+1 = {k + 2 * s + 1}")

    size = f(s, ag.delta) + 1 if palette_size is None else palette_size
    coloring = PartialColoring.empty(ag.vertex_count, size)
    for origin in (u1, v1):
        order = enumerate_walks(ag, origin, s, include_empty=True)
        vertices, first = np.unique(order.endpoints, return_index=True)
        for w, i in zip(vertices, first):
            coloring.assign(int(w), int(i))

    for a in coloring.colored_vertices():
        near = bfs(ag.graph, a, cutoff=k).dist
        clash = (near != UNREACHABLE) & (near >= 1) & (coloring.colors == coloring.colors[a])
        if clash.any():
            b = int(np.flatnonzero(clash)[0])
            raise InvariantViolation(
                f"precolored {a} and {b} share color {int(coloring.colors[a])} at distance {int(near[b])} <= {k}"
            )
    return coloring


def _check_last_geometry(ag: AugmentedGraph, coloring: PartialColoring, last: Sequence[int]) -> None:
    precolored = np.flatnonzero(coloring.colors != UNCOLORED)
    for z in last:
        dist = bfs(ag.graph, z, cutoff=ag.k).dist[precolored]
        if (dist == UNREACHABLE).any():
            far = int(precolored[np.flatnonzero(dist == UNREACHABLE)[0]])
            raise InvariantViolation(f"vertex {z} colored last is farther than k={ag.k} from precolored {far}")


def run_improved_procedure(g: Graph, k: int, s: int) -> Tuple[PartialColoring, ProcedureReport]:
    """
    Color power(g, k) with f(k, delta) - f(s, delta) colors.

    The balls N^s_G(u_t) and N^s_G(v_t) around the path centers are colored
    last; everything else by decreasing distance to u_t.

    Args:
        g: Connected graph with delta >= 3 and diameter >= k + 2s + 1.
        k: Power.
        s: 1 <= s <= (k - 5) / 12.

    Returns:
        Tuple[PartialColoring, ProcedureReport]

    Raises:
        PreconditionViolated: On an out-of-range s, delta < 3 or a too small diameter.
        DisconnectedGraphError: If g is disconnected.
        PaletteExhausted: If a greedy step finds no free color.
    """
    if s < 1 or s > max_improved_s(k):
        raise PreconditionViolated("s", f"s={s} outside [1, (k-5)/12] for k={k}")
    delta, diam = _degree_and_diameter(g)
    length = k + 2 * s + 1
    if diam < length:
        raise PreconditionViolated("diameter", f"diameter {diam} < k+2s+1 = {length}")

    w = find_far_pair(g, length).labeled_improved(k, s)
    ag = augment(g, k, delta)
    palette = palette_improved(k, delta, s)
    coloring = precolor_improved(ag, w.u1, w.v1, s, palette_size=palette)
    ut, vt, t = w.ut, w.vt, w.t
    roots = _assign_roots(g, ut, improved_priority(w), k)
    n = g.vertex_count

    last = sorted(set(bfs(g, ut, cutoff=s).within(s)) | set(bfs(g, vt, cutoff=s).within(s)))
    _check_last_geometry(ag, coloring, last)

    report = ProcedureReport(
        procedure="improved",
        k=k,
        s=s,
        delta=delta,
        palette_size=palette,
        nice_floor=f(s, delta) + 1,
        path=list(w.path),
        n_set=list(roots.n_set),
        n_hat_size=roots.augmented_n_size(ag),
    )
    precolored = set(v for v in range(n) if coloring.is_colored(v))
    for v in sorted(precolored):
        report.steps.append(StepRecord(
            vertex=v, phase=PHASE_PRECOLOR, color=int(coloring.colors[v]),
            dist_center=int(roots.dist_center[v]),
        ))

    last_set = set(last)
    by_distance = sorted(range(n), key=lambda v: (-int(roots.dist_center[v]), v))
    schedule = [(v, PHASE_OUTER) for v in by_distance if v not in precolored and v not in last_set]
    schedule += [(v, PHASE_LAST) for v in by_distance if v in last_set]
    floor = f(s, delta) + 1

    def describe(v: int, phase: str) -> StepRecord:
        dc = int(roots.dist_center[v])
        d = int(roots.d[v])
        if phase == PHASE_LAST:
            case = CASE_CENTER
        elif d > 3 * s + t + 1:
            case = CASE_FAR
        else:
            case = CASE_NEAR
        return StepRecord(
            vertex=v, phase=phase, color=UNCOLORED, root=int(roots.root[v]), d=d,
            dprime=int(roots.dprime[v]), dist_center=dc, analytic_bound=floor, case=case,
        )

    _run_greedy(ag, coloring, report, schedule, describe)
    _finish(g, k, coloring, report)
    return coloring, report


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    distance: int
    color: int

    def __str__(self) -> str:
        return f"{self.u}-{self.v} at distance {self.distance} share color {self.color}"


def verify_coloring(g: Graph, k: int, coloring: PartialColoring) -> List[Violation]:
    """
    Check properness of a coloring of power(g, k).

    Only the first |V(G)| entries of the coloring are considered.

    Returns:
        List[Violation]: pairs u < v with 1 <= d(u, v) <= k and equal colors.

    Raises:
        UncoloredVertexError: If an original vertex is uncolored.
    """
    n = g.vertex_count
    colors = coloring.colors[:n]
    if colors.size < n:
        raise UncoloredVertexError(f"coloring covers {colors.size} of {n} vertices")
    missing = np.flatnonzero(colors == UNCOLORED)
    if missing.size:
        raise UncoloredVertexError(f"vertex {int(missing[0])} is uncolored")
    out = []
    for u in range(n):
        dist = bfs(g, u, cutoff=k).dist
        clash = np.flatnonzero((dist >= 1) & (colors == colors[u]))
        for v in clash:
            if v > u:
                out.append(Violation(u=u, v=int(v), distance=int(dist[v]), color=int(colors[u])))
    return out


def coloring_lines(coloring: PartialColoring, vertex_count: int) -> List[str]:
    """vertex:color lines for the original vertices."""
    return [f"{v}:{int(coloring.colors[v])}" for v in range(vertex_count)]

