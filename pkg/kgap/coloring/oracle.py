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
Exact chromatic numbers of small graphs.

Saturation-ordered branch and bound, seeded with a DSATUR upper bound and a
greedy clique lower bound. A vertex only ever opens the next unused color
index, so color permutations are never explored twice.
"""
import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..core.bounds import GapRecord, gap_from
from ..core.errors import InvalidParameterError, LimitsExceeded
from ..core.graph import Graph, power

logger = logging.getLogger(__name__)

_CLOCK_EVERY = 1024


@dataclass(frozen=True)
class OracleLimits:
    """
    Budget of one oracle call.

    Attributes:
        max_vertices (int): Largest graph the oracle accepts.
        time_budget (float): Wall-clock seconds before giving up.
        branch_limit (int): Search nodes before giving up.
    """
    max_vertices: int = 40
    time_budget: float = 300.0
    branch_limit: int = 2_000_000

    def __post_init__(self):
        if self.max_vertices <= 0:
            raise InvalidParameterError(f"max_vertices must be positive, got {self.max_vertices}")
        if self.time_budget <= 0:
            raise InvalidParameterError(f"time_budget must be positive, got {self.time_budget}")
        if self.branch_limit <= 0:
            raise InvalidParameterError(f"branch_limit must be positive, got {self.branch_limit}")


def _extend_clique(g: Graph, clique: List[int], by_degree: Sequence[int]) -> List[int]:
    members = set(clique)
    for v in by_degree:
        if v not in members and all(g.has_edge(v, c) for c in clique):
            clique.append(v)
            members.add(v)
    return clique


def greedy_clique(g: Graph) -> List[int]:
    """
    Largest clique found by greedy growth from every start vertex, followed by
    one pass of single-vertex swaps.
    """
    n = g.vertex_count
    if n == 0:
        return []
    by_degree = sorted(range(n), key=lambda v: (-g.degree(v), v))
    best: List[int] = []
    for start in by_degree:
        clique = _extend_clique(g, [start], by_degree)
        if len(clique) > len(best):
            best = clique

    members = set(best)
    for w in by_degree:
        if w in members:
            continue
        missing = [c for c in best if not g.has_edge(w, c)]
        if len(missing) != 1:
            continue
        candidate = _extend_clique(g, [c for c in best if c != missing[0]] + [w], by_degree)
        if len(candidate) > len(best):
            best = candidate
            members = set(best)
    return sorted(best)


def clique_lower_bound(g: Graph) -> int:
    return len(greedy_clique(g))


def greedy_coloring(g: Graph, order: Sequence[int]) -> List[int]:
    """
    Smallest-available greedy coloring in the given order.

    Raises:
        InvalidParameterError: If order is not a permutation of the vertices.
    """
    n = g.vertex_count
    if sorted(order) != list(range(n)):
        raise InvalidParameterError(f"order is not a permutation of 0..{n - 1}")
    colors = [-1] * n
    for v in order:
        used = {colors[u] for u in g.neighbors(v)}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def greedy_upper(g: Graph, order: Sequence[int]) -> int:
    """Number of colors greedy_coloring uses; at most Delta(g) + 1."""
    colors = greedy_coloring(g, order)
    return max(colors) + 1 if colors else 0


def dsatur_coloring(g: Graph) -> List[int]:
    """DSATUR heuristic: repeatedly color the most saturated vertex, ties by degree then index."""
    n = g.vertex_count
    colors = [-1] * n
    neighbor_colors = [set() for _ in range(n)]
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda u: (len(neighbor_colors[u]), g.degree(u), -u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in g.neighbors(v):
            if u in uncolored:
                neighbor_colors[u].add(c)
    return colors


class _Search:
    """Backtracking state: per-vertex neighbor color counts and saturation degrees."""

    def __init__(self, g: Graph, limits: OracleLimits, lower: int, upper: int, best: List[int]):
        n = g.vertex_count
        self.g = g
        self.limits = limits
        self.lower = lower
        self.best_k = upper
        self.best_colors = list(best)
        self.colors = [-1] * n
        self.counts = [[0] * (upper + 1) for _ in range(n)]
        self.saturation = [0] * n
        self.branches = 0
        self.started = time.monotonic()

    def _tick(self) -> None:
        self.branches += 1
        if self.branches > self.limits.branch_limit:
            raise LimitsExceeded(f"branch limit {self.limits.branch_limit} exceeded")
        if self.branches % _CLOCK_EVERY == 0 and time.monotonic() - self.started > self.limits.time_budget:
            raise LimitsExceeded(f"time budget of {self.limits.time_budget}s exceeded")

    def _choose(self) -> Optional[int]:
        best = None
        key = None
        for v, c in enumerate(self.colors):
            if c != -1:
                continue
            k = (self.saturation[v], self.g.degree(v), -v)
            if key is None or k > key:
                best, key = v, k
        return best

    def _assign(self, v: int, c: int) -> None:
        self.colors[v] = c
        for u in self.g.neighbors(v):
            row = self.counts[u]
            if row[c] == 0:
                self.saturation[u] += 1
            row[c] += 1

    def _unassign(self, v: int, c: int) -> None:
        self.colors[v] = -1
        for u in self.g.neighbors(v):
            row = self.counts[u]
            row[c] -= 1
            if row[c] == 0:
                self.saturation[u] -= 1

    def run(self, used: int = 0) -> bool:
        """Returns True once an optimal coloring is known."""
        self._tick()
        v = self._choose()
        if v is None:
            if used < self.best_k:
                self.best_k = used
                self.best_colors = list(self.colors)
                logger.debug(f"improved to {used} colors after {self.branches} branches")
            return self.best_k <= self.lower
        row = self.counts[v]
        for c in range(min(used + 1, self.best_k - 1)):
            if row[c] or max(used, c + 1) >= self.best_k:
                continue
            self._assign(v, c)
            done = self.run(max(used, c + 1))
            self._unassign(v, c)
            if done:
                return True
        return False


def exact_coloring(g: Graph, limits: Optional[OracleLimits] = None) -> Tuple[int, List[int]]:
    """
    Optimal coloring by branch and bound.

    Args:
        g: Graph with at most limits.max_vertices vertices.
        limits: Budget; defaults to OracleLimits().

    Returns:
        Tuple[int, List[int]]: chi(g) and an optimal coloring.

    Raises:
        LimitsExceeded: If g is too large or the search runs out of budget.
    """
    limits = limits or OracleLimits()
    n = g.vertex_count
    if n > limits.max_vertices:
        raise LimitsExceeded(f"graph has {n} vertices, oracle limit is {limits.max_vertices}")
    if n == 0:
        return 0, []

    lower = clique_lower_bound(g)
    upper_colors = dsatur_coloring(g)
    upper = max(upper_colors) + 1
    if lower == upper:
        return upper, upper_colors

    search = _Search(g, limits, lower, upper, upper_colors)
    search.run()
    logger.debug(f"chi={search.best_k} (clique {lower}, dsatur {upper}) in {search.branches} branches")
    return search.best_k, search.best_colors


def exact_chromatic(g: Graph, limits: Optional[OracleLimits] = None) -> int:
    return exact_coloring(g, limits)[0]


def exact_gap(g: Graph, k: int, limits: Optional[OracleLimits] = None) -> GapRecord:
    """
    k-gap of g with chi(g^k) computed exactly.

    Raises:
        InvalidParameterError: If Delta(g) < 2 or k < 1.
        LimitsExceeded: If the power exceeds the oracle budget.
    """
    delta = g.max_degree
    if delta < 2:
        raise InvalidParameterError(f"the k-gap needs maximum degree >= 2, got {delta}")
    limits = limits or OracleLimits()
    if g.vertex_count > limits.max_vertices:
        raise LimitsExceeded(f"graph has {g.vertex_count} vertices, oracle limit is {limits.max_vertices}")
    chi = exact_chromatic(power(g, k), limits)
    return gap_from(k, delta, chi)
