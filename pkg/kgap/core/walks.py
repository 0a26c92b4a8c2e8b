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
Counting framework for the greedy procedures.

The augmented graph G-hat hangs pendant trees on every vertex of degree below
delta so that each original vertex sees a full delta-regular neighborhood up to
distance k. Non-backtracking walks of length <= k from an original vertex are
then exactly f(k, delta) in number, and each walk that is "nice" with respect
to the current partial coloring saves one color for the greedy step.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, List, Tuple

import numpy as np

from .bounds import f
from .errors import InvalidParameterError, InvariantViolation, LimitsExceeded
from .graph import Graph, bfs
from .partial_coloring import UNCOLORED, PartialColoring

logger = logging.getLogger(__name__)

MAX_WALKS = 10 ** 7
MAX_AUGMENTED_VERTICES = 5_000_000


@dataclass(frozen=True, eq=False)
class AugmentedGraph:
    """
    G-hat: G plus pendant (delta-1)-ary trees.

    Attributes:
        graph (Graph):
            The augmented graph. Vertices 0..original_count-1 are V(G), with the
            same adjacency as in G plus edges to tree roots.
        original_count (int):
            |V(G)|.
        k (int):
            Height of every pendant tree.
        delta (int):
            Degree every original vertex reaches.
        anchor (np.ndarray):
            For each vertex, the original vertex its tree hangs from (itself for originals).
        depth (np.ndarray):
            Distance to the anchor (0 for originals, 1 for tree roots, ...).
    """
    graph: Graph
    original_count: int
    k: int
    delta: int
    anchor: np.ndarray
    depth: np.ndarray

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def auxiliary_count(self) -> int:
        return self.graph.vertex_count - self.original_count

    def is_original(self, v: int) -> bool:
        return v < self.original_count

    @cached_property
    def padded(self) -> np.ndarray:
        """(vertex_count, delta) neighbor table, -1 where a vertex has fewer than delta neighbors."""
        out = np.full((self.graph.vertex_count, self.delta), -1, dtype=np.int64)
        for v, nbrs in enumerate(self.graph.adjacency):
            out[v, : len(nbrs)] = nbrs
        return out

    def validate(self, base: Graph) -> None:
        """
        Check the augmentation invariants against the graph it was built from.

        Raises:
            InvariantViolation: On the first failing invariant.
        """
        g = self.graph
        for v in range(self.original_count):
            if g.degree(v) != self.delta:
                raise InvariantViolation(f"original vertex {v} has degree {g.degree(v)} != {self.delta}")
        for v in range(self.original_count, g.vertex_count):
            if self.depth[v] <= self.k and g.degree(v) != self.delta:
                raise InvariantViolation(
                    f"auxiliary vertex {v} at depth {self.depth[v]} has degree {g.degree(v)} != {self.delta}"
                )
        for v in range(self.original_count):
            base_dist = bfs(base, v).dist
            aug_dist = bfs(g, v).dist[: self.original_count]
            if not np.array_equal(base_dist, aug_dist):
                raise InvariantViolation(f"pendant trees change distances from vertex {v}")


def tree_size(k: int, delta: int) -> int:
    """Nodes of one pendant tree: 1 + (delta-1) + ... + (delta-1)^k."""
    return sum((delta - 1) ** j for j in range(k + 1))


def augment(g: Graph, k: int, delta: int, max_vertices: int = MAX_AUGMENTED_VERTICES) -> AugmentedGraph:
    """
    Attach delta - d_G(v) pendant trees of height k to every vertex v.

    In each tree every node at height < k has delta-1 children. Tree nodes are
    numbered after the original vertices, anchor by anchor, in BFS order.

    Args:
        g: Graph with maximum degree <= delta.
        k: Tree height, k >= 1.
        delta: Target degree, delta >= 3.
        max_vertices: Guard on the size of the result.

    Returns:
        AugmentedGraph

    Raises:
        InvalidParameterError: If Delta(g) > delta, delta < 3 or k < 1.
        LimitsExceeded: If the augmented graph would exceed max_vertices.
    """
    if k < 1:
        raise InvalidParameterError(f"augment needs k >= 1, got {k}")
    if delta < 3:
        raise InvalidParameterError(f"augment needs delta >= 3, got {delta}")
    if g.max_degree > delta:
        raise InvalidParameterError(f"maximum degree {g.max_degree} exceeds delta={delta}")

    n = g.vertex_count
    per_tree = tree_size(k, delta)
    deficit = sum(delta - g.degree(v) for v in range(n))
    total = n + deficit * per_tree
    if total > max_vertices:
        raise LimitsExceeded(f"augmented graph would have {total} vertices (limit {max_vertices})")

    adjacency: List[List[int]] = [list(nbrs) for nbrs in g.adjacency]
    anchor = list(range(n))
    depth = [0] * n
    next_id = n
    for v in range(n):
        for _ in range(delta - g.degree(v)):
            root = next_id
            next_id += 1
            adjacency[v].append(root)
            adjacency.append([v])
            anchor.append(v)
            depth.append(1)
            level = [root]
            for _height in range(k):
                nxt = []
                for parent in level:
                    for _ in range(delta - 1):
                        child = next_id
                        next_id += 1
                        adjacency[parent].append(child)
                        adjacency.append([parent])
                        anchor.append(v)
                        depth.append(depth[parent] + 1)
                        nxt.append(child)
                level = nxt

    graph = Graph(vertex_count=next_id, adjacency=tuple(tuple(a) for a in adjacency))
    logger.debug(f"augment: {n} original + {next_id - n} auxiliary vertices (k={k}, delta={delta})")
    return AugmentedGraph(
        graph=graph,
        original_count=n,
        k=k,
        delta=delta,
        anchor=np.asarray(anchor, dtype=np.int64),
        depth=np.asarray(depth, dtype=np.int64),
    )


@dataclass(frozen=True)
class Walk:
    """
    A non-backtracking walk; vertices[0] is the origin, len(vertices) - 1 the length.
    """
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def endpoint(self) -> int:
        return self.vertices[-1]

    def is_valid(self, g: Graph) -> bool:
        vs = self.vertices
        for i in range(1, len(vs)):
            if not g.has_edge(vs[i - 1], vs[i]):
                return False
            if i >= 2 and vs[i] == vs[i - 2]:
                return False
        return True


@dataclass(frozen=True, eq=False)
class WalkOrder:
    """
    The fixed enumeration of non-backtracking walks from one origin.

    Walks are ordered by length, then lexicographically by the position of
    each step in the sorted adjacency. Only endpoints, lengths and parent
    pointers are stored; walk(i) rebuilds a walk on demand.

    Attributes:
        origin (int): Start vertex.
        max_len (int): Longest walk length.
        include_empty (bool): Whether index 0 is the empty walk.
        endpoints (np.ndarray): Endpoint of each walk.
        lengths (np.ndarray): Length of each walk.
        parents (np.ndarray): Index of the walk this one extends by one step, -1 if none.
    """
    origin: int
    max_len: int
    include_empty: bool
    endpoints: np.ndarray
    lengths: np.ndarray
    parents: np.ndarray

    def __len__(self) -> int:
        return int(self.endpoints.size)

    @property
    def nonempty_count(self) -> int:
        return len(self) - (1 if self.include_empty else 0)

    def walk(self, i: int) -> Walk:
        steps = []
        idx = i
        while idx != -1 and self.lengths[idx] > 0:
            steps.append(int(self.endpoints[idx]))
            idx = int(self.parents[idx])
        steps.append(self.origin)
        steps.reverse()
        return Walk(vertices=tuple(steps))

    def __iter__(self) -> Iterator[Walk]:
        for i in range(len(self)):
            yield self.walk(i)


def enumerate_walks(
    ag: AugmentedGraph,
    origin: int,
    max_len: int,
    include_empty: bool = False,
    max_walks: int = MAX_WALKS,
) -> WalkOrder:
    """
    Enumerate all non-backtracking walks of length <= max_len from an original vertex.

    There are exactly f(max_len, delta) non-empty ones, since every vertex a
    walk of length < max_len can stand on has degree delta in G-hat.

    Args:
        ag: Augmented graph.
        origin: Original vertex.
        max_len: Longest walk length, at most the augmentation height.
        include_empty: Prepend the empty walk (endpoint = origin).
        max_walks: Memory guard on the number of walks.

    Returns:
        WalkOrder

    Raises:
        InvalidParameterError: If origin is auxiliary or max_len is out of range.
        LimitsExceeded: If more than max_walks walks would be produced.
    """
    if not 0 <= origin < ag.original_count:
        raise InvalidParameterError(f"walk origin {origin} is not an original vertex")
    if not 0 <= max_len <= ag.k:
        raise InvalidParameterError(f"max_len={max_len} outside [0, {ag.k}] (augmentation height)")
    expected = f(max_len, ag.delta) + (1 if include_empty else 0)
    if expected > max_walks:
        raise LimitsExceeded(f"{expected} walks exceed the limit of {max_walks}")

    padded = ag.padded
    ends: List[np.ndarray] = []
    lens: List[np.ndarray] = []
    pars: List[np.ndarray] = []
    offset = 0
    if include_empty:
        ends.append(np.array([origin], dtype=np.int64))
        lens.append(np.zeros(1, dtype=np.int64))
        pars.append(np.full(1, -1, dtype=np.int64))
        offset = 1

    cur = np.array([origin], dtype=np.int64)
    prev = np.array([-1], dtype=np.int64)
    cur_index = np.array([0 if include_empty else -1], dtype=np.int64)
    for length in range(1, max_len + 1):
        cand = padded[cur]
        ok = (cand >= 0) & (cand != prev[:, None])
        rows, cols = np.nonzero(ok)
        nxt = cand[rows, cols]
        ends.append(nxt)
        lens.append(np.full(nxt.size, length, dtype=np.int64))
        pars.append(cur_index[rows])
        prev = cur[rows]
        cur = nxt
        cur_index = np.arange(offset, offset + nxt.size, dtype=np.int64)
        offset += nxt.size

    endpoints = np.concatenate(ends) if ends else np.zeros(0, dtype=np.int64)
    order = WalkOrder(
        origin=origin,
        max_len=max_len,
        include_empty=include_empty,
        endpoints=endpoints,
        lengths=np.concatenate(lens) if lens else np.zeros(0, dtype=np.int64),
        parents=np.concatenate(pars) if pars else np.zeros(0, dtype=np.int64),
    )
    if len(order) != expected:
        raise InvariantViolation(
            f"enumerated {len(order)} walks from {origin}, expected {expected}; "
            f"some vertex within distance {max_len - 1} has degree != {ag.delta}"
        )
    return order


@dataclass(frozen=True, eq=False)
class NiceCount:
    """
    Nice walks of one WalkOrder under one partial coloring.

    Attributes:
        count (int):
            Walks whose endpoint is uncolored, or carries a color already seen
            on an earlier walk's endpoint.
        literal_count (int):
            Walks whose endpoint is auxiliary, uncolored, or the endpoint of an
            earlier walk.
        flags (np.ndarray):
            Per-walk nice indicator for `count`.
        total (int):
            Number of walks considered.
    """
    count: int
    literal_count: int
    flags: np.ndarray
    total: int

    @property
    def forbidden(self) -> int:
        """Non-nice walks, i.e. distinct colors on colored endpoints."""
        return self.total - self.count


def _first_occurrence(values: np.ndarray) -> np.ndarray:
    mask = np.zeros(values.size, dtype=bool)
    if values.size:
        _, first = np.unique(values, return_index=True)
        mask[first] = True
    return mask


def count_nice(order: WalkOrder, coloring: PartialColoring, original_count: int) -> NiceCount:
    """
    Classify the walks of `order` as nice or not.

    A walk is nice when its endpoint is uncolored (auxiliary vertices are
    uncolored unless a procedure precolored them) or when its endpoint's color
    already appeared on the endpoint of an earlier walk; the first walk
    reaching each color is the only non-nice one. The literal reading (vertex
    repeats instead of color repeats, every auxiliary endpoint nice) is
    reported alongside.

    Args:
        order: Walk enumeration (the empty walk, if present, takes part).
        coloring: Coloring over V(G-hat).
        original_count: |V(G)|.

    Returns:
        NiceCount
    """
    ends = order.endpoints
    colors = coloring.colors[ends]
    uncolored = colors == UNCOLORED

    first_color = np.zeros(ends.size, dtype=bool)
    colored_idx = np.flatnonzero(~uncolored)
    first_color[colored_idx[_first_occurrence(colors[colored_idx])]] = True
    flags = ~first_color

    literal = (ends >= original_count) | uncolored | ~_first_occurrence(ends)
    return NiceCount(
        count=int(flags.sum()),
        literal_count=int(literal.sum()),
        flags=flags,
        total=int(ends.size),
    )


class BoundCase(str, Enum):
    ROOT_NOT_X = "root_not_x"
    ROOT_X_IN_N = "root_x_in_N"


def analytic_bound_main(d: int, dprime: int, k: int, case: BoundCase) -> int:
    """
    Lower bound on nice walks of length <= k guaranteed by the case analysis of
    the path-precolored procedure.

    Args:
        d: Distance from the vertex to its root.
        dprime: Distance from the root to the path center x.
        k: Power.
        case: ROOT_X_IN_N for vertices of N, ROOT_NOT_X otherwise.

    Returns:
        int
    """
    if d < 0 or dprime < 0:
        raise InvalidParameterError(f"distances must be non-negative, got d={d}, dprime={dprime}")
    case = BoundCase(case)
    if case is BoundCase.ROOT_X_IN_N:
        if d >= k:
            return 2 * k - 3
        if 2 * d >= k:
            return 2 * d - 2
        return k - 2
    subpaths = max(min(d - 1, k), 0)
    side_steps = min(d, k) - 2 if d >= 2 else 0
    along_path = max(min(d + dprime, k) - d - 1, 0)
    into_center = max(k - d - dprime + 1, 0)
    return subpaths + side_steps + along_path + into_center
