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
Simple undirected graphs on dense 0-based vertex indices.

Graph values are immutable; every function here is a pure function of its
inputs, so graphs can be shared freely between workers.
"""
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from .errors import DisconnectedGraphError, GraphError, InvalidParameterError, MalformedGraph6Error

UNREACHABLE = -1

_G6_OFFSET = 63
_G6_MAX_CHAR = 126


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph stored as sorted adjacency tuples.

    Attributes:
        vertex_count (int):
            Number of vertices; vertices are 0..vertex_count-1.
        adjacency (Tuple[Tuple[int, ...], ...]):
            Sorted neighbor indices of every vertex. Symmetric, loop-free,
            without duplicates.
    """
    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"vertex_count must be non-negative, got {self.vertex_count}")
        if len(self.adjacency) != self.vertex_count:
            raise GraphError(
                f"adjacency has {len(self.adjacency)} rows for {self.vertex_count} vertices"
            )
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.vertex_count:
                    raise GraphError(f"neighbor {u} of vertex {v} is out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if u <= prev:
                    raise GraphError(f"adjacency of vertex {v} is not strictly sorted")
                prev = u
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not _contains_sorted(self.adjacency[u], v):
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    def __len__(self) -> int:
        return self.vertex_count

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return _contains_sorted(self.adjacency[u], v)

    def is_complete(self) -> bool:
        n = self.vertex_count
        return all(len(a) == n - 1 for a in self.adjacency)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """
        Convert a networkx graph, numbering vertices in the graph's node order.

        Args:
            g: Undirected networkx graph without self-loops.

        Returns:
            Graph
        """
        index = {node: i for i, node in enumerate(g.nodes())}
        return build_graph(len(index), [(index[a], index[b]) for a, b in g.edges()])


def _contains_sorted(xs: Tuple[int, ...], x: int) -> bool:
    lo, hi = 0, len(xs)
    while lo < hi:
        mid = (lo + hi) // 2
        if xs[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(xs) and xs[lo] == x


@dataclass(frozen=True, eq=False)
class DistanceTable:
    """
    Single-source unweighted distances.

    Attributes:
        source (int):
            BFS source vertex.
        dist (np.ndarray):
            int64 array of length vertex_count, UNREACHABLE (-1) where the
            vertex is not reached (or lies beyond the BFS cutoff).
    """
    source: int
    dist: np.ndarray

    def __getitem__(self, v: int) -> int:
        return int(self.dist[v])

    def reachable(self, v: int) -> bool:
        return self.dist[v] != UNREACHABLE

    @property
    def eccentricity(self) -> int:
        return int(self.dist.max()) if self.dist.size else 0

    def farthest(self) -> int:
        """Lowest-index vertex at maximum distance."""
        return int(np.argmax(self.dist))

    def within(self, radius: int) -> List[int]:
        """Reached vertices at distance <= radius, ascending."""
        mask = (self.dist != UNREACHABLE) & (self.dist <= radius)
        return [int(v) for v in np.flatnonzero(mask)]


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a canonical Graph from an edge list.

    Duplicate pairs (in either orientation) collapse into one edge.

    Args:
        n: Number of vertices.
        edges: Index pairs.

    Returns:
        Graph

    Raises:
        GraphError: If an index is out of range or a pair is a self-loop.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an index out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(vertex_count=n, adjacency=tuple(tuple(sorted(a)) for a in nbrs))


def bfs(g: Graph, source: int, cutoff: Optional[int] = None) -> DistanceTable:
    """
    Unweighted shortest-path distances from source.

    Args:
        g: Graph.
        source: Start vertex.
        cutoff: Optional depth limit; vertices farther than cutoff are UNREACHABLE.

    Returns:
        DistanceTable
    """
    if not 0 <= source < g.vertex_count:
        raise GraphError(f"source {source} out of range for n={g.vertex_count}")
    dist = np.full(g.vertex_count, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v]
        if cutoff is not None and dv >= cutoff:
            continue
        for u in adjacency[v]:
            if dist[u] == UNREACHABLE:
                dist[u] = dv + 1
                queue.append(u)
    return DistanceTable(source=source, dist=dist)


def ball(g: Graph, center: int, radius: int) -> List[int]:
    """Closed neighborhood of center at distance radius, ascending."""
    return bfs(g, center, cutoff=radius).within(radius)


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return bool((bfs(g, 0).dist != UNREACHABLE).all())


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs distances, UNREACHABLE between components."""
    n = g.vertex_count
    out = np.empty((n, n), dtype=np.int64)
    for v in range(n):
        out[v] = bfs(g, v).dist
    return out


def diameter(g: Graph) -> Tuple[int, Tuple[int, int]]:
    """
    Exact diameter by BFS from every vertex.

    The witness is the first source (ascending) of maximum eccentricity
    paired with its lowest-index farthest vertex.

    Returns:
        Tuple[int, Tuple[int, int]]: (diameter, (a, b)) with d(a, b) = diameter.

    Raises:
        DisconnectedGraphError: If g is disconnected (or empty).
    """
    if g.vertex_count == 0:
        raise DisconnectedGraphError("the empty graph has no diameter")
    best = -1
    witness = (0, 0)
    for v in range(g.vertex_count):
        table = bfs(g, v)
        if (table.dist == UNREACHABLE).any():
            raise DisconnectedGraphError("diameter requires a connected graph")
        ecc = table.eccentricity
        if ecc > best:
            best = ecc
            witness = (v, table.farthest())
    return best, witness


def shortest_path(g: Graph, a: int, b: int) -> List[int]:
    """
    One shortest path from a to b.

    Deterministic: BFS scans sorted adjacency and keeps the first parent found.

    Raises:
        DisconnectedGraphError: If b is not reachable from a.
    """
    parent = [-1] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[a] = True
    queue = deque([a])
    while queue and not seen[b]:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                queue.append(u)
    if not seen[b]:
        raise DisconnectedGraphError(f"no path between {a} and {b}")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def power(g: Graph, k: int) -> Graph:
    """
    k-th power: u and v are adjacent iff 1 <= d_G(u, v) <= k.

    Raises:
        InvalidParameterError: If k < 1.
    """
    if k < 1:
        raise InvalidParameterError(f"power requires k >= 1, got {k}")
    if k == 1:
        return g
    edges = []
    for u in range(g.vertex_count):
        for v in bfs(g, u, cutoff=k).within(k):
            if v > u:
                edges.append((u, v))
    return build_graph(g.vertex_count, edges)


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, None for forests."""
    best: Optional[int] = None
    for s in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        parent = [-1] * g.vertex_count
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def from_graph6(text: str) -> Graph:
    """
    Decode one graph6 line (optional ">>graph6<<" header, surrounding whitespace ignored).

    Raises:
        MalformedGraph6Error: If the text is empty, holds characters outside
            63..126, or its length does not match the encoded vertex count.
    """
    if text is None:
        raise MalformedGraph6Error("graph6 text is None")
    s = str(text).strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6Error("graph6 text is empty")
    bad = [ch for ch in s if not _G6_OFFSET <= ord(ch) <= _G6_MAX_CHAR]
    if bad:
        raise MalformedGraph6Error(f"graph6 characters must be in range(63, 127), got {bad[0]!r}")
    try:
        g = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise MalformedGraph6Error(f"invalid graph6 text {s!r}: {e}") from e
    return Graph.from_networkx(g)


def to_graph6(g: Graph) -> str:
    """Encode g as one graph6 line without header or trailing newline."""
    data = nx.to_graph6_bytes(g.to_networkx(), header=False)
    return data.decode("ascii").rstrip("\n")


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Tuple[int, str]]:
    """Yield (1-based line number, stripped text) for every non-blank line."""
    for i, line in enumerate(lines, start=1):
        s = line.strip()
        if s:
            yield i, s
