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
Named graph families used as test corpus and by `kgap generate`.
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidParameterError
from .graph import Graph, build_graph

logger = logging.getLogger(__name__)

RANDOM_REGULAR_MAX_RETRIES = 1000


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def prism_graph(n: int) -> Graph:
    """C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1, spokes i -- i+n."""
    if n < 3:
        raise InvalidParameterError(f"prism needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.append((i, j))
        edges.append((n + i, n + j))
        edges.append((i, n + i))
    return build_graph(2 * n, edges)


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return build_graph(10, edges)


def _tree_edges(arity: int, height: int) -> Tuple[int, List[Tuple[int, int]]]:
    # root gets `arity` children, every other node above the last level gets arity-1
    edges: List[Tuple[int, int]] = []
    level = [0]
    count = 1
    for depth in range(height):
        children = arity if depth == 0 else arity - 1
        nxt = []
        for parent in level:
            for _ in range(children):
                edges.append((parent, count))
                nxt.append(count)
                count += 1
        level = nxt
    return count, edges


def dary_tree(arity: int, height: int) -> Graph:
    """
    Tree of the given height whose root has `arity` children and whose other
    internal nodes have arity-1 children, numbered in BFS order.

    It has 1 + f(height, arity) vertices and maximum degree `arity`.
    """
    if arity < 2:
        raise InvalidParameterError(f"dary_tree needs arity >= 2, got {arity}")
    if height < 0:
        raise InvalidParameterError(f"dary_tree needs height >= 0, got {height}")
    n, edges = _tree_edges(arity, height)
    return build_graph(n, edges)


def subdivided_tree(arity: int, height: int, subdivisions: int) -> Graph:
    """dary_tree(arity, height) with every edge replaced by a path of subdivisions+1 edges."""
    if subdivisions < 0:
        raise InvalidParameterError(f"subdivisions must be >= 0, got {subdivisions}")
    base = dary_tree(arity, height)
    count = base.vertex_count
    edges: List[Tuple[int, int]] = []
    for u, v in base.edges():
        prev = u
        for _ in range(subdivisions):
            edges.append((prev, count))
            prev = count
            count += 1
        edges.append((prev, v))
    return build_graph(count, edges)


def random_regular(n: int, d: int, seed: Optional[int] = None,
                   max_retries: int = RANDOM_REGULAR_MAX_RETRIES) -> Graph:
    """
    Random simple d-regular graph from the pairing (configuration) model.

    Stubs are shuffled and paired; a pairing with a loop or a repeated edge is
    rejected as a whole and redrawn. The result only depends on (n, d, seed).

    Args:
        n: Number of vertices.
        d: Degree.
        seed: Seed for numpy's default_rng.
        max_retries: Number of pairings to draw before giving up.

    Returns:
        Graph

    Raises:
        InvalidParameterError: If n*d is odd, d >= n, d < 0, or no simple
            pairing was drawn within max_retries.
    """
    if (n * d) % 2 != 0:
        raise InvalidParameterError("n * d must be even")
    if not 0 <= d < n:
        raise InvalidParameterError("the 0 <= d < n inequality must be satisfied")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for attempt in range(max_retries):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        lo = pairs.min(axis=1)
        hi = pairs.max(axis=1)
        if (lo == hi).any():
            continue
        keys = lo * n + hi
        if np.unique(keys).size != keys.size:
            continue
        logger.debug(f"random_regular(n={n}, d={d}, seed={seed}) accepted after {attempt + 1} pairings")
        return build_graph(n, zip(lo.tolist(), hi.tolist()))
    raise InvalidParameterError(
        f"no simple {d}-regular pairing on {n} vertices within {max_retries} retries"
    )


_GENERATORS: Dict[str, Tuple[Callable[..., Graph], Tuple[str, ...]]] = {
    "path": (path_graph, ("n",)),
    "cycle": (cycle_graph, ("n",)),
    "complete": (complete_graph, ("n",)),
    "prism": (prism_graph, ("n",)),
    "petersen": (petersen_graph, ()),
    "dary_tree": (dary_tree, ("arity", "height")),
    "subdivided_tree": (subdivided_tree, ("arity", "height", "subdivisions")),
    "random_regular": (random_regular, ("n", "d")),
}

GENERATOR_KINDS: Tuple[str, ...] = tuple(_GENERATORS)


def generator_params(kind: str) -> Tuple[str, ...]:
    if kind not in _GENERATORS:
        raise InvalidParameterError(f"Unknown graph kind: {kind}. Supported: {list(GENERATOR_KINDS)}")
    return _GENERATORS[kind][1]


def generate(kind: str, params: Sequence[int] = (), seed: Optional[int] = None) -> Graph:
    """
    Build a named graph.

    Args:
        kind: One of GENERATOR_KINDS.
        params: Positional integer parameters, see generator_params(kind).
        seed: Only used by random_regular.

    Returns:
        Graph

    Raises:
        InvalidParameterError: Unknown kind, wrong parameter count or infeasible parameters.
    """
    names = generator_params(kind)
    if len(params) != len(names):
        raise InvalidParameterError(
            f"{kind} expects {len(names)} parameter(s) ({', '.join(names) or 'none'}), got {len(params)}"
        )
    fn = _GENERATORS[kind][0]
    args = [int(p) for p in params]
    if kind == "random_regular":
        return fn(*args, seed=seed)
    return fn(*args)
