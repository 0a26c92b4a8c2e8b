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
Closed-form quantities around the naive bound f(k, Delta) + 1 for chi(G^k).
"""
from dataclasses import dataclass

from .errors import InvalidParameterError
from .graph import Graph


def f(k: int, delta: int) -> int:
    """
    Number of non-root nodes of a Delta-ary tree of height k, i.e. the largest
    possible degree of G^k when Delta(G) = delta.

    Computed as delta * sum_{i<k} (delta-1)^i, which stays valid at delta = 2.
    Python integers are unbounded, so the value is exact for every k.

    Args:
        k: Height, k >= 0 (f(0, delta) = 0).
        delta: Maximum degree, delta >= 2.

    Returns:
        int
    """
    if k < 0:
        raise InvalidParameterError(f"f needs k >= 0, got {k}")
    if delta < 2:
        raise InvalidParameterError(f"f needs delta >= 2, got {delta}")
    total = 0
    term = 1
    for _ in range(k):
        total += term
        term *= delta - 1
    return delta * total


def f_closed_form(k: int, delta: int) -> int:
    """delta * ((delta-1)^k - 1) / (delta-2); only defined for delta >= 3."""
    if delta < 3:
        raise InvalidParameterError(f"the closed form needs delta >= 3, got {delta}")
    num = delta * ((delta - 1) ** k - 1)
    q, r = divmod(num, delta - 2)
    if r:
        raise ArithmeticError(f"non-integral closed form at k={k}, delta={delta}")
    return q


def chi_path_power(n: int, k: int) -> int:
    """chi(P_n^k) = min(n, k+1)."""
    if n < 1 or k < 1:
        raise InvalidParameterError(f"chi_path_power needs n >= 1 and k >= 1, got n={n}, k={k}")
    return min(n, k + 1)


def chi_cycle_power(n: int, k: int) -> int:
    """
    chi(C_n^k): n when n <= k+1, otherwise k+1+ceil(r/q) with n = q(k+1) + r, 0 <= r <= k.
    """
    if n < 3 or k < 1:
        raise InvalidParameterError(f"chi_cycle_power needs n >= 3 and k >= 1, got n={n}, k={k}")
    if n <= k + 1:
        return n
    q, r = divmod(n, k + 1)
    return k + 1 + (-(-r // q))


def palette_main(k: int, delta: int) -> int:
    """Palette of the path-precolored greedy procedure: f(k, delta) + 3 - k."""
    if k < 3 or delta < 3:
        raise InvalidParameterError(f"palette_main needs k >= 3 and delta >= 3, got k={k}, delta={delta}")
    return f(k, delta) + 3 - k


def max_improved_s(k: int) -> int:
    """Largest s allowed by 12 s <= k - 5 (may be <= 0 for small k)."""
    return (k - 5) // 12


def palette_improved(k: int, delta: int, s: int) -> int:
    """Palette of the ball-precolored greedy procedure: f(k, delta) - f(s, delta)."""
    if k < 3 or delta < 3:
        raise InvalidParameterError(f"palette_improved needs k >= 3 and delta >= 3, got k={k}, delta={delta}")
    if s < 1 or 12 * s > k - 5:
        raise InvalidParameterError(f"palette_improved needs 1 <= s <= (k-5)/12, got s={s}, k={k}")
    return f(k, delta) - f(s, delta)


def h_gap_bound(k: int, delta: int) -> int:
    """
    f(s, delta) + 1 with s = floor((k-5)/12): the gap every graph of large
    diameter is guaranteed by the ball-precolored procedure. Needs k >= 17.
    """
    s = max_improved_s(k)
    if s < 1:
        raise InvalidParameterError(f"h_gap_bound needs k >= 17, got {k}")
    return f(s, delta) + 1


def diameter_bound_main(k: int) -> int:
    """Graphs with g_k < k-2 have diameter at most 2k-3."""
    return 2 * k - 3


def diameter_bound_improved(k: int, s: int) -> int:
    """Graphs with g_k < f(s, Delta)+1 have diameter at most k+2s."""
    return k + 2 * s


def moore_bound(diam: int, delta: int) -> int:
    """Largest vertex count of a graph with maximum degree delta and the given diameter."""
    return 1 + f(diam, delta)


def vertex_bound_main(k: int, delta: int) -> int:
    """Vertex count bound for graphs of maximum degree delta with g_k < k-2."""
    return moore_bound(diameter_bound_main(k), delta)


@dataclass(frozen=True)
class GapRecord:
    """
    k-gap of one graph.

    Attributes:
        k (int): Power.
        delta (int): Maximum degree of the graph.
        chi (int): Chromatic number of the k-th power.
        gap (int): f(k, delta) + 1 - chi.
    """
    k: int
    delta: int
    chi: int
    gap: int

    def __post_init__(self):
        if self.gap != f(self.k, self.delta) + 1 - self.chi:
            raise InvalidParameterError(
                f"gap {self.gap} inconsistent with f({self.k},{self.delta})+1-{self.chi}"
            )

    def small(self, threshold: int) -> bool:
        """True when gap < threshold."""
        return self.gap < threshold


def gap_from(k: int, delta: int, chi: int) -> GapRecord:
    return GapRecord(k=k, delta=delta, chi=chi, gap=f(k, delta) + 1 - chi)


def gap(g: Graph, k: int, chi: int) -> GapRecord:
    """
    k-gap record of g given chi = chi(g^k).

    Raises:
        InvalidParameterError: If Delta(g) < 2 or k < 1.
    """
    if k < 1:
        raise InvalidParameterError(f"gap needs k >= 1, got {k}")
    return gap_from(k, g.max_degree, chi)
