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
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from .errors import InvalidParameterError

UNCOLORED = -1


@dataclass(eq=False)
class PartialColoring:
    """
    Optional color per vertex with a declared palette.

    Colors are 0-based. Properness is not checked here; see
    kgap.coloring.colorizer.verify_coloring.

    Attributes:
        colors (np.ndarray):
            int64 array, UNCOLORED (-1) for uncolored vertices.
        palette_size (int):
            Every assigned color is < palette_size.
    """
    colors: np.ndarray
    palette_size: int

    def __post_init__(self):
        self.colors = np.asarray(self.colors, dtype=np.int64)
        if self.palette_size < 0:
            raise InvalidParameterError(f"palette_size must be >= 0, got {self.palette_size}")
        if self.colors.size and (self.colors.max() >= self.palette_size or self.colors.min() < UNCOLORED):
            raise InvalidParameterError(f"colors outside [-1, {self.palette_size})")

    @classmethod
    def empty(cls, vertex_count: int, palette_size: int) -> "PartialColoring":
        return cls(colors=np.full(vertex_count, UNCOLORED, dtype=np.int64), palette_size=palette_size)

    @classmethod
    def from_colors(cls, colors: Sequence[Optional[int]], palette_size: Optional[int] = None) -> "PartialColoring":
        arr = np.array([UNCOLORED if c is None else int(c) for c in colors], dtype=np.int64)
        if palette_size is None:
            palette_size = int(arr.max()) + 1 if arr.size else 0
        return cls(colors=arr, palette_size=palette_size)

    def __len__(self) -> int:
        return int(self.colors.size)

    def color_of(self, v: int) -> Optional[int]:
        c = int(self.colors[v])
        return None if c == UNCOLORED else c

    def is_colored(self, v: int) -> bool:
        return self.colors[v] != UNCOLORED

    def assign(self, v: int, color: int) -> None:
        if not 0 <= color < self.palette_size:
            raise InvalidParameterError(f"color {color} outside palette of size {self.palette_size}")
        self.colors[v] = color

    def colored_vertices(self) -> List[int]:
        return [int(v) for v in np.flatnonzero(self.colors != UNCOLORED)]

    def colors_used(self, limit: Optional[int] = None) -> int:
        """Number of distinct colors on vertices 0..limit-1 (all vertices by default)."""
        part = self.colors if limit is None else self.colors[:limit]
        part = part[part != UNCOLORED]
        return int(np.unique(part).size)

    def as_dict(self, limit: Optional[int] = None) -> Dict[int, int]:
        """vertex -> color for colored vertices among 0..limit-1."""
        part = self.colors if limit is None else self.colors[:limit]
        return {int(v): int(part[v]) for v in np.flatnonzero(part != UNCOLORED)}

    def copy(self) -> "PartialColoring":
        return PartialColoring(colors=self.colors.copy(), palette_size=self.palette_size)
