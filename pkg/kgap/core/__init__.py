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
from .bounds import (
    GapRecord,
    chi_cycle_power,
    chi_path_power,
    diameter_bound_improved,
    diameter_bound_main,
    f,
    f_closed_form,
    gap,
    gap_from,
    h_gap_bound,
    max_improved_s,
    moore_bound,
    palette_improved,
    palette_main,
    vertex_bound_main,
)
from .errors import (
    DisconnectedGraphError,
    GraphError,
    InvalidParameterError,
    InvariantViolation,
    KGapError,
    LimitsExceeded,
    MalformedGraph6Error,
    PaletteExhausted,
    PreconditionViolated,
    UncoloredVertexError,
)
from .graph import Graph, ball, bfs, build_graph, diameter, from_graph6, power, shortest_path, to_graph6
from .partial_coloring import UNCOLORED, PartialColoring
from .walks import AugmentedGraph, WalkOrder, augment, count_nice, enumerate_walks
