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
Exceptions raised across kgap.

Input problems subclass ValueError and internal failures subclass RuntimeError,
so callers that only catch builtins keep working.
"""
from typing import Any, Optional


class KGapError(Exception):
    """Base class for every error raised by kgap."""


class GraphError(KGapError, ValueError):
    """Invalid graph data (out-of-range index, self-loop, ...)."""


class DisconnectedGraphError(GraphError):
    """The operation needs a connected graph."""


class MalformedGraph6Error(GraphError):
    """The text is not a valid graph6 encoding."""


class InvalidParameterError(KGapError, ValueError):
    """A numeric parameter is outside its admissible range."""


class PreconditionViolated(KGapError, ValueError):
    """
    A coloring procedure was called on a graph it does not apply to.

    Attributes:
        precondition (str):
            Short name of the violated precondition, e.g. "diameter",
            "max_degree", "k", "s", "connected", "distance".
    """

    def __init__(self, precondition: str, message: str):
        super().__init__(f"precondition '{precondition}' violated: {message}")
        self.precondition = precondition


class LimitsExceeded(KGapError, RuntimeError):
    """A size, branch or time budget was exhausted before an exact answer."""


class InvariantViolation(KGapError, RuntimeError):
    """An internal invariant failed. This always indicates a defect or a counterexample."""


class PaletteExhausted(InvariantViolation):
    """
    A greedy step found no free color in the palette.

    Attributes:
        vertex (int): The vertex that could not be colored.
        report (Any): The ProcedureReport collected up to the failing step.
    """

    def __init__(self, vertex: int, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.vertex = vertex
        self.report = report


class UncoloredVertexError(KGapError, ValueError):
    """A coloring to verify leaves an original vertex uncolored."""
