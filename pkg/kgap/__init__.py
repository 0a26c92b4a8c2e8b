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
kgap: colorings of graph powers and k-gap measurement.
"""

from .coloring import (
    OracleLimits,
    ProcedureReport,
    exact_chromatic,
    exact_gap,
    run_improved_procedure,
    run_main_procedure,
    verify_coloring,
)
from .core import Graph, f, from_graph6, power, to_graph6

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Graph",
    "OracleLimits",
    "ProcedureReport",
    "exact_chromatic",
    "exact_gap",
    "f",
    "from_graph6",
    "power",
    "run_improved_procedure",
    "run_main_procedure",
    "to_graph6",
    "verify_coloring",
]
