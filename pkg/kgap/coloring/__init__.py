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
from .colorizer import (
    PathWitness,
    find_far_pair,
    precolor_improved,
    precolor_main,
    run_improved_procedure,
    run_main_procedure,
    verify_coloring,
)
from .oracle import OracleLimits, exact_chromatic, exact_gap, greedy_upper
from .report import ProcedureReport, StepRecord
