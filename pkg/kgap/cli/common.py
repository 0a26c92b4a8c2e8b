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
Helpers shared by the kgap subcommands.
"""
import json
import sys
from dataclasses import asdict
from typing import Any, Dict, Iterator, Optional, TextIO

from ..coloring.oracle import OracleLimits
from ..core.errors import InvalidParameterError
from ..core.graph import read_graph6_lines

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_LIMITS = 3
EXIT_MALFORMED = 4
EXIT_INVARIANT = 5


def _parse_json_dict(s: Optional[str], *, name: str) -> Dict[str, Any]:
    if s is None or not str(s).strip():
        return {}
    try:
        obj = json.loads(s)
    except Exception as e:
        raise InvalidParameterError(f"Invalid JSON for {name}: {e}")
    if not isinstance(obj, dict):
        raise InvalidParameterError(f"{name} must be a JSON object (dict).")
    return obj


def _merge_dicts(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    out = dict(base)
    out.update(override)
    return out


def oracle_limits(raw: Optional[str], **defaults: Any) -> OracleLimits:
    """OracleLimits from the library defaults, then `defaults`, then the --oracle-kwargs JSON."""
    kwargs = _merge_dicts(asdict(OracleLimits()), defaults)
    kwargs = _merge_dicts(kwargs, _parse_json_dict(raw, name="--oracle-kwargs"))
    try:
        return OracleLimits(**kwargs)
    except TypeError as e:
        raise InvalidParameterError(f"--oracle-kwargs: {e}")


def add_oracle_kwargs(parser) -> None:
    parser.add_argument(
        "--oracle-kwargs",
        default=None,
        help=(
            "JSON dict overriding oracle limits.\n"
            "Example: '{\"branch_limit\": 100000, \"time_budget\": 30}'\n"
        ),
    )


def ascii_lines(stream) -> Iterator[str]:
    """
    Lines of a text or binary stream decoded as ASCII.

    Undecodable bytes survive as lone surrogates, so graph6 validation rejects
    the offending line and not the whole stream.
    """
    raw = getattr(stream, "buffer", stream)
    for line in raw:
        yield line.decode("ascii", errors="surrogateescape") if isinstance(line, bytes) else line


def first_graph6(text: Optional[str], stream: TextIO = None) -> Optional[str]:
    """The graph6 argument if given, else the first non-blank line of stream (stdin by default)."""
    if text is not None and str(text).strip():
        return str(text).strip()
    for _, line in read_graph6_lines(stream if stream is not None else sys.stdin):
        return line
    return None


def fail(message: str) -> None:
    print(f"kgap: error: {message}", file=sys.stderr)
