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
Entry point of the kgap command line.
"""
import argparse
import logging
import sys

from ..core.errors import (
    GraphError,
    InvalidParameterError,
    InvariantViolation,
    LimitsExceeded,
    MalformedGraph6Error,
    PreconditionViolated,
)
from . import chroma, color, generate, power, survey
from .common import EXIT_INVARIANT, EXIT_LIMITS, EXIT_MALFORMED, EXIT_PRECONDITION, fail

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgap",
        description=(
            "Colorings of graph powers and k-gap measurement.\n\n"
            "Graphs are read and written as graph6, one per line.\n"
            "Exit codes: 0 ok, 2 precondition or parameter, 3 limits exceeded,\n"
            "4 malformed input, 5 internal invariant failure.\n"
        ),
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level on stderr (default: WARNING).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for module in (generate, power, chroma, color, survey):
        module.add_parser(sub)
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT, stream=sys.stderr)

    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    try:
        return args.run(args, stdin, stdout)
    except PreconditionViolated as e:
        fail(str(e))
        return EXIT_PRECONDITION
    except MalformedGraph6Error as e:
        fail(f"malformed input: {e}")
        return EXIT_MALFORMED
    except UnicodeError as e:
        fail(f"malformed input: {e}")
        return EXIT_MALFORMED
    except (InvalidParameterError, GraphError) as e:
        fail(str(e))
        return EXIT_PRECONDITION
    except LimitsExceeded as e:
        fail(f"limits exceeded: {e}")
        return EXIT_LIMITS
    except InvariantViolation as e:
        logger.exception("internal invariant failure")
        fail(f"internal invariant failure: {e}")
        return EXIT_INVARIANT
    except OSError as e:
        fail(f"cannot read input: {e}")
        return EXIT_MALFORMED


if __name__ == "__main__":
    raise SystemExit(main())
