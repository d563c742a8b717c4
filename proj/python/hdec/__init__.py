# Copyright 2026 The hdec Authors
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

"""Decide consistency of conditional domain constraints, losslessness of
horizontal decompositions, and separability of FD/UIND combinations."""

from ._core import (
    HdecError,
    ParseError,
    Problem,
    check_consistency,
    check_global_consistency,
    check_losslessness,
    classify,
    dp_closure,
    parse_problem,
    sat_to_consistency,
    unsat_to_losslessness,
    utvpi_sat,
)

__all__ = [
    "HdecError",
    "ParseError",
    "Problem",
    "check_consistency",
    "check_global_consistency",
    "check_losslessness",
    "classify",
    "dp_closure",
    "load",
    "parse_problem",
    "sat_to_consistency",
    "unsat_to_losslessness",
    "utvpi_sat",
]


def load(path, mode=None):
    """Parse a problem file."""
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read(), mode)
