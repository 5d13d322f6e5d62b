# Copyright 2026 The drinfeld-heights Authors
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
"""Exact arithmetic and heights for Drinfeld modules over F_q(t).

Elements of F_q(t), polynomials and places are passed as strings in the same
text format as the command line tool ("t^3+2*t+1", "(t+1)/t", "inf").
Heights come back as fractions.Fraction in log_q units.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    InvariantError,
    Module,
    ParseError,
    ResourceError,
    factor,
    is_irreducible,
    product_formula_check,
    s_integral,
    support,
    valuation,
)

__all__ = [
    "DomainError",
    "InvariantError",
    "Module",
    "ParseError",
    "ResourceError",
    "canonical_height",
    "factor",
    "is_irreducible",
    "local_height",
    "product_formula_check",
    "run",
    "s_integral",
    "support",
    "valuation",
    "weil_height",
]


def weil_height(q, x, modulus=""):
    return Fraction(_core.weil_height(q, x, modulus))


def canonical_height(module, x, iter_cap=12, annulus_cap=3):
    """Returns (value, exact) with value a Fraction.

    When exact is False, value is the certified lower bound and the true
    height lies below the sum of the local upper bounds.
    """
    h = module.canonical_height(x, iter_cap, annulus_cap)
    return Fraction(h["value"]), h["exact"]


def local_height(module, x, place, iter_cap=12, annulus_cap=3):
    r = module.local_height(x, place, iter_cap, annulus_cap)
    return Fraction(r["value"]), r["exact"]


def run(command, config):
    """Runs one of heights/torsion/orbit/siegel/silverman/ratios.

    config is a dict or a JSON string; returns (summary text, {file: contents}).
    """
    if not isinstance(config, str):
        config = json.dumps(config)
    return _core.run(command, config)
