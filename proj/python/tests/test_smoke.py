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
import json
from fractions import Fraction

import pytest

import drinfeld


def test_carlitz_heights():
    c3 = drinfeld.Module(3, ["t", "1"])
    assert c3.rank == 1
    assert drinfeld.canonical_height(c3, "1") == (Fraction(1, 3), True)
    assert drinfeld.canonical_height(c3, "t") == (Fraction(1), True)
    assert drinfeld.local_height(c3, "1/t", "t") == (Fraction(1), True)
    c2 = drinfeld.Module(2, ["t", "1"])
    assert drinfeld.canonical_height(c2, "1") == (Fraction(0), True)
    assert c2.torsion_order("1", 2) == "t^2+t"
    assert c3.torsion_order("1", 6) is None


def test_twisted_and_places():
    c2 = drinfeld.Module(2, ["t", "1"])
    assert c2.phi_of("t^2") == ["t^2", "t^2+t", "1"]
    assert c2.apply("t", "1") == "t+1"
    assert drinfeld.valuation(3, "(t^2-1)/t", "t+2") == 1
    assert drinfeld.valuation(3, "0", "inf") is None
    assert drinfeld.support(2, "(t+1)^2/t") == [("t+1", 2), ("t", -1), ("inf", -1)]
    assert drinfeld.product_formula_check(3, "(t^2-1)/t") == 0
    assert drinfeld.weil_height(2, "(t+1)^2/t") == 2
    assert drinfeld.is_irreducible(2, "t^2+t+1")
    assert drinfeld.factor(3, "t^3-t") == [("t", 1), ("t+1", 1), ("t+2", 1)]


def test_integrality_and_extension_field():
    assert drinfeld.s_integral(3, "1/t", "0", ["inf", "t"])
    assert not drinfeld.s_integral(3, "t+1", "0", ["inf"])
    m = drinfeld.Module(4, ["t", "u"], modulus="u^2+u+1")
    assert m.q == 4
    assert m.reduction_type("t") == "good"


def test_run_siegel_matches_cli_format():
    cfg = {"q": 3, "phi_t": ["t", "1"], "generators": ["1"], "alpha": "1", "S": ["inf"], "deg_caps": [0, 1, 2]}
    summary, files = drinfeld.run("siegel", cfg)
    assert "counts stabilized" in summary
    counts = json.loads(files["siegel_summary.json"])["counts"]
    assert counts == {"0": 2, "1": 2, "2": 2}
    assert files["siegel.csv"].splitlines()[0] == "tuple,point_num_deg,point_den_deg,s_integral,ratio@inf"


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        drinfeld.Module(3, ["t+1", "1"])
    with pytest.raises(ValueError):
        drinfeld.Module(6, ["t", "1"])
    with pytest.raises(ValueError):
        drinfeld.run("heights", {"q": 3})
    with pytest.raises(RuntimeError):
        drinfeld.run("siegel", {"q": 3, "phi_t": ["t", "1"], "generators": ["1"], "alpha": "1",
                                "deg_caps": [8], "caps": {"max_point_degree": 100}})
