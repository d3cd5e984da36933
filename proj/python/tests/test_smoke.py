# Copyright (c) 2026 The eqsing Authors
# SPDX-License-Identifier: Apache-2.0

import pytest

import eqsing


def test_lattice_invariants():
    assert eqsing.h1([6, 5]) == 1
    assert eqsing.h1([6, 5], level=7) == 0
    assert eqsing.milnor([6, 5]) == 20
    assert eqsing.expected_dimension([6, 5]) == 7


def test_tjurina_oracle():
    assert eqsing.tjurina("x1^3 + x2^4", 2) == 6
    assert eqsing.tjurina("x1^6 + x2^5", 2) == 20


def test_castelnuovo_profile():
    c = eqsing.castelnuovo([6, 5])
    assert c["values"] == [1, 2, 3, 4, 4, 3, 2, 1]
    assert c["k_first"] == 0
    assert c["a"] == 4
    assert c["t"] == 7


def test_polytope():
    p = eqsing.polytope("x1^6 + x2^5", 2)
    assert p["quasihomogeneous_weights"] == ["1/6", "1/5"]
    q = eqsing.polytope("x1^2 + x1*x2 + x2^3", 2)
    assert q["quasihomogeneous_weights"] is None


def test_normal_form():
    assert eqsing.nf("x1^2", ["x1"], ord="lp", nvars=1) == "0"
    assert eqsing.nf("x1^3 + x1*x2^2", ["x1^2", "x2^3"], ord="Ws",
                     weights=["1/2", "1/3"], nvars=2) == "x1*x2^2"


def test_classification():
    c = eqsing.classify([3, 3, 3, 3])
    assert c["verdict"] == "SmoothNonExpectedDim"
    assert c["tangent_dimension"] == 19
    assert c["expected_dimension"] == 18

    g = eqsing.classify([6, 5])
    assert g["verdict"] == "NonReducedDouble"
    assert g["quadratic_rank"] == 1
    assert g["rank_linear_total"] == 19


def test_system_rows_round_trip():
    s = eqsing.system([6, 5], include_rows=True)
    assert s["case"] == "direct"
    assert s["virtual_rows"] == 13
    assert any(r["role"] == "last" for r in s["equations"])


def test_stabilize_and_witness():
    s = eqsing.stabilize([6, 5], squares=1)
    assert s["tau"] == 20
    assert s["h1"] == 1
    assert s["block_ranks"] == [1, 14]
    assert s["combined_quadratic_rank"] == 15

    w = eqsing.witness([6, 5], squares=2)
    assert w["found"] is True
    assert w["jacobian_rank"] == 20
    assert w["minor"] != "0"


def test_presets():
    ps = eqsing.presets()
    assert len(ps) == 9
    names = {p["name"] for p in ps}
    assert "gur1-d6" in names
    assert "case2-n2d9" in names


def test_errors():
    with pytest.raises(ValueError):
        eqsing.h1([1, 5])
    with pytest.raises(ValueError):
        eqsing.tjurina("x1 +* x2", 2)
