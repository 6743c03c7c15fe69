from fractions import Fraction

import pytest

import ribbonsieve as rs


def test_abacus_figure():
    assert rs.bead_positions([8, 4, 4, 4, 2, 1], 6) == [1, 3, 6, 7, 8, 13]
    cq = rs.core_quotient([8, 4, 4, 4, 2, 1], 6, 4)
    assert cq["core"] == [2, 1]
    assert cq["quotient"] == [[2], [2], [1], []]
    assert cq["spec"] == [1, 2, 1, 2]


def test_tableaux_and_promotion():
    syts = rs.enumerate_syt([2, 2])
    assert len(syts) == 2 == rs.count_syt([2, 2])
    t = {"outer": [3, 3, 3], "inner": [], "rows": [[1, 2, 5], [3, 4, 7], [6, 8, 9]]}
    assert rs.apply("promote", t)["rows"] == [[1, 3, 4], [2, 6, 8], [5, 7, 9]]
    assert rs.apply("promote", t, power=9) == t
    e = rs.apply("evacuate", t)
    assert rs.apply("rotate-complement", t, d=3, n=6) == e
    assert rs.apply("evacuate", e) == t


def test_ribbons():
    dominoes = rs.enumerate_srt([2, 2], 2)
    assert sorted(str(d["rows"]) for d in dominoes) == ["[[1, 1], [2, 2]]", "[[1, 2], [1, 2]]"]
    assert rs.count_srt([2, 2], 4) == 0
    ok, diagnostic = rs.validate_ribbon({"outer": [2, 2], "inner": [], "rows": [[1, 1], [1, 1]]}, 4)
    assert not ok and diagnostic


def test_symmetric_functions():
    assert rs.kostka_foulkes_column([2, 2]) == [0, 0, 1, 0, 1]
    assert rs.eval_at_root([0, 0, 1, 0, 1], 2)["value"] == 2
    assert rs.eval_at_root([0, 0, 1, 0, 1], 4)["value"] == 0
    assert rs.lr_coefficient([3, 2, 1], [2, 1], [2, 1]) == 2
    rep = rs.llt_verify([2, 2], 2)
    assert rep["ok"] and rep["sign"] == 1


def test_sieving():
    rep = rs.verify_cyclic(2, 4, 2)
    assert rep["ok"] and rep["fixed"] == 2
    assert rs.verify_dihedral(2, 4, 2, "ej")["ok"]
    assert rs.orbit_spectrum(2, 4) == [2]


def test_wronski():
    assert rs.wronskian([[1], [0, 0, 1]]) == [0, 2]
    assert rs.wronskian([["1/2", 0, 1], [0, 1]]) == [Fraction(1, 2), 0, -1]  # (1/2 + z²)·1 − 2z·z
    p = rs.plucker([[1], [0, 0, 1]], 4)
    assert {k for k, v in p.items() if v != 0} == {(1,)}
    assert rs.core_of_spec([0, 3, 2], 5, 11, 3) == [3, 2, 2, 1, 1]
    sols = rs.fixed_fibre_gr24(1, 4)
    a_values = sorted(m[0][0].real for m in sols)
    assert a_values == pytest.approx([(5 - 73 ** 0.5) / 6, (5 + 73 ** 0.5) / 6], rel=1e-9)


def test_series_fibre():
    u = {"e": 1, "terms": [[1, "1"]], "order": None}
    one = {"e": 1, "terms": [[0, "1"]], "order": None}
    points = rs.series_fibre_gr24(u, one)
    assert sorted(str(p["tableau"]["rows"]) for p in points) == ["[[1, 1], [2, 2]]", "[[1, 2], [1, 2]]"]
    assert all(p["leading_terms_ok"] for p in points)


def test_suites_and_errors():
    rep = rs.run_suite("wronski", cases=20, block_cases=10, seed=7)
    assert all(c["ok"] for c in rep["cases"])
    assert rs.run_suite("wronski", cases=20, block_cases=10, seed=7) == rep
    with pytest.raises(rs.RibbonsieveError) as info:
        rs.verify_cyclic(2, 4, 3)
    assert info.value.kind == "nondivisible-size"
    with pytest.raises(ValueError):
        rs.enumerate_syt([1, 2])
