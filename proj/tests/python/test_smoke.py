"""Smoke tests for the python bindings."""

import json

import pytest

import sp9grid as sg


def test_field_arithmetic():
    x = sg.Gf9(0, 1)
    assert (x * x).name() == "2"  # x^2 = -1 = 2
    assert x.encode() == 3
    assert sg.Gf9.parse("2x+1").encode() == 7
    codes = sorted(a.encode() for a in sg.Gf9.all() if a.is_square())
    assert codes == [0, 1, 2, 3, 6]
    with pytest.raises(ValueError):
        sg.Gf9.parse("nope")


def test_graph_structure():
    g = sg.sp9()
    assert g.order == 9
    assert g.neighbors(0, sg.Sign.Plus).to_list() == [1, 2, 3, 6]
    assert g.sign(0, 1) == sg.Sign.Plus
    assert g.sign(1, 3) == sg.Sign.Minus
    assert "graph SP9" in sg.to_dot(g)
    assert sg.to_dot(g, positive_only=True).count(" -- ") == 18


def test_lemma_checks():
    reports = sg.check_all()
    assert sg.all_pass(reports)
    assert [r.cases_checked for r in reports] == [36, 1296, 9, 18, 144, 2592]
    doc = json.loads(sg.reports_to_json(reports))
    assert doc["all_pass"] is True

    mutant = sg.sp9().with_flipped_sign(0, 1)
    assert not sg.all_pass(sg.check_all(mutant))


def test_color_and_verify():
    grid = sg.SignedGrid.random(6, 8, 0.5, seed=3)
    coloring = sg.color_grid(grid)
    assert sg.verify_homomorphism(grid, coloring).ok
    palette = {1, 2, 3, 6}
    assert set(coloring.as_lists()[0]) <= palette

    assert sg.color_path([sg.Sign.Minus, sg.Sign.Minus]) == [1, 3, 1]
    assert sg.color_grid(sg.SignedGrid(2, 2)).as_lists() == [[1, 2], [2, 0]]


def test_json_round_trip():
    grid = sg.SignedGrid(2, 2, [(0, 0, 0, 1)])
    again = sg.SignedGrid.from_json(grid.to_json())
    assert again == grid
    assert again.edge_sign((0, 0), (0, 1)) == sg.Sign.Minus
    with pytest.raises(ValueError):
        sg.SignedGrid.from_json('{"rows": 1}')


def test_oracle():
    target = sg.SignedTargetGraph.from_paley(sg.sp9())
    found = sg.find_homomorphism(sg.SignedGrid(2, 2), target)
    assert found is not None
    assert found.as_lists() == [[0, 1], [1, 0]]

    nothing = sg.find_homomorphism(sg.SignedGrid(1, 2), sg.SignedTargetGraph(1))
    assert nothing is None

    with pytest.raises(ValueError):
        sg.find_homomorphism(sg.SignedGrid(6, 5), target)  # above the vertex guard
    limits = sg.OracleLimits()
    limits.max_vertices = 30
    assert sg.find_homomorphism(sg.SignedGrid(6, 5), target, limits) is not None


def test_sweep():
    report = sg.exhaustive_signature_sweep(2, 2, cross_check=True)
    assert report.total == 16
    assert report.colorist_failures == 0
    assert report.oracle_failures == 0
