import pytest

import ramsey3


def test_threshold():
    assert ramsey3.threshold(1) == 9
    assert ramsey3.threshold(21) == 64


def test_patterns():
    path = [(0, 1, 2), (2, 3, 4), (4, 5, 6)]
    found = ramsey3.find_pattern("P", 7, path)
    assert found["kind"] == "P"
    assert found["roles"] == [2, 4]
    assert ramsey3.find_pattern("P", 6, ramsey3.complete_hypergraph(6)) is None
    with pytest.raises(ValueError):
        ramsey3.find_pattern("Q", 7, path)


def test_purify_k5():
    cert = ramsey3.purify(5, ramsey3.complete_hypergraph(5))
    assert cert["deleted"] == [(0, 1, 2), (0, 1, 3), (0, 1, 4)]
    assert cert["components"][0]["class"] == "FComponent"


def test_purify_rejects_path():
    with pytest.raises(ramsey3.InvalidInput):
        ramsey3.purify(7, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])


def test_lower_bound_audit():
    col = ramsey3.lower_bound_coloring(3)
    assert ramsey3.find_mono_path(8, 3, col) is None
    trace = ramsey3.audit(8, 3, col)
    assert trace["result"] == "Inconclusive"
    assert trace["text"].startswith("audit order 8 colors 3")


def test_random_coloring_at_threshold():
    col = ramsey3.random_coloring(13, 2, 7)
    assert col == ramsey3.random_coloring(13, 2, 7)
    color, witness = ramsey3.find_mono_path(13, 2, col)
    assert witness["kind"] == "P"
    assert ramsey3.audit(13, 2, col)["result"] == "MonoPFound"


def test_random_pfree():
    edges = ramsey3.random_pfree(9, 3)
    assert ramsey3.find_pattern("P", 9, edges) is None


def test_bounds():
    rows = ramsey3.bounds(3)
    assert [r["lower"] for r in rows] == [7, 8, 9]
    assert rows[0]["upper_old"] is None


def test_sat_round_trip():
    variables, clauses, text = ramsey3.sat_export(2, 8)
    assert (variables, clauses) == (112, 10137)
    assert "p cnf 112 10137" in text
    col = ramsey3.lower_bound_coloring(2)
    model = [i * 2 + s + 1 if col[i] == s else -(i * 2 + s + 1) for i in range(35) for s in range(2)]
    assert ramsey3.sat_decode(model, 2, 7) == col
