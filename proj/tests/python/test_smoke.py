import math

import pytest

import simtri


def test_catalog():
    names = simtri.catalog_names()
    assert names[0] == "K4-" and names[-1] == "L10" and len(names) == 13
    n, edges = simtri.catalog_graph("L7")
    assert n == 8 and len(edges) == 7


def test_forbid_check_counts_configurations():
    n, edges = simtri.catalog_graph("L10")
    rep = simtri.forbid_check(n, edges)
    assert rep["dense"] and rep["verified"] and rep["configurations"] == 1024
    hexagon = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (1, 3, 5)]
    assert not simtri.forbid_check(6, hexagon)["verified"]
    p7 = simtri.forbid_check(*simtri.catalog_graph("P7-"))
    assert not p7["dense"]


def test_h_sequence():
    assert simtri.h(27) == 819
    assert tuple(simtri.best_split(27)) == (9, 9, 9)
    for k in range(1, 7):
        n = 3**k
        assert simtri.h(n) == (n**3 - n) // 24
    assert len(simtri.build_S(27)) == simtri.s_edge_count(27) == 819


def test_similarity_count_on_lattice():
    s = math.sqrt(3) / 2
    pts = [[x + 0.5 * y, s * y] for y in range(4) for x in range(4 - y)]
    assert simtri.count_similar(pts, (60, 60, 60), 0.01, degrees=True) == 15
    assert len(simtri.similarity_edges(pts, (60, 60, 60), 0.01, degrees=True)) == 15


def test_construct_validates():
    out = simtri.construct("planar", 27)
    assert out["validated"] and out["similar"] == 819
    assert out["requested_ratio"] == pytest.approx(0.05)
    assert out["ratio"] < 0.05
    assert len(out["points"]) == 27


def test_turan_small():
    r = simtri.turan(7)
    assert r["max_edges"] == 13 and r["complete"] and len(r["witness"]) == 13
    with pytest.raises(simtri.SizeError):
        simtri.turan(10)


def test_errors_map_to_exceptions():
    with pytest.raises(simtri.ArgumentError):
        simtri.catalog_graph("nope")
    with pytest.raises(simtri.SimtriError):
        simtri.count_similar([[0, 0], [0, 0]], (60, 60, 60), 1.0, degrees=True)
    with pytest.raises(simtri.NoEdgeError):
        simtri.analyze(5, [])


def test_analyze_balanced():
    rep = simtri.analyze(27, simtri.build_S(27))
    assert rep["objective"] == pytest.approx(0.25)
    assert [len(p) for p in rep["parts"]] == [9, 9, 9]


def test_reproduce_rows():
    rows = simtri.reproduce()
    assert [r["id"] for r in rows] == list(range(1, 11))
    passing = {r["id"] for r in rows if r["pass"]}
    assert {2, 3, 4, 5, 7, 9, 10} <= passing
