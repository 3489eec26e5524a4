import pytest

import anticlique as ac

G5_EDGES = [(1, 2), (1, 4), (1, 5), (2, 4), (3, 4), (4, 5)]


@pytest.fixture
def g5():
    return ac.Graph(5, G5_EDGES)


def test_counts(g5):
    assert ac.fibonacci_number(g5) == 11
    assert ac.independence_polynomial(g5) == [1, 5, 4, 1]
    assert len(ac.enumerate_anticliques(g5)) == 11
    assert ac.enumerate_anticliques(g5, 3) == [[2, 3, 5]]


def test_search(g5):
    r = ac.max_anticlique(g5)
    assert r["alpha"] == 3
    assert r["witness"] == [2, 3, 5]
    assert ac.threshold_search(g5, 2, first=True)["first"] == [2, 3, 5]
    assert ac.threshold_search(g5, 3, first=True)["first"] is None
    assert ac.all_max_anticliques(g5) == (3, [[2, 3, 5]])
    assert ac.core(g5) == [2, 3, 5]
    assert ac.max_anticlique(g5, weights=[1, 1, 1, 10, 1])["alpha"] == 10


def test_maximal_and_chromatic(g5):
    assert ac.maximal_anticliques(g5) == [[1, 3], [2, 3, 5], [4]]
    chi, cover = ac.chromatic_number(g5)
    assert chi == 3 and len(cover) == 3


def test_oracle_agrees_on_random_graphs():
    for seed in range(5):
        g = ac.random_graph(12, 0.3, seed)
        report = ac.oracle_report(g)
        assert report["f"] == ac.fibonacci_number(g)
        assert report["coefficients"] == ac.independence_polynomial(g)
        assert report["alpha"] == ac.max_anticlique(g)["alpha"]


def test_bipartite():
    g = ac.random_bipartite_graph(8, 12, 0.5, 3)
    alpha = ac.max_anticlique(g)["alpha"]
    assert ac.max_anticlique(g, bipartite=True)["alpha"] == alpha
    assert alpha == g.vertex_count - ac.oracle_matching(g)


def test_rows_and_parsing(g5):
    rows = [str(r) for r in ac.standard_rows(g5)]
    assert "(0,1,2,0,2)" in rows
    text = g5.serialize("dimacs")
    assert ac.parse_graph(text, "dimacs") == g5
    row = ac.Row.parse("(2,0,1,2,a1,b1,b1,b1,a2,b2,a3,b3,b3)")
    assert row.member_count() == 540
    assert row.spectrum()[8] == 17


def test_big_counts_are_python_ints():
    f = ac.fibonacci_number(ac.Graph(70))
    assert f == 2**70


def test_errors(g5):
    with pytest.raises(ValueError):
        ac.parse_graph("p edge 3 1\ne 1 9\n", "dimacs")
    with pytest.raises(ValueError):
        ac.Graph(3, [(1, 1)])
    with pytest.raises(ac.GuardError):
        ac.oracle_report(ac.Graph(30))
    with pytest.raises(ValueError):
        ac.max_anticlique(ac.Graph(3, [(1, 2), (2, 3), (1, 3)]), bipartite=True)
