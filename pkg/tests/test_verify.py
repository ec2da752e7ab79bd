import pytest

from skewbrace.errors import SkewBraceError
from skewbrace.verify import (ORDER6_TABLE, SUITES, expected_one_vertex_count, expected_pq_graph,
                              run_suite)

PASSING = [name for name in SUITES if name != "two-vertex-classification"]


@pytest.mark.parametrize("name", PASSING)
def test_suite_passes(name):
    res = run_suite(name)
    assert res.passed, res.text()


def test_two_vertex_suite_reports_the_order_12_counterexamples():
    res = run_suite("two-vertex-classification")
    by_name = {c.name: c for c in res.checks}
    lam = next(c for n, c in by_name.items() if n.startswith("Λ"))
    th = next(c for n, c in by_name.items() if n.startswith("Θ"))
    assert lam.passed
    assert not th.passed
    found = th.witnesses[0]["found"]
    assert sorted(x for x in found if x.startswith("SB(12,")) == ["SB(12,20)", "SB(12,21)"]
    assert len([x for x in found if x.startswith("SB(6,")]) == 4


def test_one_vertex_counts_formula():
    assert [expected_one_vertex_count(n) for n in range(1, 13)] == [0, 0, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2]


def test_order6_table_rows():
    assert [row[2] for row in ORDER6_TABLE.values()] == [6, 6, 3, 2, 2, 1]


def test_expected_pq_graph_shapes():
    assert expected_pq_graph("F", "lambda", 5, 2).shape() == "K1 + K2"
    assert expected_pq_graph("C", "theta", 7, 3).shape() == "K6"


def test_unknown_suite():
    with pytest.raises(SkewBraceError):
        run_suite("nope")
