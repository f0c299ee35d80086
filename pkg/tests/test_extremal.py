import pytest

from biposet import (
    Rel,
    UsageError,
    biposet,
    divisibility_biposet,
    extremal_report,
    powerset_biposet,
    sided_extreme,
)
from biposet.extremal import two_sided_values

from conftest import reflexive


def chain_pair(n):
    le = Rel.from_predicate(n, lambda i, j: i <= j)
    return biposet([f"c{i}" for i in range(n)], list(le.pairs()), list(le.pairs()))


def test_sided_extreme_validates_input():
    bad = biposet(["a", "b"], [(0, 0)], [(0, 0), (1, 1)])
    with pytest.raises(UsageError):
        sided_extreme(bad, 1, "greatest")


def test_sided_extreme_argument_guards():
    bp = powerset_biposet(1)
    with pytest.raises(UsageError):
        sided_extreme(bp, 3, "greatest")
    with pytest.raises(UsageError):
        sided_extreme(bp, 1, "top")


def test_sided_extreme_on_chain():
    bp = chain_pair(3)
    assert sided_extreme(bp, 1, "greatest") == [2]
    assert sided_extreme(bp, 2, "greatest") == [2]
    assert sided_extreme(bp, 1, "least") == [0]
    assert sided_extreme(bp, 2, "least") == [0]


def test_sided_extreme_reports_ties():
    # r1 total: every element is r1-greatest and r1-least at once
    bp = biposet(["a", "b"], [(0, 0), (0, 1), (1, 0), (1, 1)], [(0, 0), (1, 1)])
    assert sided_extreme(bp, 1, "greatest") == [0, 1]
    assert sided_extreme(bp, 1, "least") == [0, 1]
    assert sided_extreme(bp, 2, "greatest") == []


def test_two_sided_values():
    bp = chain_pair(2)
    assert two_sided_values(bp.d, [1], [1], want_sup=True) == {1}
    assert two_sided_values(bp.d, [0], [1], want_sup=True) == {1}
    assert two_sided_values(bp.d, [0], [1], want_sup=False) == {0}
    # incomparable qualifier pair produces no value at all
    d = reflexive(2, [(0, 1)], [(1, 0)])
    assert two_sided_values(d, [0], [1], want_sup=True) == set()


def test_report_bounded_powerset():
    rep = extremal_report(powerset_biposet(2))
    assert (rep.x, rep.y, rep.u, rep.v) == (3, 3, 0, 0)
    assert (rep.g_max, rep.g_min, rep.l_max, rep.l_min) == (3, 3, 0, 0)
    assert rep.bounded
    assert rep.notes == ()


def test_report_divisibility_unbounded():
    rep = extremal_report(divisibility_biposet(3))
    assert rep.x == 2          # the label "3"
    assert rep.y is None       # divisibility has no greatest below 6
    assert rep.g_max is None and rep.g_min is None
    assert rep.u == 0 and rep.v == 0
    assert rep.l_max == 0 and rep.l_min == 0
    assert not rep.bounded
    assert rep.notes == ()


def test_report_incomparable_pairs_noted():
    # r1-greatest is b, r2-greatest is a, and the two never diamond-compare
    bp = biposet(
        ["a", "b"],
        [(0, 0), (1, 1), (0, 1)],
        [(0, 0), (1, 1), (1, 0)],
    )
    rep = extremal_report(bp)
    assert rep.x == 1 and rep.y == 0
    assert rep.g_max is None and rep.g_min is None
    assert rep.u == 0 and rep.v == 1
    assert rep.l_max is None and rep.l_min is None
    assert not rep.bounded
    assert rep.notes == (
        "greatest pair incomparable: b a",
        "least pair incomparable: a b",
    )


def test_report_tie_anomaly_notes():
    bp = biposet(["a", "b"], [(0, 0), (0, 1), (1, 0), (1, 1)], [(0, 0), (1, 1)])
    rep = extremal_report(bp)
    assert rep.x is None and rep.u is None
    assert any("component-1 greatest is not unique: a b" == note for note in rep.notes)
    assert any("component-1 least is not unique: a b" == note for note in rep.notes)


def test_report_single_element():
    rep = extremal_report(biposet(["o"], [(0, 0)], [(0, 0)]))
    assert rep == extremal_report(powerset_biposet(0))
    assert rep.bounded
    assert (rep.g_max, rep.g_min, rep.l_max, rep.l_min) == (0, 0, 0, 0)
