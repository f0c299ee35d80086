"""The fast checkers against the direct-quantifier reference, plus frozen
single-structure verdicts."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biposet import (
    Diamond,
    Rel,
    UsageError,
    biposet,
    check_axioms,
    check_classical_por,
    naive_check_axioms,
    naive_check_classical,
    validated,
)

from conftest import all_diamonds, diamond, reflexive


@st.composite
def diamonds(draw, max_n=4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    top = (1 << n) - 1
    r1 = draw(st.lists(st.integers(0, top), min_size=n, max_size=n))
    r2 = draw(st.lists(st.integers(0, top), min_size=n, max_size=n))
    return Diamond(Rel(n, tuple(r1)), Rel(n, tuple(r2)))


@st.composite
def single_rels(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return Rel(n, tuple(rows))


# agreement with the reference implementation

@given(diamonds())
@settings(max_examples=300)
def test_checker_agrees_with_reference(d):
    assert check_axioms(d) == naive_check_axioms(d)


def test_checker_agrees_exhaustively_at_n2():
    for d in all_diamonds(2):
        assert check_axioms(d) == naive_check_axioms(d)


@given(single_rels())
@settings(max_examples=300)
def test_classical_checker_agrees_with_reference(r):
    assert check_classical_por(r) == naive_check_classical(r)


def test_classical_checker_agrees_exhaustively_at_n2():
    for code in range(1 << 4):
        r = Rel(2, (code & 3, code >> 2))
        assert check_classical_por(r) == naive_check_classical(r)


# frozen verdicts on pinned structures

def test_identity_pair_is_valid():
    d = Diamond(Rel.identity(3), Rel.identity(3))
    assert check_axioms(d).ok


def test_full_identity_pair_is_valid():
    # r1 total, r2 discrete: valid even though r1 alone is not antisymmetric
    d = Diamond(Rel.full(2), Rel.identity(2))
    verdict = check_axioms(d)
    assert verdict.ok
    assert not check_classical_por(d.r1).ok


def test_missing_loop_fails_reflexivity_with_least_witness():
    d = diamond(3, [(0, 0), (2, 2)], [(0, 0), (1, 1), (2, 2)])
    verdict = check_axioms(d)
    assert not verdict.reflexive.ok
    assert verdict.reflexive.witness == (1,)


def test_antisymmetry_failure_witness():
    # 0 and 1 related both ways in r1, joined to 2 by r2, and r2 loops back
    d = reflexive(
        3,
        [(0, 1), (1, 0), (0, 2)],
        [(0, 1), (1, 0), (0, 2), (1, 2), (2, 0), (2, 1)],
    )
    verdict = check_axioms(d)
    assert not verdict.antisymmetric.ok
    assert verdict.antisymmetric.witness == (0, 0, 1)
    assert naive_check_axioms(d).antisymmetric == verdict.antisymmetric


def test_transitivity_failure_least_witness_and_detail():
    # frozen: valid structure whose transpose pair breaks transitivity
    d = diamond(
        3,
        [(0, 0), (0, 1), (1, 1), (2, 0), (2, 2)],
        [(0, 0), (1, 0), (1, 1), (2, 2)],
    )
    verdict = check_axioms(d)
    assert verdict.reflexive.ok and verdict.antisymmetric.ok
    assert not verdict.transitive.ok
    assert verdict.transitive.witness == (2, 0, 0, 1, 0)
    assert verdict.transitive.detail == "first"
    assert naive_check_axioms(d) == verdict


def test_classical_pair_is_always_valid():
    # two classical partial orders over one set always form a valid pair
    for n in (2, 3):
        full = (1 << n) - 1
        classical = []
        for code in range((full + 1) ** n):
            rows = tuple((code >> (i * n)) & full for i in range(n))
            r = Rel(n, rows)
            if check_classical_por(r).ok:
                classical.append(r)
        assert len(classical) == {2: 3, 3: 19}[n]
        for r1 in classical:
            for r2 in classical:
                assert check_axioms(Diamond(r1, r2)).ok


def test_transitive_detail_values_at_n2():
    # two elements never break both conclusion chains at the least witness
    seen = set()
    for d in all_diamonds(2):
        verdict = check_axioms(d)
        if not verdict.transitive.ok:
            seen.add(verdict.transitive.detail)
    assert seen == {"first", "second"}


def test_transitive_detail_both():
    d = diamond(
        3,
        [(0, 0), (1, 1), (1, 2), (2, 0), (2, 2)],
        [(0, 0), (0, 1), (1, 0), (1, 1), (2, 1), (2, 2)],
    )
    verdict = check_axioms(d)
    assert not verdict.transitive.ok
    assert verdict.transitive.witness == (1, 2, 1, 0, 0)
    assert verdict.transitive.detail == "both"
    assert naive_check_axioms(d) == verdict


def test_classical_verdict_witnesses():
    r = Rel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2)])
    verdict = check_classical_por(r)
    assert not verdict.antisymmetric.ok
    assert verdict.antisymmetric.witness == (0, 1)
    assert not verdict.transitive.ok
    assert verdict.transitive.witness == (0, 1, 2)


def test_validated_caches_certificate():
    bp = biposet(["a"], [(0, 0)], [(0, 0)])
    out = validated(bp)
    assert out.certificate == "valid"
    assert validated(out) is out


def test_validated_raises_with_axiom_name():
    bp = biposet(["a", "b"], [(0, 0)], [(0, 0), (1, 1)])
    with pytest.raises(UsageError, match="reflexive"):
        validated(bp)
