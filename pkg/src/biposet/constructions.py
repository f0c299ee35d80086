"""Builders: intersections, duals, powerset and divisibility instances."""

from __future__ import annotations

from typing import Sequence

from .axioms import validated
from .core import BiPoset, Diamond, GroundSet, Rel, UsageError

POWERSET_CAP = 12


def intersect_many(ds: Sequence[Diamond]) -> Diamond:
    """Component-wise intersection of any number of same-dimension diamonds.

    Inputs need not satisfy the axioms; when they all do, the intersection
    does too (each axiom premise is a positive conjunction, so it descends
    to every operand, and the conclusions are memberships every operand
    then supplies).
    """
    if not ds:
        raise UsageError("intersection needs at least one diamond")
    n = ds[0].n
    if any(d.n != n for d in ds):
        raise UsageError("diamond dimensions differ")
    r1 = ds[0].r1
    r2 = ds[0].r2
    for d in ds[1:]:
        r1 = r1 & d.r1
        r2 = r2 & d.r2
    return Diamond(r1, r2)


def dual(d: Diamond) -> Diamond:
    """Transpose both components."""
    return Diamond(d.r1.transpose(), d.r2.transpose())


def dual_biposet(bp: BiPoset) -> BiPoset:
    """Dual structure on the same ground set. No validity certificate: the
    dual of a valid structure is not always valid."""
    return BiPoset(bp.ground, dual(bp.d))


def powerset_biposet(k: int) -> BiPoset:
    """All subsets of {0..k-1} under inclusion, in both components.

    Elements are labeled s<bitmask> in ascending mask order.
    """
    if k < 0:
        raise UsageError("k must be non-negative")
    if k > POWERSET_CAP:
        raise UsageError(f"k={k} exceeds the materialization cap {POWERSET_CAP}")
    size = 1 << k
    ground = GroundSet(tuple(f"s{m}" for m in range(size)))
    incl = Rel.from_predicate(size, lambda i, j: (i & ~j) == 0)
    return validated(BiPoset(ground, Diamond(incl, incl)))


def divisibility_biposet(k: int) -> BiPoset:
    """{1..k} with r1 the usual order and r2 divisibility."""
    if k < 1:
        raise UsageError("k must be at least 1")
    ground = GroundSet(tuple(str(v) for v in range(1, k + 1)))
    le = Rel.from_predicate(k, lambda i, j: i <= j)
    div = Rel.from_predicate(k, lambda i, j: (j + 1) % (i + 1) == 0)
    return validated(BiPoset(ground, Diamond(le, div)))
