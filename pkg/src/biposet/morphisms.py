"""Mappings between binary posets: isotone maps, isomorphisms, self-duality.

An isotone map preserves chains forward. An isomorphism is a bijection with
the chain condition in both directions; for reflexive structures this is
the same as preserving both relations edge-wise, which is what the
backtracking search exploits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .constructions import dual_biposet
from .core import BiPoset, Check, Diamond, UsageError, chain


@dataclass(frozen=True, slots=True)
class Mapping:
    src_n: int
    dst_n: int
    img: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.img) != self.src_n:
            raise UsageError("mapping image length does not match source size")
        if any(not 0 <= v < self.dst_n for v in self.img):
            raise UsageError("mapping image value out of range")

    def __call__(self, i: int) -> int:
        return self.img[i]

    @staticmethod
    def identity(n: int) -> "Mapping":
        return Mapping(n, n, tuple(range(n)))

    def is_bijection(self) -> bool:
        return self.src_n == self.dst_n and len(set(self.img)) == self.src_n

    def after(self, inner: "Mapping") -> "Mapping":
        """Composition self . inner (apply inner first)."""
        if inner.dst_n != self.src_n:
            raise UsageError("mapping dimensions do not compose")
        return Mapping(inner.src_n, self.dst_n, tuple(self.img[v] for v in inner.img))

    def inverse(self) -> "Mapping":
        if not self.is_bijection():
            raise UsageError("only bijections invert")
        inv = [0] * self.dst_n
        for i, v in enumerate(self.img):
            inv[v] = i
        return Mapping(self.dst_n, self.src_n, tuple(inv))


def is_isotone(f: Mapping, src: Diamond, dst: Diamond) -> Check:
    """Forward chain preservation, least violating triple on failure."""
    if f.src_n != src.n or f.dst_n != dst.n:
        raise UsageError("mapping dimensions do not match the structures")
    n = src.n
    img = f.img
    for a in range(n):
        row1a = src.r1.rows[a]
        for b in range(n):
            if not ((row1a >> b) & 1):
                continue
            row2b = src.r2.rows[b]
            fa, fb = img[a], img[b]
            dst_ok = (dst.r1.rows[fa] >> fb) & 1
            for c in range(n):
                if not ((row2b >> c) & 1):
                    continue
                if not (dst_ok and (dst.r2.rows[fb] >> img[c]) & 1):
                    return Check(False, (a, b, c))
    return Check(True)


def is_isomorphism(f: Mapping, src: BiPoset, dst: BiPoset) -> Check:
    """Bijection with the two-way chain condition.

    Returns ok=False with a reason for non-bijections, and the least triple
    where the biconditional breaks otherwise. Inputs are not re-validated;
    the condition is evaluated as stated.
    """
    if f.src_n != src.n or f.dst_n != dst.n:
        raise UsageError("mapping dimensions do not match the structures")
    if not f.is_bijection():
        return Check(False, reason="not a bijection")
    n = src.n
    img = f.img
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if chain(src.d, a, b, c) != chain(dst.d, img[a], img[b], img[c]):
                    return Check(False, (a, b, c))
    return Check(True)


def _degree_signature(d: Diamond) -> list[tuple[int, int, int, int]]:
    n = d.n
    return [
        (
            bin(d.r1.rows[i]).count("1"),
            bin(d.r1.col(i)).count("1"),
            bin(d.r2.rows[i]).count("1"),
            bin(d.r2.col(i)).count("1"),
        )
        for i in range(n)
    ]


def _edge_consistent(src: Diamond, dst: Diamond, assigned: list[int], i: int, j: int) -> bool:
    # both directions of both components against every earlier assignment
    for i2, j2 in enumerate(assigned):
        if src.r1.has(i, i2) != dst.r1.has(j, j2):
            return False
        if src.r1.has(i2, i) != dst.r1.has(j2, j):
            return False
        if src.r2.has(i, i2) != dst.r2.has(j, j2):
            return False
        if src.r2.has(i2, i) != dst.r2.has(j2, j):
            return False
    return True


def _is_reflexive(d: Diamond) -> bool:
    return all((d.r1.rows[a] >> a) & (d.r2.rows[a] >> a) & 1 for a in range(d.n))


def find_isomorphism(src: BiPoset, dst: BiPoset) -> Optional[Mapping]:
    """Search for an isomorphism; image-lexicographically least if any.

    Edge-wise backtracking with degree-signature pruning is complete for
    reflexive structures, where chains determine edges; anything else falls
    back to scanning all bijections.
    """
    if src.n != dst.n:
        return None
    n = src.n
    sd, dd = src.d, dst.d

    if not (_is_reflexive(sd) and _is_reflexive(dd)):
        for perm in itertools.permutations(range(n)):
            f = Mapping(n, n, perm)
            if is_isomorphism(f, src, dst):
                return f
        return None

    sig_src = _degree_signature(sd)
    sig_dst = _degree_signature(dd)
    if sorted(sig_src) != sorted(sig_dst):
        return None

    assigned: list[int] = []
    used = [False] * n

    def extend() -> bool:
        i = len(assigned)
        if i == n:
            return True
        for j in range(n):
            if used[j] or sig_src[i] != sig_dst[j]:
                continue
            if not _edge_consistent(sd, dd, assigned, i, j):
                continue
            assigned.append(j)
            used[j] = True
            if extend():
                return True
            used[j] = False
            assigned.pop()
        return False

    if not extend():
        return None
    f = Mapping(n, n, tuple(assigned))
    result = is_isomorphism(f, src, dst)
    if not result:
        raise RuntimeError("edge search returned a non-isomorphism")
    return f


def self_dual_witness(bp: BiPoset) -> Optional[Mapping]:
    """Isomorphism from the structure to its dual, if one exists."""
    return find_isomorphism(bp, dual_biposet(bp))
