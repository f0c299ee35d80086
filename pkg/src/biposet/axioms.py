"""Axiom checkers.

check_axioms decides the three diamond axioms:

  reflexive      a r1 a and a r2 a for every a
  antisymmetric  chain(a,b,c) and chain(b,a,c) and chain(a,c,b) force a=b=c
  transitive     chain(a,b,c) and chain(b,d,c) and c r2 e force
                 chain(a,d,c) and chain(a,b,e)

check_classical_por decides the usual single-relation partial order axioms.
Both return the lexicographically least violating tuple on failure, so
verdicts are deterministic and directly comparable across implementations.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Optional

from .core import BiPoset, Diamond, Rel, UsageError


def _lsb(x: int) -> int:
    return (x & -x).bit_length() - 1


@dataclass(frozen=True, slots=True)
class AxiomCheck:
    ok: bool
    witness: Optional[tuple] = None
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, slots=True)
class AxiomVerdict:
    reflexive: AxiomCheck
    antisymmetric: AxiomCheck
    transitive: AxiomCheck

    @property
    def ok(self) -> bool:
        return self.reflexive.ok and self.antisymmetric.ok and self.transitive.ok

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, slots=True)
class ClassicalVerdict:
    reflexive: AxiomCheck
    antisymmetric: AxiomCheck
    transitive: AxiomCheck

    @property
    def ok(self) -> bool:
        return self.reflexive.ok and self.antisymmetric.ok and self.transitive.ok

    def __bool__(self) -> bool:
        return self.ok


def _check_reflexive(d: Diamond) -> AxiomCheck:
    for a in range(d.n):
        if not ((d.r1.rows[a] >> a) & (d.r2.rows[a] >> a) & 1):
            return AxiomCheck(False, (a,))
    return AxiomCheck(True)


def _check_antisymmetric(d: Diamond) -> AxiomCheck:
    n = d.n
    r1, r2 = d.r1, d.r2
    cols2 = [r2.col(j) for j in range(n)]
    for a in range(n):
        row1a, row2a = r1.rows[a], r2.rows[a]
        for b in range(n):
            # premise needs a r1 b and b r1 a before any c can qualify
            if not ((row1a >> b) & (r1.rows[b] >> a) & 1):
                continue
            cmask = row1a & row2a & r2.rows[b] & cols2[b]
            if a == b:
                cmask &= ~(1 << a)
            if cmask:
                return AxiomCheck(False, (a, b, _lsb(cmask)))
    return AxiomCheck(True)


def _check_transitive(d: Diamond) -> AxiomCheck:
    n = d.n
    r1, r2 = d.r1, d.r2
    cols2 = [r2.col(j) for j in range(n)]
    for a in range(n):
        row1a = r1.rows[a]
        for b in range(n):
            if not ((row1a >> b) & 1):
                continue
            row1b, row2b = r1.rows[b], r2.rows[b]
            for c in range(n):
                if not ((row2b >> c) & 1):
                    continue
                dmask = row1b & cols2[c]
                emask = r2.rows[c]
                if not dmask or not emask:
                    continue
                dbad = dmask & ~row1a   # d values breaking the first conclusion
                ebad = emask & ~row2b   # e values breaking the second
                if not dbad and not ebad:
                    continue
                d0 = _lsb(dmask)
                if (dbad >> d0) & 1:
                    e0 = _lsb(emask)
                    detail = "both" if (ebad >> e0) & 1 else "first"
                    return AxiomCheck(False, (a, b, c, d0, e0), detail)
                if ebad:
                    return AxiomCheck(False, (a, b, c, d0, _lsb(ebad)), "second")
                return AxiomCheck(False, (a, b, c, _lsb(dbad), _lsb(emask)), "first")
    return AxiomCheck(True)


def check_axioms(d: Diamond) -> AxiomVerdict:
    """Evaluate all three diamond axioms with least witnesses."""
    return AxiomVerdict(
        reflexive=_check_reflexive(d),
        antisymmetric=_check_antisymmetric(d),
        transitive=_check_transitive(d),
    )


def check_classical_por(r: Rel) -> ClassicalVerdict:
    """Classical partial-order verdict for a single relation."""
    n = r.n
    refl = AxiomCheck(True)
    for a in range(n):
        if not ((r.rows[a] >> a) & 1):
            refl = AxiomCheck(False, (a,))
            break

    anti = AxiomCheck(True)
    for a in range(n):
        m = r.rows[a] & r.col(a) & ~(1 << a)
        if m:
            anti = AxiomCheck(False, (a, _lsb(m)))
            break

    trans = AxiomCheck(True)
    done = False
    for a in range(n):
        rowa = r.rows[a]
        for b in range(n):
            if not ((rowa >> b) & 1):
                continue
            bad = r.rows[b] & ~rowa
            if bad:
                trans = AxiomCheck(False, (a, b, _lsb(bad)))
                done = True
                break
        if done:
            break

    return ClassicalVerdict(reflexive=refl, antisymmetric=anti, transitive=trans)


def validated(bp: BiPoset) -> BiPoset:
    """Return bp with a validity certificate, checking axioms if needed.

    Raises UsageError when the structure fails an axiom; callers with a
    validity precondition funnel through here.
    """
    if bp.certificate == "valid":
        return bp
    verdict = check_axioms(bp.d)
    if not verdict.ok:
        for name in ("reflexive", "antisymmetric", "transitive"):
            ax: AxiomCheck = getattr(verdict, name)
            if not ax.ok:
                raise UsageError(f"structure fails the {name} axiom at witness {ax.witness}")
    return dataclasses.replace(bp, certificate="valid")
