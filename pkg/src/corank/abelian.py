"""Abelianization of a presented group: Betti number and torsion coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .linalg import IntMatrix, snf
from .presentation import Presentation

__all__ = ["AbelianInvariants", "relation_matrix", "abelianize", "invariant_factors"]


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Rewrite a direct sum of cyclic groups of the given orders in invariant-factor form.

    Uses Z_m + Z_n = Z_gcd + Z_lcm pairwise. Nonpositive orders are rejected and
    trivial summands dropped.

    >>> invariant_factors([4, 6])
    (2, 12)
    >>> invariant_factors([2, 3])
    (6,)
    """
    vals = []
    for n in orders:
        if n <= 0:
            raise ValueError(f"cyclic order must be positive, got {n}")
        vals.append(int(n))
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            g = gcd(vals[i], vals[j])
            vals[i], vals[j] = g, vals[i] * vals[j] // g
    return tuple(v for v in vals if v > 1)


@dataclass(frozen=True)
class AbelianInvariants:
    """``G^ab = Z^betti + Z_t1 + ... + Z_tk`` with ``t1 | t2 | ... | tk``."""

    betti: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("betti must be nonnegative")
        tors = tuple(self.torsion)
        if any(t < 2 for t in tors):
            raise ValueError("torsion coefficients must be at least 2")
        if any(b % a for a, b in zip(tors, tors[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    @property
    def is_free_abelian(self) -> bool:
        return not self.torsion


def relation_matrix(p: Presentation) -> IntMatrix:
    """One row per relator holding the exponent sum of each generator."""
    rows = []
    for w in p.relators:
        row = [0] * p.ngens
        for g, e in w.syllables:
            row[g] += e
        rows.append(row)
    return IntMatrix.from_rows(rows, p.ngens)


def abelianize(p: Presentation) -> AbelianInvariants:
    res = snf(relation_matrix(p))
    return AbelianInvariants(
        betti=p.ngens - res.rank,
        torsion=tuple(d for d in res.diag if d > 1),
    )
