"""Witness groups with prescribed co-rank, Betti number and rank.

A triple ``(c, b, r)`` is realizable iff ``c == b == 0`` or ``1 <= c <= b <= r``.
For an admissible triple the witness is

    Z^(b-c+1) * Z * ... * Z * Z_2 * ... * Z_2

with ``c`` free abelian factors (so their ranks sum to ``b``) and ``r - b``
copies of Z_2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import FiniteAbelian, FreeAbelian, GroupExpr, free_product_of, to_presentation
from .presentation import Presentation

__all__ = [
    "TripleRequest",
    "InadmissibleTriple",
    "violation",
    "validate",
    "realize",
    "realize_presentation",
]


class InadmissibleTriple(ValueError):
    def __init__(self, request: TripleRequest, reason: str):
        super().__init__(f"{request.as_tuple()} is not realizable: {reason}")
        self.request = request
        self.reason = reason


@dataclass(frozen=True)
class TripleRequest:
    c: int
    b: int
    r: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.c, self.b, self.r


def violation(t: TripleRequest) -> str | None:
    """The first constraint ``t`` violates, or None if it is admissible."""
    c, b, r = t.as_tuple()
    if min(c, b, r) < 0:
        return "components must be nonnegative"
    if c == b == 0:
        return None
    if c == 0:
        return "b ≥ 1 requires corank ≥ 1"
    if c > b:
        return "corank ≤ betti violated (c > b)"
    if b > r:
        return "betti ≤ rank violated (b > r)"
    return None


def validate(t: TripleRequest) -> bool:
    return violation(t) is None


def realize(t: TripleRequest) -> GroupExpr:
    reason = violation(t)
    if reason is not None:
        raise InadmissibleTriple(t, reason)
    c, b, r = t.as_tuple()
    atoms: list[GroupExpr] = []
    if c:
        atoms.append(FreeAbelian(b - c + 1))
        atoms.extend(FreeAbelian(1) for _ in range(c - 1))
    atoms.extend(FiniteAbelian((2,)) for _ in range(r - b))
    return free_product_of(*atoms)


def realize_presentation(t: TripleRequest) -> Presentation:
    return to_presentation(realize(t))
