"""Co-rank, Betti number and rank for free products of abelian and free groups.

The class handled here is built from three kinds of atoms

* ``FreeAbelian(n)``  the group Z^n
* ``FiniteAbelian((m1, ..., mk))``  Z_m1 x ... x Z_mk with m1 | m2 | ... | mk
* ``Free(k)``  the free group of rank k

combined with free products and with direct products of abelian operands.
Every invariant is computed by structural recursion: all three of co-rank,
Betti number and rank add under free products, and a direct product of
abelian groups is first put into the canonical form Z^n x Z_d1 x ... x Z_dk.

>>> invariants(parse_expr("Z^2 * Z * C(2) * C(2)"))
InvariantTriple(corank=2, betti=3, rank=5)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Union

from .abelian import AbelianInvariants, invariant_factors
from .presentation import Presentation, Word, commutator, direct_product, free_product

__all__ = [
    "FreeAbelian",
    "FiniteAbelian",
    "Free",
    "FreeProduct",
    "DirectProduct",
    "GroupExpr",
    "InvariantTriple",
    "UnsupportedExpression",
    "ExprParseError",
    "free_product_of",
    "is_abelian_expr",
    "abelian_canonical",
    "invariants",
    "isotropy_bounds",
    "abelianization",
    "to_presentation",
    "is_torsion_free",
    "parse_expr",
    "format_expr",
]


class UnsupportedExpression(ValueError):
    """The expression leaves the class on which the rules are valid."""


class ExprParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.message = message
        self.pos = pos


@dataclass(frozen=True)
class FreeAbelian:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("free abelian rank must be nonnegative")


@dataclass(frozen=True)
class FiniteAbelian:
    factors: tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(x) for x in self.factors)
        if any(x < 2 for x in f):
            raise ValueError("finite abelian factors must be at least 2")
        if any(b % a for a, b in zip(f, f[1:])):
            raise ValueError(f"factors {f} do not form a divisibility chain")
        object.__setattr__(self, "factors", f)


@dataclass(frozen=True)
class Free:
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("free rank must be nonnegative")


@dataclass(frozen=True)
class FreeProduct:
    left: GroupExpr
    right: GroupExpr


@dataclass(frozen=True)
class DirectProduct:
    """Only abelian operands are supported by :func:`invariants`."""

    left: GroupExpr
    right: GroupExpr


GroupExpr = Union[FreeAbelian, FiniteAbelian, Free, FreeProduct, DirectProduct]


@dataclass(frozen=True)
class InvariantTriple:
    corank: int
    betti: int
    rank: int

    def __post_init__(self):
        c, b, r = self.corank, self.betti, self.rank
        if not (c == b == 0 and r >= 0 or 1 <= c <= b <= r):
            raise ValueError(f"inadmissible invariant triple {(c, b, r)}")

    def as_tuple(self) -> tuple[int, int, int]:
        return self.corank, self.betti, self.rank


def free_product_of(*exprs: GroupExpr) -> GroupExpr:
    """Left-nested free product; the trivial group for no operands."""
    if not exprs:
        return FreeAbelian(0)
    return reduce(FreeProduct, exprs)


def is_abelian_expr(e: GroupExpr) -> bool:
    if isinstance(e, (FreeAbelian, FiniteAbelian)):
        return True
    if isinstance(e, DirectProduct):
        return is_abelian_expr(e.left) and is_abelian_expr(e.right)
    return False


def abelian_canonical(e: GroupExpr) -> tuple[int, tuple[int, ...]]:
    """Free rank and invariant factors of an abelian expression."""
    if isinstance(e, FreeAbelian):
        return e.n, ()
    if isinstance(e, FiniteAbelian):
        return 0, e.factors
    if isinstance(e, DirectProduct):
        n1, t1 = abelian_canonical(e.left)
        n2, t2 = abelian_canonical(e.right)
        return n1 + n2, invariant_factors(t1 + t2)
    raise UnsupportedExpression(
        f"{type(e).__name__} is not an abelian operand; direct products are only "
        "supported between abelian groups"
    )


def _check_direct(e: DirectProduct) -> None:
    if not (is_abelian_expr(e.left) and is_abelian_expr(e.right)):
        raise UnsupportedExpression(
            "direct product with a non-abelian factor: no co-rank rule is available"
        )


def invariants(e: GroupExpr) -> InvariantTriple:
    """(co-rank, Betti number, rank) of ``e``."""
    if isinstance(e, FreeAbelian):
        return InvariantTriple(int(e.n >= 1), e.n, e.n)
    if isinstance(e, FiniteAbelian):
        return InvariantTriple(0, 0, len(e.factors))
    if isinstance(e, Free):
        return InvariantTriple(e.k, e.k, e.k)
    if isinstance(e, FreeProduct):
        a, b = invariants(e.left), invariants(e.right)
        return InvariantTriple(a.corank + b.corank, a.betti + b.betti, a.rank + b.rank)
    if isinstance(e, DirectProduct):
        _check_direct(e)
        n, tors = abelian_canonical(e)
        # a quotient of an abelian group is abelian, and free abelian groups are
        # free only up to rank 1
        return InvariantTriple(int(n >= 1), n, n + len(tors))
    raise TypeError(f"not a group expression: {e!r}")


def isotropy_bounds(e: GroupExpr) -> tuple[int, int]:
    """Interval known to contain the isotropy index: ``(corank, betti)``."""
    t = invariants(e)
    return t.corank, t.betti


def _finite_orders(e: GroupExpr) -> list[int]:
    if isinstance(e, FiniteAbelian):
        return list(e.factors)
    if isinstance(e, (FreeProduct, DirectProduct)):
        return _finite_orders(e.left) + _finite_orders(e.right)
    return []


def abelianization(e: GroupExpr) -> AbelianInvariants:
    """Abelianization read off the expression; both products abelianize to direct sums."""
    if isinstance(e, DirectProduct):
        _check_direct(e)
    return AbelianInvariants(invariants(e).betti, invariant_factors(_finite_orders(e)))


def is_torsion_free(e: GroupExpr) -> bool:
    """True iff no finite abelian atom with a nontrivial factor occurs."""
    if isinstance(e, FiniteAbelian):
        return not e.factors
    if isinstance(e, (FreeProduct, DirectProduct)):
        return is_torsion_free(e.left) and is_torsion_free(e.right)
    return True


# -- lowering to presentations -------------------------------------------------


def _abelian_atom(orders: list[int], start: int) -> Presentation:
    """Generators g<start>.. with power relators for nonzero orders plus commutators."""
    n = len(orders)
    names = tuple(f"g{start + i}" for i in range(n))
    rels = [Word(((i, m),)) for i, m in enumerate(orders) if m]
    rels += [commutator(i, j) for i in range(n) for j in range(i + 1, n)]
    return Presentation(names, tuple(rels))


def _lower(e: GroupExpr, start: int) -> Presentation:
    if isinstance(e, FreeAbelian):
        return _abelian_atom([0] * e.n, start)
    if isinstance(e, FiniteAbelian):
        return _abelian_atom(list(e.factors), start)
    if isinstance(e, Free):
        return Presentation(tuple(f"g{start + i}" for i in range(e.k)), ())
    if isinstance(e, (FreeProduct, DirectProduct)):
        left = _lower(e.left, start)
        right = _lower(e.right, start + left.ngens)
        combine = free_product if isinstance(e, FreeProduct) else direct_product
        return combine(left, right)
    raise TypeError(f"not a group expression: {e!r}")


def to_presentation(e: GroupExpr) -> Presentation:
    """Finite presentation with generators g1, g2, ... in atom order."""
    return _lower(e, 1)


# -- text syntax -----------------------------------------------------------------

_EXPR_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>[0-9]+)|(?P<sym>[ZCFx*^(),])")


def _expr_tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if m is None:
            raise ExprParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "int":
            out.append(("int", m.group(), pos))
        elif m.lastgroup == "sym":
            out.append((m.group(), m.group(), pos))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _ExprParser:
    # `x` binds tighter than `*`; both associate to the left
    def __init__(self, text: str):
        self.toks = _expr_tokens(text)
        self.i = 0

    @property
    def kind(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            found = repr(tok[1]) if tok[0] != "eof" else "end of input"
            raise ExprParseError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take("int")[1])

    def expr(self) -> GroupExpr:
        e = self.term()
        while self.kind == "*":
            self.take("*")
            e = FreeProduct(e, self.term())
        return e

    def term(self) -> GroupExpr:
        e = self.factor()
        while self.kind == "x":
            _, _, pos = self.take("x")
            e = DirectProduct(e, self.factor())
            if not (is_abelian_expr(e.left) and is_abelian_expr(e.right)):
                raise UnsupportedExpression(
                    f"direct product with a non-abelian factor at position {pos}: "
                    "no co-rank rule is available"
                )
        return e

    def factor(self) -> GroupExpr:
        kind = self.kind
        pos = self.toks[self.i][2]
        if kind == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        if kind == "Z":
            self.take("Z")
            if self.kind == "^":
                self.take("^")
                return FreeAbelian(self.integer())
            return FreeAbelian(1)
        if kind == "F":
            self.take("F")
            self.take("(")
            k = self.integer()
            self.take(")")
            return Free(k)
        if kind == "C":
            self.take("C")
            self.take("(")
            factors = []
            if self.kind == "int":
                factors.append(self.integer())
                while self.kind == ",":
                    self.take(",")
                    factors.append(self.integer())
            self.take(")")
            try:
                return FiniteAbelian(tuple(factors))
            except ValueError as exc:
                raise ExprParseError(str(exc), pos) from None
        found = repr(self.toks[self.i][1]) if kind != "eof" else "end of input"
        raise ExprParseError(f"expected a group atom, found {found}", pos)


def parse_expr(text: str) -> GroupExpr:
    """Parse e.g. ``"Z^2 * (Z x C(2,4)) * F(3)"``."""
    p = _ExprParser(text)
    e = p.expr()
    p.take("eof")
    return e


def format_expr(e: GroupExpr) -> str:
    if isinstance(e, FreeAbelian):
        return f"Z^{e.n}"
    if isinstance(e, FiniteAbelian):
        return "C(" + ",".join(map(str, e.factors)) + ")"
    if isinstance(e, Free):
        return f"F({e.k})"
    if isinstance(e, FreeProduct):
        right = format_expr(e.right)
        if isinstance(e.right, FreeProduct):
            right = f"({right})"
        return f"{format_expr(e.left)} * {right}"
    if isinstance(e, DirectProduct):
        left, right = format_expr(e.left), format_expr(e.right)
        if isinstance(e.left, FreeProduct):
            left = f"({left})"
        if isinstance(e.right, (FreeProduct, DirectProduct)):
            right = f"({right})"
        return f"{left} x {right}"
    raise TypeError(f"not a group expression: {e!r}")
