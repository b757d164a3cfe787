"""Betti number, co-rank and rank for finitely presented groups."""

from .abelian import AbelianInvariants, abelianize, invariant_factors, relation_matrix
from .calculus import (
    DirectProduct,
    FiniteAbelian,
    Free,
    FreeAbelian,
    FreeProduct,
    InvariantTriple,
    UnsupportedExpression,
    format_expr,
    free_product_of,
    invariants,
    is_torsion_free,
    isotropy_bounds,
    parse_expr,
    to_presentation,
)
from .linalg import IntMatrix, SnfResult, int_rank, snf
from .oracle import HomCount, betti_oracle, count_homs
from .presentation import (
    ParseError,
    Presentation,
    Word,
    direct_product,
    format_presentation,
    free_product,
    parse,
)
from .realize import InadmissibleTriple, TripleRequest, realize, realize_presentation, validate

__version__ = "0.1.0"
