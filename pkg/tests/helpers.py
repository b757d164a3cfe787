"""Generators and independent oracles shared by the test modules."""

from __future__ import annotations

import random
from functools import reduce
from itertools import combinations, permutations
from math import gcd, prod
from pathlib import Path

from hypothesis import strategies as st

from corank.calculus import DirectProduct, FiniteAbelian, Free, FreeAbelian, FreeProduct
from corank.linalg import IntMatrix
from corank.presentation import Presentation, Word

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

# Known abelianizations (betti, torsion) of the corpus groups.
CORPUS_EXPECTED = {
    "trivial": (0, ()),
    "infinite_cyclic": (1, ()),
    "cyclic_2": (0, (2,)),
    "cyclic_6": (0, (6,)),
    "free_2": (2, ()),
    "free_abelian_2": (2, ()),
    "free_abelian_3": (3, ()),
    "z2_free_cube": (0, (2, 2, 2)),
    "genus_2_surface": (4, ()),
    "klein_bottle": (1, (2,)),
    "nonorientable_genus_3": (2, (2,)),
    "trefoil": (1, ()),
    "symmetric_3": (0, (2,)),
    "quaternion": (0, (2, 2)),
    "baumslag_solitar_1_2": (1, ()),
    "z4_times_z6": (0, (2, 12)),
    "heisenberg": (2, ()),
    "witness_1_2_3": (2, (2,)),
}


def corpus_texts() -> dict[str, str]:
    return {p.stem: p.read_text(encoding="utf-8") for p in sorted(CORPUS.glob("*.txt"))}


# -- oracles -----------------------------------------------------------------------


def leibniz_det(rows: list[list[int]]) -> int:
    """Permutation expansion; only for tiny matrices."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        total += (-1) ** inversions * prod(rows[i][perm[i]] for i in range(n))
    return total


def minor_gcds(rows: list[list[int]], ncols: int) -> list[int]:
    """g_k = gcd of all k x k minors, for k = 1 .. min(m, n)."""
    m = len(rows)
    out = []
    for k in range(1, min(m, ncols) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(ncols), k):
                g = gcd(g, leibniz_det([[rows[i][j] for j in ci] for i in ri]))
        out.append(g)
    return out


def oracle_diag(rows: list[list[int]], ncols: int) -> list[int]:
    """Smith diagonal from determinantal divisors: d_k = g_k / g_(k-1)."""
    gs = minor_gcds(rows, ncols)
    diag, prev = [], 1
    for g in gs:
        if g == 0:
            diag.append(0)
        else:
            diag.append(g // prev)
            prev = g
    return diag


# -- seeded random generators ------------------------------------------------------


def random_word(rng: random.Random, ngens: int, max_len: int = 6) -> Word:
    syl = []
    for _ in range(rng.randint(1, max_len)):
        e = rng.choice([-3, -2, -1, 1, 2, 3])
        syl.append((rng.randrange(ngens), e))
    return Word.reduced(syl)


def random_presentation(rng: random.Random, max_gens: int = 4,
                        max_rels: int = 4) -> Presentation:
    n = rng.randint(0, max_gens)
    names = tuple("abcd"[:n])
    rels = tuple(random_word(rng, n) for _ in range(rng.randint(0, max_rels))) if n else ()
    return Presentation(names, rels)


def random_matrix(rng: random.Random, max_dim: int = 8, lo: int = -9,
                  hi: int = 9) -> IntMatrix:
    m, n = rng.randint(1, max_dim), rng.randint(1, max_dim)
    rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]
    if rng.random() < 0.3 and m > 1:
        # force rank deficiency with a dependent row
        i, j = rng.sample(range(m), 2)
        k = rng.randint(-2, 2)
        rows[i] = [k * x for x in rows[j]]
    return IntMatrix.from_rows(rows, n)


def random_abelian_expr(rng: random.Random, depth: int):
    if depth <= 1 or rng.random() < 0.5:
        if rng.random() < 0.5:
            return FreeAbelian(rng.randint(0, 3))
        chain = [rng.choice([2, 3, 4])]
        for _ in range(rng.randint(0, 2)):
            chain.append(chain[-1] * rng.choice([1, 2, 3]))
        return FiniteAbelian(tuple(chain))
    return DirectProduct(random_abelian_expr(rng, depth - 1),
                         random_abelian_expr(rng, depth - 1))


def random_expr(rng: random.Random, depth: int = 4):
    roll = rng.random()
    if depth <= 1 or roll < 0.3:
        kind = rng.randrange(3)
        if kind == 0:
            return FreeAbelian(rng.randint(0, 4))
        if kind == 1:
            return random_abelian_expr(rng, 1) if rng.random() < 0.5 else FiniteAbelian((2,))
        return Free(rng.randint(0, 3))
    if roll < 0.45:
        return random_abelian_expr(rng, depth)
    return FreeProduct(random_expr(rng, depth - 1), random_expr(rng, depth - 1))


# -- hypothesis strategies -----------------------------------------------------------

exponents = st.integers(-3, 3).filter(bool)


@st.composite
def words(draw, ngens: int, max_len: int = 6) -> Word:
    syl = draw(st.lists(st.tuples(st.integers(0, ngens - 1), exponents),
                        min_size=0, max_size=max_len))
    return Word.reduced(syl)


@st.composite
def presentations(draw, max_gens: int = 4, max_rels: int = 4) -> Presentation:
    n = draw(st.integers(0, max_gens))
    names = draw(st.lists(st.from_regex(r"[A-Za-z][A-Za-z0-9_']{0,3}", fullmatch=True),
                          min_size=n, max_size=n, unique=True))
    if n == 0:
        return Presentation((), ())
    rels = draw(st.lists(words(n), max_size=max_rels))
    return Presentation(tuple(names), tuple(rels))


@st.composite
def int_matrices(draw, max_dim: int = 6, bound: int = 9) -> IntMatrix:
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=m * n, max_size=m * n))
    return IntMatrix(m, n, tuple(entries))


chains = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(
    lambda steps: FiniteAbelian(tuple(reduce(lambda acc, s: acc + [acc[-1] * s],
                                             steps[1:], [steps[0] + 1])))
)

abelian_atoms = st.one_of(st.integers(0, 4).map(FreeAbelian), chains)
abelian_exprs = st.recursive(
    abelian_atoms, lambda inner: st.builds(DirectProduct, inner, inner), max_leaves=4
)
atoms = st.one_of(abelian_atoms, st.integers(0, 3).map(Free))
group_exprs = st.recursive(
    st.one_of(atoms, abelian_exprs),
    lambda inner: st.builds(FreeProduct, inner, inner),
    max_leaves=6,
)
