"""Brute-force Betti numbers from homomorphism counts into Z_p.

Homomorphisms G -> Z_p are the assignments of generators to residues mod p
under which every relator maps to 0. They form an F_p vector space of
dimension ``betti + #{torsion coefficients divisible by p}``, so the minimum
dimension over enough primes is the Betti number. Relators are evaluated by
walking their syllables; nothing here goes through the relation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .presentation import Presentation

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_PRIMES",
    "BudgetExceeded",
    "HomCount",
    "is_prime",
    "agreement_primes",
    "count_homs",
    "hom_table",
    "betti_oracle",
]

DEFAULT_BUDGET = 10**6
DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


class BudgetExceeded(RuntimeError):
    def __init__(self, prime: int, ngens: int, budget: int):
        super().__init__(
            f"enumerating {prime}^{ngens} assignments exceeds the budget of {budget}"
        )
        self.prime = prime
        self.ngens = ngens
        self.budget = budget


@dataclass(frozen=True)
class HomCount:
    prime: int
    count: int
    log_dim: int


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def agreement_primes(torsion: Iterable[int] = ()) -> list[int]:
    """Default primes, extended until one exceeds every torsion coefficient."""
    primes = list(DEFAULT_PRIMES)
    top = max(torsion, default=0)
    q = primes[-1]
    while primes[-1] <= top:
        q += 1
        if is_prime(q):
            primes.append(q)
    return primes


def _log(count: int, prime: int) -> int:
    d = 0
    n = count
    while n % prime == 0 and n > 1:
        n //= prime
        d += 1
    if n != 1:
        raise ArithmeticError(f"homomorphism count {count} is not a power of {prime}")
    return d


def count_homs(p: Presentation, prime: int, budget: int = DEFAULT_BUDGET) -> HomCount:
    """Count homomorphisms from the presented group to Z_prime by enumeration."""
    if not is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    n = p.ngens
    total = prime**n
    if total > budget:
        raise BudgetExceeded(prime, n, budget)
    idx = np.arange(total, dtype=np.int64)
    # value of generator j in assignment idx is the j-th base-`prime` digit
    values = [(idx // prime**j) % prime for j in range(n)]
    ok = np.ones(total, dtype=bool)
    for w in p.relators:
        acc = np.zeros(total, dtype=np.int64)
        for g, e in w.syllables:
            acc = (acc + (e % prime) * values[g]) % prime
        ok &= acc == 0
    count = int(ok.sum())
    return HomCount(prime, count, _log(count, prime))


def hom_table(p: Presentation, primes: Sequence[int],
              budget: int = DEFAULT_BUDGET) -> list[HomCount]:
    return [count_homs(p, q, budget) for q in primes]


def betti_oracle(p: Presentation, primes: Sequence[int],
                 budget: int = DEFAULT_BUDGET) -> int:
    """Minimum hom-space dimension over ``primes``.

    Always an upper bound for the Betti number, and equal to it as soon as one of
    the primes divides no torsion coefficient.
    """
    if not primes:
        raise ValueError("need at least one prime")
    return min(h.log_dim for h in hom_table(p, primes, budget))
