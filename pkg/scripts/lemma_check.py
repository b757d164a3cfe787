"""Compare Betti numbers of random presentations with those of their free and
direct products, all computed by Smith normal form, and cross-check a subset
with the homomorphism-counting oracle.

    python scripts/lemma_check.py --pairs 1000 --seed 0
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from corank.abelian import abelianize
from corank.oracle import agreement_primes, betti_oracle
from corank.presentation import Presentation, Word, direct_product, free_product


@dataclass
class LemmaConfig:
    pairs: int = 1000
    seed: int = 0
    max_gens: int = 4
    max_rels: int = 4
    oracle_every: int = 25


def random_presentation(rng: random.Random, max_gens: int, max_rels: int) -> Presentation:
    n = rng.randint(0, max_gens)
    if n == 0:
        return Presentation()
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        syl = [(rng.randrange(n), rng.choice([-3, -2, -1, 1, 2, 3]))
               for _ in range(rng.randint(1, 6))]
        rels.append(Word.reduced(syl))
    return Presentation(tuple(f"x{i}" for i in range(n)), tuple(rels))


def run(cfg: LemmaConfig) -> dict[str, int]:
    rng = random.Random(cfg.seed)
    stats = {"pairs": 0, "free_mismatch": 0, "direct_mismatch": 0, "oracle_checks": 0,
             "oracle_mismatch": 0}
    for k in range(cfg.pairs):
        p1 = random_presentation(rng, cfg.max_gens, cfg.max_rels)
        p2 = random_presentation(rng, cfg.max_gens, cfg.max_rels)
        a1, a2 = abelianize(p1), abelianize(p2)
        fp = free_product(p1, p2)
        stats["pairs"] += 1
        stats["free_mismatch"] += abelianize(fp).betti != a1.betti + a2.betti
        stats["direct_mismatch"] += (abelianize(direct_product(p1, p2)).betti
                                     != a1.betti + a2.betti)
        if k % cfg.oracle_every == 0 and fp.ngens <= 4:
            ab = abelianize(fp)
            stats["oracle_checks"] += 1
            stats["oracle_mismatch"] += betti_oracle(fp, agreement_primes(ab.torsion)) != ab.betti
    return stats


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=LemmaConfig.pairs)
    ap.add_argument("--seed", type=int, default=LemmaConfig.seed)
    args = ap.parse_args()
    stats = run(LemmaConfig(pairs=args.pairs, seed=args.seed))
    print(" ".join(f"{k}={v}" for k, v in stats.items()))


if __name__ == "__main__":
    main()
