"""Shared random fixture builders for the suite.

Generators are deterministic given their Random instance; callers seed
them so failures replay.  Diagrams that violate slice genericity or
become tangent after refinement are rejected by raising the library's
own validation errors, which callers treat as a skip.
"""

from __future__ import annotations

import random
from fractions import Fraction

from braidchi.diagrams import DiscreteRelativeBraid


def random_skeleton(rng: random.Random, m: int, d: int, pool: int = 8):
    cols = [rng.sample(range(-pool, pool + 1), m) for _ in range(d)]
    sigma = list(range(m))
    rng.shuffle(sigma)
    skeleton = tuple(
        tuple([Fraction(cols[i][j]) for i in range(d)] + [Fraction(cols[0][sigma[j]])])
        for j in range(m)
    )
    return skeleton, cols


def ladder_of(cols_i, lo, hi):
    return sorted([Fraction(lo), Fraction(hi)] + [Fraction(v) for v in cols_i])


def random_one_strand(rng: random.Random, m_max: int = 4, d_max: int = 4,
                      inner_gaps_only: bool = False, d_min: int = 2) -> DiscreteRelativeBraid:
    """One free strand at random gap midpoints over a random skeleton."""
    m = rng.randint(1 if not inner_gaps_only else 2, m_max)
    d = rng.randint(d_min, d_max)
    skeleton, cols = random_skeleton(rng, m, d)
    lo = min(min(s) for s in skeleton) - 1
    hi = max(max(s) for s in skeleton) + 1
    free = []
    for i in range(d):
        ladder = ladder_of(cols[i], lo, hi)
        if inner_gaps_only:
            g = rng.randrange(1, len(ladder) - 2)
        else:
            g = rng.randrange(len(ladder) - 1)
        free.append((ladder[g] + ladder[g + 1]) / 2)
    free.append(free[0])
    return DiscreteRelativeBraid(d=d, skeleton=skeleton, free=(tuple(free),))


def random_two_strand(rng: random.Random, m_max: int = 3) -> DiscreteRelativeBraid:
    """Two free strands in distinct gaps, closing to themselves or swapping."""
    m = rng.randint(2, m_max)
    d = 2
    skeleton, cols = random_skeleton(rng, m, d, pool=6)
    lo = min(min(s) for s in skeleton) - 1
    hi = max(max(s) for s in skeleton) + 1
    spots = []
    for i in range(d):
        ladder = ladder_of(cols[i], lo, hi)
        gs = rng.sample(range(len(ladder) - 1), 2)
        spots.append([(ladder[g] + ladder[g + 1]) / 2 for g in gs])
    swap = rng.random() < 0.5
    f0 = [spots[i][0] for i in range(d)]
    f1 = [spots[i][1] for i in range(d)]
    f0.append(f1[0] if swap else f0[0])
    f1.append(f0[0] if swap else f1[0])
    return DiscreteRelativeBraid(d=d, skeleton=skeleton, free=(tuple(f0), tuple(f1)))
