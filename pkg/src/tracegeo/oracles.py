"""Independent brute-force routes used to cross-check the main algorithms.

Nothing here shares code with the implementations under test: parabolic
subsets are found by scanning every root subset, group orders by counting
matrices, discriminants by eigenvalue products and complement
determinants.  Deliberately small and slow.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .errors import ResourceLimitError
from .root_datum import RootSystem

BRUTE_FORCE_ROOT_LIMIT = 14


def brute_force_parabolic_count(rs: RootSystem) -> int:
    """Count closed subsets S with S u -S = R by scanning all subsets."""
    n = len(rs.roots)
    if n > BRUTE_FORCE_ROOT_LIMIT:
        raise ResourceLimitError(
            f"brute force scan over 2^{n} subsets refused")
    neg = rs.negation
    add = rs.addition_table
    count = 0
    for mask in range(1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if any(mask >> i & 1 == 0 and mask >> neg[i] & 1 == 0
               for i in range(n)):
            continue
        closed = True
        for i, j in itertools.combinations(members, 2):
            s = add[i][j]
            if s >= 0 and mask >> s & 1 == 0:
                closed = False
                break
        if closed:
            count += 1
    return count


def sl_group_order(n: int, N: int) -> int:
    """|SL(n, Z/N)| by counting matrices with determinant 1 mod N."""
    if n == 2:
        rng = [np.arange(N)] * 4
        a, b, c, d = np.meshgrid(*rng, indexing="ij", sparse=True)
        det = (a * d - b * c) % N
        return int(np.count_nonzero(det == 1))
    if n == 3:
        rng = [np.arange(N, dtype=np.int64)] * 6
        d, e, f, g, h, i = np.meshgrid(*rng, indexing="ij", sparse=True)
        m1 = (e * i - f * h) % N
        m2 = (d * i - f * g) % N
        m3 = (d * h - e * g) % N
        total = 0
        for a in range(N):
            for b in range(N):
                for c in range(N):
                    det = (a * m1 - b * m2 + c * m3) % N
                    total += int(np.count_nonzero(det == 1))
        return total
    raise ResourceLimitError("matrix counting is implemented for n in {2, 3}")


def diagonal_discriminant(diag: Sequence[Fraction]) -> Fraction:
    """Product of (1 - x/y) over ordered pairs of distinct diagonal
    entries with x != y."""
    value = Fraction(1)
    for x in diag:
        for y in diag:
            if x != y:
                value *= 1 - x / y
    return value


def complement_determinant(g: Sequence[Sequence[Fraction]]) -> Fraction:
    """det(1 - Ad(g)) restricted to the matrix units the conjugation
    action moves, for diagonal g.

    The action is computed by honest matrix products g E g^{-1} on each
    unit E, expanded back in the unit basis; the complement of the
    centralizer is exactly the span of the moved units.
    """
    n = len(g)
    diag = [Fraction(g[i][i]) for i in range(n)]
    ginv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        ginv[i][i] = 1 / diag[i]
    moved = [(i, j) for i in range(n) for j in range(n)
             if i != j and diag[i] != diag[j]]
    index = {pair: a for a, pair in enumerate(moved)}
    size = len(moved)
    m = [[Fraction(0)] * size for _ in range(size)]
    gm = [[Fraction(x) for x in row] for row in g]
    for (k, l), col in index.items():
        unit = [[Fraction(0)] * n for _ in range(n)]
        unit[k][l] = Fraction(1)
        image = linalg.mat_mul(linalg.mat_mul(gm, unit), ginv)
        for (i, j), row in index.items():
            m[row][col] = (1 if (i, j) == (k, l) else 0) - image[i][j]
    return linalg.det(m)
