"""Level arithmetic: prime supports, congruence-subgroup indices, bounds.

Factoring is delegated to sympy, which is exact for anything the 2^63
level guard admits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from sympy import factorint

from .errors import DomainError, ResourceLimitError

LEVEL_LIMIT = 2 ** 63


@dataclass(frozen=True)
class LevelData:
    N: int
    factorization: dict[int, int]
    S_N: tuple[int, ...]


def level_data(N: int) -> LevelData:
    """Exact factorization of a level, with its prime support sorted."""
    if not isinstance(N, int) or N < 1:
        raise DomainError("level must be a positive integer")
    if N > LEVEL_LIMIT:
        raise ResourceLimitError(f"levels are limited to {LEVEL_LIMIT}")
    fac = {int(p): int(e) for p, e in factorint(N).items()}
    return LevelData(N=N, factorization=fac, S_N=tuple(sorted(fac)))


def sl_index(n: int, N: int) -> int:
    """Order of the special linear group over the integers mod N.

    For N >= 3 this is the index of the principal congruence subgroup of
    level N; for N in {1, 2} it is the raw group order (the level is not
    neat and -1 is congruent to 1).
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError("matrix size must be an integer >= 2")
    data = level_data(N)
    total = Fraction(N) ** (n * n - 1)
    for p in data.S_N:
        for k in range(2, n + 1):
            total *= 1 - Fraction(1, p ** k)
    assert total.denominator == 1 and total > 0
    return int(total)


def is_neat_level(N: int) -> bool:
    return N >= 3


def congruence_index(N: int, order_mod: Callable[[int], int]) -> int:
    """Index route for groups without a shipped formula: the caller
    supplies an exact order-mod-N callback."""
    level_data(N)
    value = order_mod(N)
    if not isinstance(value, int) or value < 1:
        raise DomainError("order callback must return a positive integer")
    return value


def conjecture_bound(N: int, b: float, c: float) -> float:
    """Evaluate c * (1 + log N)^b with the natural logarithm."""
    if not isinstance(N, int) or N < 1:
        raise DomainError("level must be a positive integer")
    if b < 0:
        raise DomainError("exponent b must be nonnegative")
    if c <= 0:
        raise DomainError("constant c must be positive")
    return c * (1 + math.log(N)) ** b


@dataclass(frozen=True)
class PrimeFixedResult:
    ok: bool
    reference: tuple[int, ...]
    union: tuple[int, ...]
    offenders: tuple[tuple[int, tuple[int, ...]], ...]


def prime_fixed_check(levels: Sequence[int],
                      allowed: Sequence[int] | None = None) -> PrimeFixedResult:
    """Whether all levels' prime divisors stay inside one fixed set.

    The reference set is `allowed` when given, else the support of the
    first level.  Offenders list each level that escapes, with the primes
    it introduces.
    """
    if not levels:
        raise DomainError("need at least one level")
    supports = [set(level_data(n).S_N) for n in levels]
    if allowed is not None:
        reference = set()
        for p in allowed:
            if not isinstance(p, int) or p < 2 or level_data(p).S_N != (p,):
                raise DomainError(f"allowed set must contain primes, got {p}")
            reference.add(p)
    else:
        reference = set(supports[0])
    union: set[int] = set()
    offenders = []
    for n, sup in zip(levels, supports):
        union |= sup
        extra = sup - reference
        if extra:
            offenders.append((n, tuple(sorted(extra))))
    return PrimeFixedResult(ok=not offenders,
                            reference=tuple(sorted(reference)),
                            union=tuple(sorted(union)),
                            offenders=tuple(offenders))
