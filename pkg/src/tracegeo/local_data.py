"""Generalized Weyl discriminants and block modulus characters, exactly.

The discriminant of a semisimple rational matrix g is det(1 - Ad(g))
taken on the complement of the centralizer: the characteristic polynomial
of Ad(g) on the full n-by-n matrix algebra is divided by (x - 1) as often
as it vanishes at 1, and the quotient is evaluated at 1.  Everything runs
in exact rational arithmetic; no root finding, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DomainError

RationalLike = int | str | Fraction


def as_fraction(x: RationalLike) -> Fraction:
    """Accept ints, Fractions, and "num/den" strings."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse rational {x!r}") from exc
    raise DomainError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class RationalMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("matrix size must be positive")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise DomainError("entries must form a square matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RationalMatrix":
        n = len(rows)
        ent = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        return cls(n, ent)

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class DiscriminantValue:
    value: Fraction
    abs_inf: Fraction
    p_valuations: dict[int, int] = field(compare=False)
    centralizer_dim: int = 0


def _valuation(value: Fraction, p: int) -> int:
    v = 0
    num, den = value.numerator, value.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _prime_support(n: int) -> set[int]:
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.add(n)
    return out


def _is_prime(p: int) -> bool:
    return p >= 2 and _prime_support(p) == {p}


def _matrix_poly_eval(p: Sequence[Fraction], m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in p:
        acc = linalg.mat_mul(acc, m)
        for i in range(n):
            acc[i][i] += c
    return acc


def _check_semisimple(m: list[list[Fraction]]) -> None:
    # The squarefree radical of the characteristic polynomial annihilates
    # the matrix exactly when it is diagonalizable over the algebraic
    # closure.
    chi = linalg.charpoly(m)
    radical, _ = linalg.poly_divmod(chi, linalg.poly_gcd(chi, linalg.poly_derivative(chi)))
    value = _matrix_poly_eval(radical, m)
    if any(x != 0 for row in value for x in row):
        raise DomainError("matrix is not semisimple; pass the semisimple "
                          "part of its multiplicative Jordan decomposition")


def _adjoint_matrix(g: list[list[Fraction]]) -> list[list[Fraction]]:
    """Conjugation action X -> g X g^{-1} on the matrix algebra, as an
    n^2-by-n^2 matrix in the basis of matrix units (row-major)."""
    n = len(g)
    ginv = linalg.inverse(g)
    ad = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if g[i][k] == 0:
                    continue
                for l in range(n):
                    ad[i * n + j][k * n + l] = g[i][k] * ginv[l][j]
    return ad


def weyl_discriminant(gamma_s: RationalMatrix,
                      primes: Sequence[int] = ()) -> DiscriminantValue:
    """det(1 - Ad(gamma_s)) on the complement of the centralizer.

    The input must be invertible and semisimple.  p-adic valuations are
    reported for every prime dividing the value's numerator or denominator
    plus any explicitly requested primes.
    """
    g = gamma_s.rows()
    if linalg.det(g) == 0:
        raise DomainError("matrix is not invertible")
    _check_semisimple(g)
    chi = linalg.charpoly(_adjoint_matrix(g))
    # Exact synthetic division by (x - 1), as long as 1 stays a root.
    m = 0
    coeffs = list(chi)
    while sum(coeffs) == 0:
        out = []
        acc = Fraction(0)
        for c in coeffs[:-1]:
            acc += c
            out.append(acc)
        coeffs = out
        m += 1
    value = sum(coeffs, Fraction(0))  # evaluation at 1
    assert value != 0
    support = _prime_support(value.numerator) | _prime_support(value.denominator)
    for p in primes:
        if not _is_prime(p):
            raise DomainError(f"{p} is not a prime")
        support.add(p)
    vals = {p: _valuation(value, p) for p in sorted(support)}
    return DiscriminantValue(value=value, abs_inf=abs(value),
                             p_valuations=vals, centralizer_dim=m)


def modulus_character(block_sizes: Sequence[int],
                      block_dets: Sequence[RationalLike],
                      place: int | str = "inf") -> Fraction:
    """Absolute value of det(Ad m) on the nilradical of a standard block
    parabolic, for a block-diagonal m with the given block determinants.

    place is "inf" for the archimedean absolute value or a prime p for the
    exact p-adic one (a power of p, as a Fraction).
    """
    if len(block_sizes) != len(block_dets):
        raise DomainError("block sizes and determinants must have matching "
                          "lengths")
    if any(not isinstance(s, int) or s < 1 for s in block_sizes):
        raise DomainError("block sizes must be positive integers")
    dets = [as_fraction(d) for d in block_dets]
    if any(d == 0 for d in dets):
        raise DomainError("block determinants must be nonzero")
    x = Fraction(1)
    for i in range(len(dets)):
        for j in range(i + 1, len(dets)):
            x *= dets[i] ** block_sizes[j] * dets[j] ** (-block_sizes[i])
    if place == "inf":
        return abs(x)
    if isinstance(place, int) and _is_prime(place):
        return Fraction(place) ** (-_valuation(x, place))
    raise DomainError(f"place must be 'inf' or a prime, got {place!r}")
