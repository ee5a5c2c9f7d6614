"""Root systems of classical and exceptional type, with exact integer vectors.

Each simple type is realized inside a fixed integer lattice (the usual
coordinate realizations, uniformly rescaled where needed so that every root
has integer coordinates: F4 and the E series are stored doubled).  Rescaling
a factor changes no combinatorics: coroots 2a/(a,a) are scale invariant, and
all pairings used downstream are ratios.

Products are block-diagonal concatenations; a central torus contributes
trailing zero coordinates and no roots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import linalg
from .errors import DomainError

_SERIES = "ABCDEFG"


@dataclass(frozen=True)
class SimpleType:
    """One simple factor, e.g. A3 or E8."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _SERIES:
            raise DomainError(f"invalid simple type {self.series}{self.rank}: "
                              f"series must be one of {_SERIES}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise DomainError(f"invalid simple type {self.series}{self.rank}: "
                              "rank must be a positive integer")
        ok = {
            "A": self.rank >= 1,
            "B": self.rank >= 1,
            "C": self.rank >= 1,
            "D": self.rank >= 2,
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }[self.series]
        if not ok:
            raise DomainError(f"invalid simple type {self.series}{self.rank}: "
                              "rank out of range for this series")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse a compact name like "A2" or "E8"."""
        if len(text) < 2 or text[0] not in _SERIES or not text[1:].isdigit():
            raise DomainError(f"cannot parse simple type {text!r}")
        return cls(text[0], int(text[1:]))


def _unit(dim: int, i: int, scale: int = 1) -> list[int]:
    v = [0] * dim
    v[i] = scale
    return v


def _build_A(l: int) -> tuple[list[list[int]], list[list[int]], int]:
    dim = l + 1
    roots = []
    for i in range(dim):
        for j in range(dim):
            if i != j:
                v = [0] * dim
                v[i], v[j] = 1, -1
                roots.append(v)
    simple = []
    for i in range(l):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        simple.append(v)
    return roots, simple, dim


def _build_B(l: int) -> tuple[list[list[int]], list[list[int]], int]:
    roots = [_unit(l, i, s) for i in range(l) for s in (1, -1)]
    for i, j in itertools.combinations(range(l), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [0] * l
            v[i], v[j] = si, sj
            roots.append(v)
    simple = []
    for i in range(l - 1):
        v = [0] * l
        v[i], v[i + 1] = 1, -1
        simple.append(v)
    simple.append(_unit(l, l - 1))
    return roots, simple, l


def _build_C(l: int) -> tuple[list[list[int]], list[list[int]], int]:
    roots = [_unit(l, i, 2 * s) for i in range(l) for s in (1, -1)]
    for i, j in itertools.combinations(range(l), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [0] * l
            v[i], v[j] = si, sj
            roots.append(v)
    simple = []
    for i in range(l - 1):
        v = [0] * l
        v[i], v[i + 1] = 1, -1
        simple.append(v)
    simple.append(_unit(l, l - 1, 2))
    return roots, simple, l


def _build_D(l: int) -> tuple[list[list[int]], list[list[int]], int]:
    roots = []
    for i, j in itertools.combinations(range(l), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [0] * l
            v[i], v[j] = si, sj
            roots.append(v)
    simple = []
    for i in range(l - 1):
        v = [0] * l
        v[i], v[i + 1] = 1, -1
        simple.append(v)
    v = [0] * l
    v[l - 2], v[l - 1] = 1, 1
    simple.append(v)
    return roots, simple, l


def _build_G2() -> tuple[list[list[int]], list[list[int]], int]:
    # Realized in the sum-zero sublattice of Z^3: six short roots e_i - e_j
    # and six long roots +-(2e_i - e_j - e_k).
    roots = []
    for i, j in itertools.permutations(range(3), 2):
        v = [0, 0, 0]
        v[i], v[j] = 1, -1
        roots.append(v)
    for i in range(3):
        v = [-1, -1, -1]
        v[i] = 2
        roots.append(v)
        roots.append([-x for x in v])
    simple = [[1, -1, 0], [-2, 1, 1]]
    return roots, simple, 3


def _build_F4() -> tuple[list[list[int]], list[list[int]], int]:
    # Doubled so that the 16 "half-sum" roots become integral.
    roots = [_unit(4, i, 2 * s) for i in range(4) for s in (1, -1)]
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            v = [0] * 4
            v[i], v[j] = si, sj
            roots.append(v)
    for signs in itertools.product((1, -1), repeat=4):
        roots.append(list(signs))
    simple = [
        [0, 2, -2, 0],
        [0, 0, 2, -2],
        [0, 0, 0, 2],
        [1, -1, -1, -1],
    ]
    return roots, simple, 4


def _e8_data() -> tuple[list[list[int]], list[list[int]]]:
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            v = [0] * 8
            v[i], v[j] = si, sj
            roots.append(v)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(list(signs))
    simple = [
        [1, -1, -1, -1, -1, -1, -1, 1],
        [2, 2, 0, 0, 0, 0, 0, 0],
        [-2, 2, 0, 0, 0, 0, 0, 0],
        [0, -2, 2, 0, 0, 0, 0, 0],
        [0, 0, -2, 2, 0, 0, 0, 0],
        [0, 0, 0, -2, 2, 0, 0, 0],
        [0, 0, 0, 0, -2, 2, 0, 0],
        [0, 0, 0, 0, 0, -2, 2, 0],
    ]
    return roots, simple


def _build_E(l: int) -> tuple[list[list[int]], list[list[int]], int]:
    all_roots, simple8 = _e8_data()
    simple = simple8[:l]
    if l == 8:
        return all_roots, simple, 8
    # E6 and E7 are the root subsystems of E8 spanned by the first l simple
    # roots; membership is an exact rank test.
    kept = [r for r in all_roots if linalg.in_span(r, simple)]
    return kept, simple, 8


_BUILDERS = {
    "A": _build_A,
    "B": _build_B,
    "C": _build_C,
    "D": _build_D,
}


def _factor_roots(t: SimpleType) -> tuple[list[list[int]], list[list[int]], int]:
    if t.series in _BUILDERS:
        return _BUILDERS[t.series](t.rank)
    if t.series == "G":
        return _build_G2()
    if t.series == "F":
        return _build_F4()
    return _build_E(t.rank)


@dataclass(frozen=True)
class RootSystem:
    """A finite root system (possibly a product) with a central torus block.

    roots are integer vectors in the ambient lattice, stored sorted
    lexicographically; simple_roots keep factor-by-factor Bourbaki order.
    Derived combinatorial tables are computed lazily and cached.
    """

    factors: tuple[SimpleType, ...]
    torus_rank: int
    ambient_dim: int
    roots: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]

    # -- basic derived data --------------------------------------------------

    @cached_property
    def root_index(self) -> dict[tuple[int, ...], int]:
        return {r: i for i, r in enumerate(self.roots)}

    @cached_property
    def negation(self) -> tuple[int, ...]:
        """Index of -root for each root."""
        idx = self.root_index
        return tuple(idx[tuple(-x for x in r)] for r in self.roots)

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def group_dim(self) -> int:
        """Dimension of the span of the roots plus the central torus block."""
        return self.semisimple_rank + self.torus_rank

    @cached_property
    def group_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Rows spanning span(roots) + torus coordinates."""
        rows = [tuple(Fraction(x) for x in s) for s in self.simple_roots]
        for k in range(self.torus_rank):
            v = [Fraction(0)] * self.ambient_dim
            v[self.ambient_dim - self.torus_rank + k] = Fraction(1)
            rows.append(tuple(v))
        return tuple(rows)

    @cached_property
    def simple_coords(self) -> tuple[tuple[int, ...], ...]:
        """Each root written in the simple-root basis (always integral)."""
        basis_t = [[Fraction(s[d]) for s in self.simple_roots]
                   for d in range(self.ambient_dim)]
        out = []
        for r in self.roots:
            sol = linalg.solve(basis_t, [Fraction(x) for x in r])
            if sol is None:
                raise AssertionError(f"root {r} outside simple-root span")
            coeffs = []
            for c in sol:
                if c.denominator != 1:
                    raise AssertionError(f"non-integral coordinate for {r}")
                coeffs.append(int(c))
            out.append(tuple(coeffs))
        return tuple(out)

    @cached_property
    def is_positive(self) -> tuple[bool, ...]:
        flags = []
        for coords in self.simple_coords:
            if all(c >= 0 for c in coords):
                flags.append(True)
            elif all(c <= 0 for c in coords):
                flags.append(False)
            else:
                raise AssertionError("mixed-sign simple-root coordinates")
        return tuple(flags)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.simple_coords)

    @cached_property
    def simple_factor_index(self) -> tuple[int, ...]:
        """Which factor each simple root belongs to, in listed order."""
        out = []
        pos = 0
        for fi, t in enumerate(self.factors):
            out.extend([fi] * t.rank)
            pos += t.rank
        assert pos == len(self.simple_roots)
        return tuple(out)

    # -- pairings and reflections --------------------------------------------

    @staticmethod
    def pairing(u: Sequence[int | Fraction], v: Sequence[int | Fraction]) -> Fraction:
        return linalg.dot(u, v)

    @staticmethod
    def coroot(alpha: Sequence[int]) -> tuple[Fraction, ...]:
        norm = linalg.dot(alpha, alpha)
        return tuple(2 * Fraction(x) / norm for x in alpha)

    def reflect(self, beta: Sequence[int], alpha: Sequence[int]) -> tuple[int, ...]:
        """Reflection of beta in the hyperplane orthogonal to alpha."""
        c = 2 * linalg.dot(beta, alpha) / linalg.dot(alpha, alpha)
        if c.denominator != 1:
            raise AssertionError("non-integral Cartan pairing")
        c = int(c)
        return tuple(b - c * a for b, a in zip(beta, alpha))

    @cached_property
    def reflection_perms(self) -> tuple[tuple[int, ...], ...]:
        """For each simple root, the induced permutation of root indices."""
        perms = []
        for s in self.simple_roots:
            perms.append(tuple(self.root_index[self.reflect(r, s)]
                               for r in self.roots))
        return tuple(perms)

    @cached_property
    def addition_table(self) -> tuple[tuple[int, ...], ...]:
        """addition_table[i][j] = index of root_i + root_j, or -1."""
        idx = self.root_index
        table = []
        for r in self.roots:
            row = []
            for s in self.roots:
                row.append(idx.get(tuple(a + b for a, b in zip(r, s)), -1))
            table.append(tuple(row))
        return tuple(table)

    def roots_in_simple_span(self, simple_subset: Iterable[int]) -> list[int]:
        """Indices of roots supported on the given simple-root indices."""
        allowed = set(simple_subset)
        out = []
        for i, coords in enumerate(self.simple_coords):
            if all(c == 0 or j in allowed for j, c in enumerate(coords)):
                out.append(i)
        return out

    def __str__(self) -> str:
        name = "x".join(str(t) for t in self.factors) if self.factors else "T"
        if self.torus_rank and self.factors:
            name += f"+T{self.torus_rank}"
        elif self.torus_rank:
            name = f"T{self.torus_rank}"
        return name


def build_root_system(factors: Sequence[SimpleType | str],
                      torus_rank: int = 0) -> RootSystem:
    """Assemble a (product) root system with an optional central torus.

    Factors may be SimpleType instances or compact names like "B3".
    """
    if torus_rank < 0:
        raise DomainError("torus_rank must be nonnegative")
    typed = [t if isinstance(t, SimpleType) else SimpleType.parse(t)
             for t in factors]
    blocks = [_factor_roots(t) for t in typed]
    total = sum(b[2] for b in blocks) + torus_rank
    roots: list[tuple[int, ...]] = []
    simple: list[tuple[int, ...]] = []
    offset = 0
    for froots, fsimple, dim in blocks:
        for r in froots:
            v = [0] * total
            v[offset:offset + dim] = r
            roots.append(tuple(v))
        for s in fsimple:
            v = [0] * total
            v[offset:offset + dim] = s
            simple.append(tuple(v))
        offset += dim
    roots.sort()
    return RootSystem(
        factors=tuple(typed),
        torus_rank=torus_rank,
        ambient_dim=total,
        roots=tuple(roots),
        simple_roots=tuple(simple),
    )


def positive_roots(rs: RootSystem) -> list[tuple[int, ...]]:
    """The positive half of the root set, ordered by height then vector."""
    pos = [(rs.heights[i], r) for i, r in enumerate(rs.roots)
           if rs.is_positive[i]]
    pos.sort()
    return [r for _, r in pos]


@lru_cache(maxsize=None)
def _dual_coxeter(series: str, rank: int) -> int:
    rs = build_root_system([SimpleType(series, rank)])
    # A root of maximal height; unique in the irreducible case, and any
    # choice works when a low-rank type happens to be reducible (D2).
    theta_idx = max(range(len(rs.roots)), key=lambda i: rs.heights[i])
    theta = rs.roots[theta_idx]
    theta_co = rs.coroot(theta)
    cobasis_t = [[rs.coroot(s)[d] for s in rs.simple_roots]
                 for d in range(rs.ambient_dim)]
    sol = linalg.solve(cobasis_t, list(theta_co))
    assert sol is not None, "highest coroot outside simple-coroot span"
    total = 1 + sum(sol)
    assert total.denominator == 1 and total > 0
    return int(total)


def dual_coxeter_number(t: SimpleType) -> int:
    """1 plus the coefficient sum of the highest root's coroot in the
    simple-coroot basis.

    For irreducible systems this matches the familiar closed forms
    (A_l: l+1, B_l: 2l-1 for l >= 2, C_l: l+1, D_l: 2l-2, G2: 4, F4: 9,
    E6: 12, E7: 18, E8: 30).  B1 is isomorphic to A1 and yields 2.
    """
    return _dual_coxeter(t.series, t.rank)
