"""Closed parabolic subsets of a root system and their Levi bookkeeping.

A parabolic subgroup containing the maximal split torus is modeled by a
closed subset S of roots with S u -S = R; its Levi is the symmetric part
S n -S and its unipotent radical the antisymmetric part.  Everything here
is finite set combinatorics plus exact rational linear algebra, so all
dimensions and counts are exact.

Subsets are stored as frozensets of root indices into the parent system's
canonical root order; bitmask arithmetic drives the enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import DomainError, ResourceLimitError
from .root_datum import RootSystem

ENUMERATION_RANK_LIMIT = 6
TUPLE_SIZE_LIMIT = 8


@dataclass(frozen=True)
class ParabolicSubset:
    system: RootSystem
    members: frozenset[int]

    @property
    def member_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.system.roots[i] for i in self.members))

    def opposite(self) -> "ParabolicSubset":
        neg = self.system.negation
        return ParabolicSubset(self.system,
                               frozenset(neg[i] for i in self.members))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class LeviDatum:
    """Symmetric part of a parabolic subset plus its split-center dimension.

    a_M_dim is the dimension of the central split torus of the Levi:
    (rank of the root span + central torus rank) minus the rank of the
    Levi's own roots.
    """

    system: RootSystem
    levi_roots: frozenset[int]
    a_M_dim: int

    @property
    def member_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.system.roots[i] for i in self.levi_roots))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.levi_roots))


def make_levi(rs: RootSystem, root_indices: Iterable[int]) -> LeviDatum:
    """Validate a root subset as a Levi and compute its split-center dim.

    The subset must be closed under negation and saturated in its span
    (every root lying in the rational span of the subset belongs to it).
    """
    members = frozenset(root_indices)
    for i in members:
        if i < 0 or i >= len(rs.roots):
            raise DomainError(f"root index {i} out of range")
        if rs.negation[i] not in members:
            raise DomainError("levi roots must be closed under negation")
    vectors = [rs.roots[i] for i in sorted(members)]
    if vectors:
        for j, r in enumerate(rs.roots):
            if j not in members and linalg.in_span(r, vectors):
                raise DomainError("levi roots must contain every root in "
                                  "their span")
    a_m = rs.group_dim - linalg.rank(vectors)
    return LeviDatum(rs, members, a_m)


def minimal_levi(rs: RootSystem) -> LeviDatum:
    return LeviDatum(rs, frozenset(), rs.group_dim)


def full_levi(rs: RootSystem) -> LeviDatum:
    return LeviDatum(rs, frozenset(range(len(rs.roots))), rs.torus_rank)


def levi_of(p: ParabolicSubset) -> LeviDatum:
    """Symmetric part of a parabolic subset, with its split-center dim."""
    rs = p.system
    sym = frozenset(i for i in p.members if rs.negation[i] in p.members)
    vectors = [rs.roots[i] for i in sorted(sym)]
    return LeviDatum(rs, sym, rs.group_dim - linalg.rank(vectors))


def dim_unipotent_radical(p: ParabolicSubset) -> int:
    rs = p.system
    return sum(1 for i in p.members if rs.negation[i] not in p.members)


def _apply_perm(mask: int, perm: Sequence[int]) -> int:
    img = 0
    while mask:
        low = mask & -mask
        img |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return img


def enumerate_parabolic_subsets(rs: RootSystem) -> list[ParabolicSubset]:
    """All closed subsets S with S u -S = R, as ParabolicSubset values.

    Seeds are the standard parabolic subsets (roots of a simple-root
    subset's span, together with all positive roots); closing the seed set
    under the simple-reflection permutations reaches every chamber, hence
    every parabolic subset.  The result is sorted by member index tuple.
    """
    if rs.semisimple_rank > ENUMERATION_RANK_LIMIT:
        raise ResourceLimitError(
            f"parabolic enumeration is limited to rank "
            f"{ENUMERATION_RANK_LIMIT}; got rank {rs.semisimple_rank}")
    n = len(rs.roots)
    pos_mask = 0
    for i in range(n):
        if rs.is_positive[i]:
            pos_mask |= 1 << i
    seeds = set()
    s = rs.semisimple_rank
    for subset in range(1 << s):
        chosen = [i for i in range(s) if subset >> i & 1]
        levi_mask = 0
        for i in rs.roots_in_simple_span(chosen):
            levi_mask |= 1 << i
        seeds.add(levi_mask | pos_mask)
    perms = rs.reflection_perms
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        mask = frontier.pop()
        for perm in perms:
            img = _apply_perm(mask, perm)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    out = [ParabolicSubset(rs, frozenset(i for i in range(n) if m >> i & 1))
           for m in seen]
    out.sort(key=ParabolicSubset.sort_key)
    return out


def f_sets(rs: RootSystem, m: LeviDatum) -> tuple[
        list[ParabolicSubset], list[LeviDatum],
        dict[LeviDatum, list[ParabolicSubset]]]:
    """Parabolic subsets containing m, grouped by their Levi.

    Returns (F, L, P_by_L) where F lists every parabolic subset whose
    members contain m's roots, L the distinct Levis arising as symmetric
    parts of F's elements, and P_by_L the grouping of F by Levi.  The
    groups partition F.
    """
    if m.system != rs:
        raise DomainError("levi datum belongs to a different root system")
    # Re-validate realizability; hand-built data may not be span-saturated.
    make_levi(rs, m.levi_roots)
    f_all = [p for p in enumerate_parabolic_subsets(rs)
             if m.levi_roots <= p.members]
    by_levi: dict[LeviDatum, list[ParabolicSubset]] = {}
    for p in f_all:
        by_levi.setdefault(levi_of(p), []).append(p)
    levis = sorted(by_levi, key=LeviDatum.sort_key)
    return f_all, levis, by_levi


# -- split-center subspaces -------------------------------------------------
#
# All subspace computations run in coordinates with respect to the system's
# group basis (simple roots plus torus unit vectors), with the Gram matrix
# of that basis supplying the inner product.


def _gram(rs: RootSystem) -> list[list[Fraction]]:
    b = rs.group_basis
    return [[linalg.dot(u, v) for v in b] for u in b]


def _a_space(rs: RootSystem, levi_roots: frozenset[int]) -> list[list[Fraction]]:
    """Basis (in group-basis coordinates) of the space orthogonal to the
    given Levi roots."""
    dim = rs.group_dim
    if not levi_roots:
        return [list(row) for row in linalg.identity(dim)]
    rows = []
    for i in sorted(levi_roots):
        alpha = rs.roots[i]
        rows.append([linalg.dot(bk, alpha) for bk in rs.group_basis])
    return linalg.nullspace(rows)


def _inner(u: Sequence[Fraction], v: Sequence[Fraction],
           gram: Sequence[Sequence[Fraction]]) -> Fraction:
    return linalg.dot(u, linalg.mat_vec(gram, v))


def _relative_space(outer: list[list[Fraction]], inner_sub: list[list[Fraction]],
                    gram: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Orthogonal complement of inner_sub within outer (both in group
    coordinates), returned in group coordinates."""
    if not outer:
        return []
    rows = [[_inner(m_j, w, gram) for m_j in outer] for w in inner_sub]
    if not rows:
        coeff_basis = [list(row) for row in linalg.identity(len(outer))]
    else:
        coeff_basis = linalg.nullspace(rows)
    out = []
    for y in coeff_basis:
        vec = [Fraction(0)] * len(outer[0])
        for c, m_j in zip(y, outer):
            for t, x in enumerate(m_j):
                vec[t] += c * x
        out.append(vec)
    return out


def d_nonvanishing(rs: RootSystem, m: LeviDatum, l1: LeviDatum,
                   l2: LeviDatum) -> bool:
    """Whether the two relative split-center spaces span the full relative
    space in complementary fashion.

    True iff dim of (complement of l1's center inside m's) plus the same
    for l2 equals the dim of the relative space up to the full group, and
    the two subspaces meet trivially.
    """
    for l in (l1, l2):
        if l.system != rs or m.system != rs:
            raise DomainError("mismatched root systems")
        if not m.levi_roots <= l.levi_roots:
            raise DomainError("m must be contained in both Levis")
    gram = _gram(rs)
    a_m = _a_space(rs, m.levi_roots)
    a_g = _a_space(rs, frozenset(range(len(rs.roots))))
    rel1 = _relative_space(a_m, _a_space(rs, l1.levi_roots), gram)
    rel2 = _relative_space(a_m, _a_space(rs, l2.levi_roots), gram)
    rel_g = _relative_space(a_m, a_g, gram)
    if len(rel1) + len(rel2) != len(rel_g):
        return False
    combined = rel1 + rel2
    return linalg.rank(combined) == len(combined)


def count_contributing_tuples(rs: RootSystem, m: LeviDatum,
                              s_size: int) -> int:
    """Number of s_size-tuples over the Levi lattice of m in which at most
    dim-of-relative-center entries differ from m."""
    if s_size < 1:
        raise DomainError("s_size must be a positive integer")
    if s_size > TUPLE_SIZE_LIMIT:
        raise ResourceLimitError(
            f"tuple counting is limited to s_size {TUPLE_SIZE_LIMIT}; "
            f"got {s_size}")
    d = m.a_M_dim - rs.torus_rank
    _, levis, _ = f_sets(rs, m)
    n_l = len(levis)
    return sum(math.comb(s_size, j) * (n_l - 1) ** j
               for j in range(min(s_size, d) + 1))
