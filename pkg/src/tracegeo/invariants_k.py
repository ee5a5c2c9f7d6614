"""The unipotent decay invariant of a reductive group, three ways.

The invariant is half the minimal dimension of a nontrivial induced
unipotent orbit.  It can be computed by enumerating (Levi, orbit) pairs,
by minimizing unipotent-radical dimensions (valid when the minimal orbit
is a Richardson orbit), or directly from the minimal-orbit dimension
2(h_dual - 1) per simple factor.  Restriction of scalars from a degree-n
field multiplies every orbit dimension, hence the invariant, by n.

Groups whose rational structure differs from the split one (rational rank
smaller than absolute rank) carry an optional relative datum: a list of
relative roots with the dimension each contributes to a minimal-parabolic
nilradical.  The Richardson route then runs on that datum instead, and
report-style consumers can compare it against the absolute answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import linalg
from .errors import DomainError, ResourceLimitError
from .nilpotent_orbits import list_orbits, min_orbit_dim, orbit_dim
from .root_datum import RootSystem, SimpleType, build_root_system

PAIR_RANK_LIMIT = 8
RELATIVE_ENTRY_LIMIT = 12


@dataclass(frozen=True)
class RelativeDatum:
    """Rational root data: root vectors with nilradical contributions.

    Each entry is one positive relative root together with the dimension
    of the nilradical slice it accounts for (the root space plus any
    multiples).  For a rational-rank-one group this is a single vector and
    the full minimal-parabolic nilradical dimension.
    """

    roots: tuple[tuple[int, ...], ...]
    contributions: tuple[int, ...]

    def __post_init__(self):
        if not self.roots:
            raise DomainError("relative datum needs at least one root")
        if len(self.roots) != len(self.contributions):
            raise DomainError("relative roots and contributions must have "
                              "matching lengths")
        width = len(self.roots[0])
        for r in self.roots:
            if len(r) != width or all(x == 0 for x in r):
                raise DomainError("relative roots must be nonzero vectors "
                                  "of equal length")
        for c in self.contributions:
            if not isinstance(c, int) or c < 1:
                raise DomainError("nilradical contributions must be "
                                  "positive integers")

    @property
    def rank(self) -> int:
        return linalg.rank([list(r) for r in self.roots])


@dataclass(frozen=True)
class GroupSpec:
    absolute: RootSystem
    restriction_degree: int = 1
    relative: RelativeDatum | None = None

    def __post_init__(self):
        if not isinstance(self.restriction_degree, int) or self.restriction_degree < 1:
            raise DomainError("restriction degree must be a positive integer")
        if self.relative is not None:
            if self.relative.rank > self.absolute.semisimple_rank:
                raise DomainError("relative rank exceeds absolute rank")

    @classmethod
    def build(cls, factors: Sequence[SimpleType | str], torus_rank: int = 0,
              restriction_degree: int = 1,
              relative: RelativeDatum | None = None) -> "GroupSpec":
        return cls(build_root_system(factors, torus_rank),
                   restriction_degree, relative)


# -- component recognition ----------------------------------------------------


def _expected_signature(t: SimpleType) -> tuple[int, int]:
    """(root count, short-root count) for a simple type, where short means
    strictly shorter than the longest root; rank-1 systems have none."""
    r = t.rank
    counts = {"A": r * (r + 1), "B": 2 * r * r, "C": 2 * r * r,
              "D": 2 * r * (r - 1), "G": 12, "F": 48,
              "E": {6: 72, 7: 126, 8: 240}.get(r, 0)}[t.series]
    if r == 1:
        shorts = 0
    else:
        shorts = {"A": 0, "B": 2 * r, "C": 2 * r * (r - 1), "D": 0,
                  "G": 6, "F": 24, "E": 0}[t.series]
    return counts, shorts


@lru_cache(maxsize=None)
def _signature_table(rank: int) -> dict[tuple[int, int], SimpleType]:
    table: dict[tuple[int, int], SimpleType] = {}
    for series in "ABCDEFG":
        try:
            t = SimpleType(series, rank)
        except DomainError:
            continue
        # Colliding signatures (B2/C2, A3/D3) are isomorphic algebras with
        # identical orbit dimension sets, so either representative works.
        table.setdefault(_expected_signature(t), t)
    return table


def _recognize_component(rs: RootSystem, simple_subset: list[int]) -> SimpleType:
    member_idx = rs.roots_in_simple_span(simple_subset)
    rank = len(simple_subset)
    norms = [linalg.dot(rs.roots[i], rs.roots[i]) for i in member_idx]
    top = max(norms)
    shorts = sum(1 for x in norms if x < top)
    t = _signature_table(rank).get((len(member_idx), shorts))
    if t is None:
        raise AssertionError(
            f"unrecognized component signature ({rank}, {len(member_idx)}, "
            f"{shorts})")
    return t


def _components(rs: RootSystem, simple_subset: list[int]) -> list[list[int]]:
    remaining = set(simple_subset)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in list(remaining):
                if linalg.dot(rs.simple_roots[i], rs.simple_roots[j]) != 0:
                    remaining.remove(j)
                    comp.add(j)
                    frontier.append(j)
        comps.append(sorted(comp))
    return comps


@lru_cache(maxsize=None)
def _classical_dim_set(series: str, rank: int) -> tuple[int, ...]:
    t = SimpleType(series, rank)
    return tuple(sorted({orbit_dim(lab) for lab in list_orbits(t)}))


def _component_dim_set(rs: RootSystem, comp: list[int]) -> tuple[int, ...]:
    t = _recognize_component(rs, comp)
    if t.series in "ABCD":
        return _classical_dim_set(t.series, t.rank)
    return (0,)  # exceptional Levi factors: trivial orbit only


# -- the three computations ----------------------------------------------------


def k_by_pairs(g: GroupSpec) -> int:
    """Enumerate (standard Levi, orbit) pairs and halve the minimal induced
    dimension, excluding the trivial pair.

    Orbit labels in exceptional Levi factors are restricted to the trivial
    orbit; the minimal orbits of the group's own factors are added as
    candidates, which covers everything a nontrivial exceptional-factor
    orbit could contribute.
    """
    rs = g.absolute
    s = rs.semisimple_rank
    if s == 0:
        raise DomainError("no nontrivial unipotent orbits in a torus")
    if s > PAIR_RANK_LIMIT:
        raise ResourceLimitError(
            f"pair enumeration is limited to rank {PAIR_RANK_LIMIT}; "
            f"got rank {s}")
    n_roots = len(rs.roots)
    best: int | None = None
    for subset in range(1 << s):
        chosen = [i for i in range(s) if subset >> i & 1]
        levi_root_count = len(rs.roots_in_simple_span(chosen))
        dim_v = (n_roots - levi_root_count) // 2
        sums = {0}
        for comp in _components(rs, chosen):
            comp_dims = _component_dim_set(rs, comp)
            sums = {a + b for a in sums for b in comp_dims}
        full = subset == (1 << s) - 1
        for orbit_total in sums:
            if full and orbit_total == 0:
                continue  # the excluded trivial pair
            cand = orbit_total + 2 * dim_v
            if best is None or cand < best:
                best = cand
    for t in rs.factors:
        cand = min_orbit_dim(t)
        if cand < best:
            best = cand
    assert best is not None and best % 2 == 0 and best > 0
    return g.restriction_degree * (best // 2)


def k_min_orbit(g: GroupSpec) -> int:
    """Half the minimal nontrivial orbit dimension over the simple factors,
    scaled by the restriction degree."""
    factors = g.absolute.factors
    if not factors:
        raise DomainError("no nontrivial unipotent orbits in a torus")
    return g.restriction_degree * min(min_orbit_dim(t) // 2 for t in factors)


def _richardson_absolute(rs: RootSystem) -> int:
    s = rs.semisimple_rank
    if s == 0:
        raise DomainError("no proper parabolic subgroups in a torus")
    if s > PAIR_RANK_LIMIT:
        raise ResourceLimitError(
            f"parabolic minimization is limited to rank {PAIR_RANK_LIMIT}; "
            f"got rank {s}")
    n_roots = len(rs.roots)
    best = None
    for subset in range((1 << s) - 1):  # proper subsets only
        chosen = [i for i in range(s) if subset >> i & 1]
        dim_v = (n_roots - len(rs.roots_in_simple_span(chosen))) // 2
        if best is None or dim_v < best:
            best = dim_v
    return best


def _richardson_relative(rel: RelativeDatum) -> int:
    m = len(rel.roots)
    if m > RELATIVE_ENTRY_LIMIT:
        raise ResourceLimitError(
            f"relative data are limited to {RELATIVE_ENTRY_LIMIT} entries; "
            f"got {m}")
    vectors = [list(r) for r in rel.roots]
    full_rank = linalg.rank(vectors)
    best = None
    for subset in range(1 << m):
        chosen = [vectors[i] for i in range(m) if subset >> i & 1]
        if chosen and linalg.rank(chosen) == full_rank:
            continue  # spans everything: not a proper parabolic
        total = sum(rel.contributions[i] for i in range(m)
                    if not (chosen and linalg.in_span(vectors[i], chosen)))
        if best is None or total < best:
            best = total
    assert best is not None and best > 0
    return best


def k_richardson(g: GroupSpec, assume_richardson: bool = False) -> int:
    """Minimal unipotent-radical dimension over proper standard parabolics.

    Runs on the relative datum when one is present, else on the absolute
    root system.  This equals the decay invariant exactly when the minimal
    orbit is induced from a trivial orbit; pass assume_richardson=True to
    assert that (absolute data only), which raises when the assertion is
    false rather than returning a silently wrong invariant.
    """
    if g.relative is not None:
        if assume_richardson:
            raise DomainError(
                "assume_richardson compares against absolute invariants and "
                "cannot be combined with a relative datum")
        return g.restriction_degree * _richardson_relative(g.relative)
    value = g.restriction_degree * _richardson_absolute(g.absolute)
    if assume_richardson:
        reference = k_min_orbit(g)
        if value != reference:
            raise DomainError(
                f"minimal orbit is not Richardson here: radical minimum "
                f"{value} differs from minimal-orbit value {reference}")
    return value


def k_report(g: GroupSpec) -> dict:
    """All applicable computations side by side, with an agreement flag.

    Routes that a guard or missing datum rules out appear as None and do
    not affect agreement.
    """
    report: dict[str, int | bool | None] = {}
    report["minorbit"] = k_min_orbit(g)
    try:
        report["pairs"] = k_by_pairs(g)
    except ResourceLimitError:
        report["pairs"] = None
    try:
        report["richardson_absolute"] = g.restriction_degree * \
            _richardson_absolute(g.absolute)
    except ResourceLimitError:
        report["richardson_absolute"] = None
    if g.relative is not None:
        report["richardson_relative"] = \
            g.restriction_degree * _richardson_relative(g.relative)
    else:
        report["richardson_relative"] = None
    values = [v for v in report.values() if v is not None]
    report["agreement"] = len(set(values)) == 1
    return report
