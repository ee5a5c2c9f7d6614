import pytest

from tracegeo.errors import DomainError, ResourceLimitError
from tracegeo.nilpotent_orbits import (GLType, OrbitLabel, induced_dim,
                                       list_orbits, min_orbit_dim,
                                       minimal_orbit, orbit_dim,
                                       trivial_orbit)
from tracegeo.root_datum import SimpleType, dual_coxeter_number


def centralizer_dim_gl(partition):
    # dim of the centralizer of a nilpotent with Jordan type lambda in
    # gl(n) is sum (2i-1) lambda_i for lambda sorted decreasingly
    return sum((2 * i - 1) * part for i, part in enumerate(partition, 1))


def partition_count(n):
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def test_gl_orbit_count_is_partition_count():
    for n in range(1, 11):
        assert len(list_orbits(GLType(n))) == partition_count(n)


def test_gl_dims_against_centralizer_formula():
    for n in range(1, 9):
        for lab in list_orbits(GLType(n)):
            want = n * n - centralizer_dim_gl(lab.partition)
            assert orbit_dim(lab) == want, lab


def test_gl_extremes():
    for n in range(2, 9):
        dims = sorted(orbit_dim(lab) for lab in list_orbits(GLType(n)))
        assert dims[0] == 0
        assert dims[1] == 2 * n - 2
        assert dims[-1] == n * n - n


def test_type_a_matches_gl():
    for l in range(1, 8):
        a_dims = sorted(orbit_dim(lab)
                        for lab in list_orbits(SimpleType("A", l)))
        gl_dims = sorted(orbit_dim(lab)
                         for lab in list_orbits(GLType(l + 1)))
        assert a_dims == gl_dims


def test_classical_regular_orbits():
    # the regular orbit has dimension dim(g) - rank
    for l in range(2, 8):
        b = max(orbit_dim(lab) for lab in list_orbits(SimpleType("B", l)))
        assert b == (2 * l + 1) * l - l
        c = max(orbit_dim(lab) for lab in list_orbits(SimpleType("C", l)))
        assert c == 2 * l * l
        d = max(orbit_dim(lab) for lab in list_orbits(SimpleType("D", l)))
        assert d == l * (2 * l - 1) - l


def test_classical_minimal_orbits():
    for series, lo in (("B", 1), ("C", 1), ("D", 2)):
        for l in range(lo, 9):
            t = SimpleType(series, l)
            nontrivial = sorted(d for d in
                                (orbit_dim(lab) for lab in list_orbits(t))
                                if d > 0)
            assert nontrivial[0] == 2 * (dual_coxeter_number(t) - 1)
            assert nontrivial[0] == min_orbit_dim(t)


def test_min_orbit_dim_exceptional():
    assert min_orbit_dim(SimpleType("G", 2)) == 6
    assert min_orbit_dim(SimpleType("F", 4)) == 16
    assert min_orbit_dim(SimpleType("E", 6)) == 22
    assert min_orbit_dim(SimpleType("E", 7)) == 34
    assert min_orbit_dim(SimpleType("E", 8)) == 58


def test_parity_constraints():
    # B: even parts need even multiplicity
    with pytest.raises(DomainError):
        OrbitLabel(SimpleType("B", 2), "partition", (4, 1))
    OrbitLabel(SimpleType("B", 2), "partition", (2, 2, 1))
    # C: odd parts need even multiplicity
    with pytest.raises(DomainError):
        OrbitLabel(SimpleType("C", 2), "partition", (3, 1))
    OrbitLabel(SimpleType("C", 2), "partition", (1, 1, 1, 1))
    # D: even parts need even multiplicity
    with pytest.raises(DomainError):
        OrbitLabel(SimpleType("D", 3), "partition", (4, 2))
    OrbitLabel(SimpleType("D", 3), "partition", (3, 3))
    # size must match the type
    with pytest.raises(DomainError):
        OrbitLabel(SimpleType("B", 2), "partition", (3, 3))
    with pytest.raises(DomainError):
        OrbitLabel(GLType(3), "partition", (2, 2))


def test_very_even_flag():
    labels = list_orbits(SimpleType("D", 4))
    very_even = [lab for lab in labels if lab.very_even]
    assert sorted(str(lab) for lab in very_even) == ["(2,2,2,2)*", "(4,4)*"]
    # flagged once, not listed twice
    assert len([lab for lab in labels
                if lab.partition == (4, 4)]) == 1


def test_label_str():
    lab = OrbitLabel(GLType(4), "partition", (2, 1, 1))
    assert str(lab) == "(2,1,1)"


def test_trivial_and_minimal_helpers():
    t = SimpleType("C", 3)
    assert orbit_dim(trivial_orbit(t)) == 0
    assert orbit_dim(minimal_orbit(t)) == min_orbit_dim(t)
    assert orbit_dim(trivial_orbit(GLType(5))) == 0


def test_induced_dim():
    assert induced_dim(0, 3) == 6
    assert induced_dim(4, 1) == 6
    with pytest.raises(DomainError):
        induced_dim(-2, 1)
    with pytest.raises(DomainError):
        induced_dim(1, 1)  # orbit dimensions are even


def test_exceptional_enumeration_refused():
    with pytest.raises(DomainError):
        list_orbits(SimpleType("G", 2))
    with pytest.raises(DomainError):
        list_orbits(SimpleType("E", 8))


def test_rank_guard():
    with pytest.raises(ResourceLimitError):
        list_orbits(SimpleType("B", 21))
    with pytest.raises(ResourceLimitError):
        list_orbits(GLType(22))
