import itertools

import pytest

from tracegeo import oracles
from tracegeo.errors import DomainError, ResourceLimitError
from tracegeo.parabolic_lattice import (count_contributing_tuples,
                                        d_nonvanishing,
                                        dim_unipotent_radical,
                                        enumerate_parabolic_subsets, f_sets,
                                        full_levi, levi_of, make_levi,
                                        minimal_levi)
from tracegeo.root_datum import build_root_system

# Counts for systems small enough to cross-check by scanning every root
# subset; the larger two are frozen from the same scan run once offline.
BRUTE_CHECKED = {"A1": 3, "A2": 13, "B2": 17, "A3": 75}
FROZEN = {"B3": 147, "A5": 4683}


def test_counts_against_brute_force():
    for name, count in BRUTE_CHECKED.items():
        rs = build_root_system([name])
        got = len(enumerate_parabolic_subsets(rs))
        assert got == oracles.brute_force_parabolic_count(rs) == count, name
    rs = build_root_system(["A1", "A1"])
    got = len(enumerate_parabolic_subsets(rs))
    assert got == oracles.brute_force_parabolic_count(rs) == 9


def test_counts_frozen():
    for name, count in FROZEN.items():
        rs = build_root_system([name])
        assert len(enumerate_parabolic_subsets(rs)) == count, name


def test_parabolic_subsets_are_parabolic():
    for name in ("A2", "B2", "A3"):
        rs = build_root_system([name])
        neg = rs.negation
        add = rs.addition_table
        for p in enumerate_parabolic_subsets(rs):
            s = p.members
            # S u -S covers all roots
            assert all(i in s or neg[i] in s for i in range(len(rs.roots)))
            # closed under addition
            for i, j in itertools.combinations(sorted(s), 2):
                k = add[i][j]
                assert k < 0 or k in s


def test_enumeration_guard():
    rs = build_root_system(["A7"])
    with pytest.raises(ResourceLimitError):
        enumerate_parabolic_subsets(rs)


def test_levi_dimensions_a2():
    rs = build_root_system(["A2"])
    m0 = minimal_levi(rs)
    assert m0.a_M_dim == 2
    g = full_levi(rs)
    assert g.a_M_dim == 0
    # a Levi generated by one root pair
    alpha_idx = rs.root_index[rs.simple_roots[0]]
    neg_idx = rs.negation[alpha_idx]
    l = make_levi(rs, [alpha_idx, neg_idx])
    assert l.a_M_dim == 1


def test_levi_dimensions_with_torus():
    rs = build_root_system(["A1"], torus_rank=2)
    assert minimal_levi(rs).a_M_dim == 3
    assert full_levi(rs).a_M_dim == 2


def test_make_levi_closure():
    rs = build_root_system(["A2"])
    alpha_idx = rs.root_index[rs.simple_roots[0]]
    beta_idx = rs.root_index[rs.simple_roots[1]]
    # non-symmetric input is rejected outright
    with pytest.raises(DomainError):
        make_levi(rs, [alpha_idx])
    # {±a, ±b} spans ±(a+b) without containing it: not saturated, rejected
    with pytest.raises(DomainError):
        make_levi(rs, [alpha_idx, rs.negation[alpha_idx],
                       beta_idx, rs.negation[beta_idx]])
    l = make_levi(rs, range(len(rs.roots)))
    assert len(l.levi_roots) == 6
    assert l.a_M_dim == 0


def test_f_sets_partition_and_sizes():
    rs = build_root_system(["A2"])
    m0 = minimal_levi(rs)
    f, levis, by_levi = f_sets(rs, m0)
    assert len(f) == 13
    assert len(levis) == 5
    sizes = sorted(len(v) for v in by_levi.values())
    assert sizes == [1, 2, 2, 2, 6]
    assert sum(sizes) == len(f)
    for levi, members in by_levi.items():
        for p in members:
            assert levi_of(p).levi_roots == levi.levi_roots


def test_f_sets_at_intermediate_levi():
    rs = build_root_system(["A2"])
    alpha_idx = rs.root_index[rs.simple_roots[0]]
    l = make_levi(rs, [alpha_idx, rs.negation[alpha_idx]])
    f, levis, by_levi = f_sets(rs, l)
    # parabolics containing this Levi: itself as Levi of two, plus G
    assert len(f) == 3
    assert len(levis) == 2


def test_dim_unipotent_radical():
    rs = build_root_system(["A2"])
    for p in enumerate_parabolic_subsets(rs):
        levi = levi_of(p)
        assert dim_unipotent_radical(p) == (len(p.members)
                                            - len(levi.levi_roots))
        assert 2 * dim_unipotent_radical(p) == (len(rs.roots)
                                                - len(levi.levi_roots))


def test_d_nonvanishing_cases():
    rs = build_root_system(["A2"])
    m0 = minimal_levi(rs)
    g = full_levi(rs)
    idx_a = rs.root_index[rs.simple_roots[0]]
    idx_b = rs.root_index[rs.simple_roots[1]]
    l_a = make_levi(rs, [idx_a, rs.negation[idx_a]])
    l_b = make_levi(rs, [idx_b, rs.negation[idx_b]])
    assert d_nonvanishing(rs, m0, m0, g)
    assert d_nonvanishing(rs, m0, g, m0)
    assert d_nonvanishing(rs, m0, l_a, l_b)
    assert not d_nonvanishing(rs, m0, g, g)
    assert not d_nonvanishing(rs, m0, l_a, l_a)
    assert not d_nonvanishing(rs, m0, m0, l_a)
    assert d_nonvanishing(rs, l_a, l_a, g)


def test_d_nonvanishing_requires_containment():
    rs = build_root_system(["A2"])
    idx_a = rs.root_index[rs.simple_roots[0]]
    idx_b = rs.root_index[rs.simple_roots[1]]
    l_a = make_levi(rs, [idx_a, rs.negation[idx_a]])
    l_b = make_levi(rs, [idx_b, rs.negation[idx_b]])
    with pytest.raises(DomainError):
        d_nonvanishing(rs, l_a, l_b, full_levi(rs))


def test_count_contributing_tuples_values():
    rs = build_root_system(["A2"])
    m0 = minimal_levi(rs)
    assert count_contributing_tuples(rs, m0, 1) == 5
    assert count_contributing_tuples(rs, m0, 2) == 25


def test_count_contributing_tuples_brute_force():
    # The count is the number of tuples over L(M) whose non-maximal
    # entries number at most dim a_M^G.
    for name in ("A2", "A3"):
        rs = build_root_system([name])
        m0 = minimal_levi(rs)
        _, levis, _ = f_sets(rs, m0)
        g_key = full_levi(rs).sort_key()
        d = m0.a_M_dim - rs.torus_rank
        for s in (1, 2, 3):
            brute = sum(
                1 for tup in itertools.product(levis, repeat=s)
                if sum(1 for l in tup if l.sort_key() != g_key) <= d)
            assert count_contributing_tuples(rs, m0, s) == brute, (name, s)


def test_count_contributing_tuples_guards():
    rs = build_root_system(["A2"])
    m0 = minimal_levi(rs)
    with pytest.raises(DomainError):
        count_contributing_tuples(rs, m0, 0)
    with pytest.raises(ResourceLimitError):
        count_contributing_tuples(rs, m0, 9)


def test_system_mismatch_rejected():
    rs1 = build_root_system(["A2"])
    rs2 = build_root_system(["B2"])
    with pytest.raises(DomainError):
        f_sets(rs2, minimal_levi(rs1))
