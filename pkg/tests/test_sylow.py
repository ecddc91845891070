import pytest

from sylowlab.catalog import psl2, psl3_3
from sylowlab.numtheory import factorize, is_prime, p_part
from sylowlab.permcore import CapExceededError, GeneratedGroup
from sylowlab.sylow import (SylowReport, count_sylow, count_sylow_bruteforce,
                            sylow_elements, sylow_subgroup)

from conftest import group, subgroups_of_order


def A5():
    return group(5, "(1 2 3 4 5)", "(1 2 3)")


def S4():
    return group(4, "(1 2 3 4)", "(1 2)")


def test_p_part():
    assert p_part(60, 2) == 2
    assert p_part(60, 7) == 0
    assert p_part(7 * 64 * 65, 2) == 6
    with pytest.raises(ValueError):
        p_part(60, 4)


def test_factorize():
    assert factorize(29120) == {2: 6, 5: 1, 7: 1, 13: 1}
    assert factorize(1) == {}
    assert is_prime(13) and not is_prime(1) and not is_prime(15)


def test_sylow_subgroup_examples():
    P = sylow_subgroup(A5(), 2)
    assert P.order() == 4
    assert all(g.order() <= 2 for g in P.elements())  # Klein four
    assert sylow_subgroup(A5(), 7).order() == 1
    P3 = sylow_subgroup(group(3, "(1 2)", "(1 2 3)"), 3)
    assert {str(g) for g in P3.elements()} == {"()", "(1 2 3)", "(1 3 2)"}


def test_count_sylow_examples():
    assert count_sylow(A5(), 2).v_p == 5
    assert count_sylow(A5(), 3).v_p == 10
    r = count_sylow(group(3, "(1 2)", "(1 2 3)"), 3)
    assert (r.v_p, r.normalizer_order) == (1, 6)
    r = count_sylow(A5(), 7)
    assert (r.a, r.v_p, r.normalizer_order) == (0, 1, 60)


def test_psl33_counts():
    G = psl3_3().group
    assert count_sylow(G, 2).v_p == 351
    assert count_sylow(G, 3).v_p == 52


@pytest.mark.parametrize("G,p,expected", [
    (S4(), 2, 3), (S4(), 3, 4), (A5(), 5, 6), (A5(), 2, 5), (A5(), 3, 10),
])
def test_bruteforce_oracle_vs_enumeration(G, p, expected):
    a = p_part(G.order(), p)
    direct = subgroups_of_order(G, p ** a)
    assert len(direct) == expected
    assert count_sylow_bruteforce(G, p) == expected
    assert count_sylow(G, p).v_p == expected


def test_bruteforce_limit():
    with pytest.raises(CapExceededError):
        count_sylow_bruteforce(psl2(27).group, 3)


def test_orbit_cap():
    with pytest.raises(CapExceededError):
        count_sylow(psl3_3().group, 2, orbit_cap=100)


def test_report_invariants(corpus):
    for name, G in corpus:
        n = G.order()
        for p, a in factorize(n).items():
            r = count_sylow(G, p)
            assert isinstance(r, SylowReport)
            assert r.a == a
            assert r.subgroup.order() == p ** a, (name, p)
            assert r.v_p % p == 1
            assert (n // p ** a) % r.v_p == 0
            assert r.v_p * r.normalizer_order == n


def test_seed_independence():
    for G in (S4(), A5(), psl2(8).group, psl2(13).group):
        for p in factorize(G.order()):
            counts = {count_sylow(G, p, seed=s).v_p for s in range(10)}
            assert len(counts) == 1


def test_sylow_elements_closed():
    G = psl2(8).group
    gens, elems = sylow_elements(G, 2, seed=3)
    assert len(elems) == 8
    for x in elems:
        for y in elems:
            assert tuple(y[i] for i in x) in elems


def test_trivial_group():
    T = GeneratedGroup.trivial(2)
    assert count_sylow(T, 2).v_p == 1
