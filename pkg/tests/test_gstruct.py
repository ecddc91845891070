import pytest

from sylowlab.catalog import psl2, psl3_3, suzuki_8
from sylowlab.gstruct import (NotInGroupError, derived_series, derived_subgroup,
                              is_abelian, is_nilpotent, is_normal, is_solvable,
                              normal_closure)
from sylowlab.permcore import GeneratedGroup, bfs_elements, parse_cycles

from conftest import closure, group


def S3():
    return group(3, "(1 2)", "(1 2 3)")


def A5():
    return group(5, "(1 2 3 4 5)", "(1 2 3)")


def brute_derived_order(G):
    """|G'| from every commutator of every pair of elements (oracle)."""
    els = bfs_elements(G)
    n = G.degree

    def comp(a, b):
        return tuple(b[i] for i in a)

    def inv(a):
        out = [0] * n
        for i, j in enumerate(a):
            out[j] = i
        return tuple(out)

    comms = {comp(comp(inv(a), inv(b)), comp(a, b)) for a in els for b in els}
    return len(closure(list(comms), n))


def test_derived_subgroup_examples():
    assert derived_subgroup(S3()).order() == 3
    assert derived_subgroup(A5()).order() == 60
    assert derived_subgroup(group(4, "(1 2)", "(3 4)")).order() == 1


def test_derived_subgroup_matches_oracle(small_corpus):
    for name, G in small_corpus:
        if G.order() <= 360:
            assert derived_subgroup(G).order() == brute_derived_order(G), name


def test_normal_closure():
    s3 = S3()
    assert normal_closure(s3, [parse_cycles("(1 2 3)", 3)]).order() == 3
    assert normal_closure(s3, [parse_cycles("()", 3)]).order() == 1
    assert normal_closure(A5(), [parse_cycles("(1 2)(3 4)", 5)]).order() == 60
    with pytest.raises(NotInGroupError):
        normal_closure(A5(), [parse_cycles("(1 2)", 5)])


def test_is_solvable_examples():
    s4 = group(4, "(1 2 3 4)", "(1 2)")
    series = derived_series(s4)
    assert series.orders == [24, 12, 4, 1]
    assert series.solvable and is_solvable(s4)
    series = derived_series(A5())
    assert series.orders == [60, 60] and not series.solvable
    assert is_solvable(GeneratedGroup.trivial(3))


def test_series_properties(corpus):
    import math
    for name, G in corpus:
        series = derived_series(G)
        orders = series.orders
        for prev, cur in zip(series.terms, series.terms[1:]):
            assert prev.order() % cur.order() == 0
            assert all(prev.contains(g) for g in cur.generators)
        strict = orders if series.solvable else orders[:-1]
        assert all(a > b for a, b in zip(strict, strict[1:])), name
        if series.solvable and G.order() > 1:
            assert len(orders) - 1 <= math.log2(G.order())


def test_derived_subgroup_normal(corpus):
    for name, G in corpus:
        D = derived_subgroup(G)
        assert is_normal(G, D), name


def test_is_normal_examples():
    s3 = S3()
    a3 = group(3, "(1 2 3)")
    assert is_normal(s3, a3)
    assert not is_normal(s3, group(3, "(1 2)"))
    assert is_normal(s3, s3)
    with pytest.raises(NotInGroupError):
        is_normal(a3, s3)


def test_is_nilpotent_examples():
    assert is_nilpotent(group(4, "(1 2 3 4)", "(1 3)"))
    assert not is_nilpotent(S3())
    assert is_nilpotent(group(6, "(1 2 3 4 5 6)"))
    # S3 has exactly three subgroups of order 2
    involutions = [g for g in bfs_elements(S3()) if sum(i != j for i, j in enumerate(g)) == 2]
    assert len(involutions) == 3


def lower_central_trivial(G):
    """Nilpotency via the lower central series (independent of Sylow counts)."""
    from sylowlab import kernels as K
    term = G
    for _ in range(G.order().bit_length() + 1):
        if term.order() == 1:
            return True
        comms = []
        for x in term._gens:
            for g in G._gens:
                comms.append(K.compose(K.compose(K.invert(x), K.invert(g)), K.compose(x, g)))
        nxt = normal_closure(G, comms)
        if nxt.order() == term.order():
            return False
        term = nxt
    return term.order() == 1


def test_nilpotent_both_directions(corpus):
    nilpotent_seen = 0
    for name, G in corpus:
        nil = is_nilpotent(G)
        assert nil == lower_central_trivial(G), name
        if nil:
            nilpotent_seen += 1
            assert is_solvable(G)
    assert nilpotent_seen >= 5


def test_odd_order_solvable(corpus):
    odd = [(n, G) for n, G in corpus if G.order() % 2]
    assert len(odd) >= 5
    assert all(is_solvable(G) for _, G in odd)


@pytest.mark.parametrize("make", [lambda: psl2(7), lambda: psl2(8), lambda: psl2(9),
                                  lambda: psl2(11), lambda: psl2(13), lambda: psl2(27),
                                  psl3_3, suzuki_8], ids=["7", "8", "9", "11", "13", "27", "L33", "Sz8"])
def test_simple_entries_perfect(make):
    G = make().group
    assert derived_subgroup(G).order() == G.order()
    assert not is_solvable(G)


def test_is_abelian():
    assert is_abelian(group(4, "(1 2)", "(3 4)"))
    assert not is_abelian(S3())
