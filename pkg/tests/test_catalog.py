import pytest

from sylowlab import catalog as C
from sylowlab.permcore import load_group, orbit
from sylowlab.sylow import count_sylow


def test_alternating_symmetric():
    assert C.alternating(5).group.order() == 60
    assert C.symmetric(3).group.order() == 6
    assert C.alternating(2).group.order() == 1
    for n in range(2, 8):
        assert C.alternating(n).verify() and C.symmetric(n).verify()
    with pytest.raises(C.CatalogError):
        C.alternating(13)
    with pytest.raises(C.CatalogError):
        C.symmetric(1)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32])
def test_psl2_order_and_two_transitive(q):
    e = C.psl2(q)
    G = e.group
    assert G.degree == q + 1
    assert e.verify()
    pts, _ = orbit(G, 0)
    assert len(pts) == q + 1
    # point stabilizer is transitive on the remaining q points
    assert G.order() // (q + 1) % q == 0
    stab = G.chain.levels[1]
    assert len(stab.orbit) == q


def test_psl2_examples():
    assert (C.psl2(8).group.degree, C.psl2(8).group.order()) == (9, 8 * 63)
    assert C.psl2(27).group.order() == 27 * 728 // 2 == 9828
    assert C.psl2(7).group.order() == 7 * 48 // 2 == 168
    with pytest.raises(C.CatalogError):
        C.psl2(6)
    with pytest.raises(C.CatalogError):
        C.psl2(49)


def test_psl3_3():
    e = C.psl3_3()
    # |SL(3,3)| = (27-1)(27-3)(27-9) / (3-1), trivial center
    assert e.group.order() == 26 * 24 * 18 // 2 == 5616
    assert e.group.degree == (27 - 1) // (3 - 1) == 13
    assert len(orbit(e.group, 0)[0]) == 13


def test_suzuki_8():
    e = C.suzuki_8()
    assert e.group.order() == 7 * 64 * 65 == 29120
    assert e.group.degree == 65
    assert len(orbit(e.group, 0)[0]) == 65


def test_small_families():
    assert (C.dihedral(10).group.order(), C.dihedral(10).group.degree) == (10, 5)
    assert C.cyclic(7).group.order() == 7
    dp = C.direct_product([C.alternating(5), C.cyclic(7)])
    assert (dp.group.order(), dp.group.degree) == (420, 12)
    for m in (2, 4, 6, 8, 12, 16):
        assert C.dihedral(m).verify()
    with pytest.raises(C.CatalogError):
        C.dihedral(7)
    assert C.sl2_vectors(3).group.order() == 24
    assert C.affine(7, 3).group.order() == 21


def test_formula_v2_psl2_even():
    assert C.formula_v2_psl2_even(3) == 9
    assert C.formula_v2_psl2_even(5) == 33
    assert count_sylow(C.psl2(8).group, 2).v_p == 9
    with pytest.raises(C.CatalogError):
        C.formula_v2_psl2_even(2)


def test_formula_v2_psl2_odd():
    assert set(C.formula_v2_psl2_odd(27).candidates) == {728, 819}
    assert set(C.formula_v2_psl2_odd(7).candidates) == {48, 14}
    assert count_sylow(C.psl2(27).group, 2).v_p == 819


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31])
def test_v2_psl2_odd_exact(q):
    assert C.v2_psl2_odd_exact(q) == count_sylow(C.psl2(q).group, 2).v_p


def test_formula_v3_psl2_3p():
    assert C.formula_v3_psl2_3p(3) == 28
    assert C.formula_v3_psl2_3p(5) == 244
    r = count_sylow(C.psl2(27).group, 3)
    assert r.v_p == 28
    # Borel normalizer: q(q-1) in SL, halved in PSL
    assert r.normalizer_order == 9828 // 28 == 351 == 27 * 26 // 2


def test_formula_vr_psl2_even():
    assert C.formula_vr_psl2_even(8, 7).realized == 36
    assert C.formula_vr_psl2_even(8, 3).realized == 28
    G = C.psl2(8).group
    assert count_sylow(G, 7).v_p == 36
    assert count_sylow(G, 3).v_p == 28
    assert count_sylow(G, 7).normalizer_order == 2 * (8 - 1)
    with pytest.raises(C.CatalogError):
        C.formula_vr_psl2_even(8, 5)


@pytest.mark.parametrize("q", [7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31])
def test_formula_vr_psl2_odd_matches(q):
    from sylowlab.numtheory import factorize
    G = C.psl2(q).group
    for r in factorize(q * q - 1):
        if r != 2:
            assert C.formula_vr_psl2_odd(q, r).realized == count_sylow(G, r).v_p


def test_formula_suzuki():
    f = C.formula_suzuki(8)
    assert (f.order, f.v2, f.T_order, f.v5) == (29120, 65, 20, 1456)
    f = C.formula_suzuki(32)
    assert f.order == 31 * 1024 * 1025 == 32537600 and f.v2 == 1025
    for q in (8, 32, 128, 512):
        f = C.formula_suzuki(q)
        assert f.r ** 2 == 2 * q
        assert f.order % f.T_order == 0
        assert (f.order // (4 * f.sylow5_torus_order)) == f.v5_exact
    with pytest.raises(C.CatalogError):
        C.formula_suzuki(16)
    G = C.suzuki_8().group
    assert count_sylow(G, 2).v_p == 65
    assert count_sylow(G, 5).v_p == 1456


def test_formula_computation_agreement():
    assert count_sylow(C.psl3_3().group, 2).v_p == 351
    assert count_sylow(C.psl3_3().group, 3).v_p == 52


def test_minimal_simple_list():
    fams = C.minimal_simple_list()
    keys = [f.key for f in fams]
    assert keys == ["A5", "L2(2^p)", "L2(3^p)", "L2(p)", "L3(3)", "Sz(q)"]
    lp = fams[3]
    assert lp.admits(7) and lp.admits(17) and not lp.admits(13) and not lp.admits(2)
    sz = fams[5]
    assert sz.admits(8) and sz.admits(32) and not sz.admits(16) and not sz.admits(2)
    for f in fams:
        assert all(f.admits(x) for x in f.parameters)


def test_export_roundtrip(tmp_path):
    e = C.psl2(8)
    path = tmp_path / "psl2_8.grp"
    e.export(path)
    G = load_group(path)
    assert G.order() == 504 and G.generators == e.group.generators


def test_build_and_formula_row():
    assert C.build("psl2", q=7).name == "PSL(2,7)"
    with pytest.raises(C.CatalogError):
        C.build("ree", q=27)
    with pytest.raises(C.CatalogError):
        C.build("psl2")
    row = C.formula_row("suzuki", q=8)
    assert (row["order"], row["v2"], row["v5"]) == (29120, 65, 1456)
    row = C.formula_row("psl2", q=27)
    assert row["v"] == {"2": 819, "3": 28, "7": 351, "13": 378}
