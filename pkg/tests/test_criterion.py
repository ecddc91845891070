import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from sylowlab import catalog as C
from sylowlab.criterion import (REPORT_SCHEMA, TheoremViolation, check_conjecture_1_2,
                                check_theorem_1_1, check_theorem_1_3, evaluate,
                                replay_contradictions, scan_corpus, vp_profile)
from sylowlab.gstruct import is_solvable
from sylowlab.permcore import GeneratedGroup

from conftest import group


def triples(profile):
    return {(e.p, e.a, e.v_p, e.normalizer_order) for e in profile.entries}


def test_vp_profile_examples():
    assert triples(vp_profile(C.alternating(5).group)) == {(2, 2, 5, 12), (3, 1, 10, 6), (5, 1, 6, 10)}
    assert triples(vp_profile(C.cyclic(15).group)) == {(3, 1, 1, 15), (5, 1, 1, 15)}
    assert triples(vp_profile(C.symmetric(4).group)) == {(2, 3, 3, 8), (3, 1, 4, 6)}
    prof = vp_profile(C.psl2(8).group)
    prod = 1
    for p, a in prof.factorization:
        prod *= p ** a
    assert prod == prof.order


def test_theorem_1_1_examples():
    v = check_theorem_1_1(C.symmetric(4).group)
    assert v.hypothesis_satisfied and v.actual_solvable and v.consistent
    assert v.predicted_solvable is True
    v = check_theorem_1_1(C.alternating(5).group)
    assert not v.hypothesis_satisfied and v.consistent and v.predicted_solvable is None
    v = check_theorem_1_1(C.cyclic(7).group)
    assert v.hypothesis_satisfied and v.actual_solvable


def test_theorem_1_3_examples():
    v = check_theorem_1_3(C.alternating(5).group)
    assert not v.hypothesis_satisfied and v.consistent
    v = check_theorem_1_3(C.symmetric(4).group)
    assert v.hypothesis_satisfied and v.actual_solvable and v.consistent
    v = check_theorem_1_3(C.suzuki_8().group)
    assert not v.hypothesis_satisfied


def test_conjecture_1_2_examples():
    v = check_conjecture_1_2(C.symmetric(4).group)
    assert v.hypothesis_satisfied and v.actual_solvable
    assert not check_conjecture_1_2(C.alternating(5).group).hypothesis_satisfied
    sl23 = C.sl2_vectors(3).group
    assert sl23.order() == 24
    assert vp_profile(sl23).v(3) == 4
    v = check_conjecture_1_2(sl23)
    assert v.hypothesis_satisfied and v.actual_solvable


def test_inconsistency_aborts():
    G = C.symmetric(4).group
    for check in (check_theorem_1_1, check_theorem_1_3, check_conjecture_1_2):
        with pytest.raises(TheoremViolation):
            check(G, solvable=False)


def test_sharpness_pin():
    assert vp_profile(C.alternating(5).group).v(2) == 5 == 4 + 1


def test_replay():
    rows = replay_contradictions()
    fams = {r.family for r in rows}
    assert fams == {f.key for f in C.minimal_simple_list()}
    by_group = {r.group: r for r in rows}
    a5 = by_group["A5"]
    assert a5.values[2] == 5 and 2 in a5.values and a5.thm13_violations == [3]
    assert 3 in by_group["PSL(2,27)"].thm13_violations
    assert by_group["PSL(2,27)"].values[3] == 28
    assert by_group["Sz(8)"].values[5] == 1456
    assert 5 in by_group["Sz(8)"].thm13_violations
    for r in rows:
        assert r.thm11_violated and r.thm13_violations
    assert {r.group for r in rows if r.source == "formula"} >= {"Sz(32)", "Sz(128)"}


def test_scan_empty():
    assert scan_corpus([]) == []


def test_scan_corpus_consistent(corpus):
    rows = scan_corpus(corpus)
    assert len(rows) == len(corpus) >= 30
    for row in rows:
        for crit, v in row.verdicts.items():
            assert v.consistent
        if row.verdicts["conj12"].hypothesis_satisfied:
            assert row.verdicts["thm13"].hypothesis_satisfied
        jsonschema.validate(row.as_dict(), REPORT_SCHEMA)


def test_odd_order_subcorpus(corpus):
    odd = [(n, G) for n, G in corpus if G.order() % 2 == 1]
    for row in scan_corpus(odd):
        assert row.verdicts["thm13"].actual_solvable


def test_two_groups_vacuous(corpus):
    two_groups = [(n, G) for n, G in corpus
                  if G.order() > 1 and G.order() & (G.order() - 1) == 0]
    assert len(two_groups) >= 5
    for row in scan_corpus(two_groups):
        v = row.verdicts["thm13"]
        assert v.hypothesis_satisfied and v.actual_solvable
        assert not row.profile.odd_entries()


def random_groups():
    return st.integers(3, 7).flatmap(
        lambda n: st.lists(st.permutations(range(n)).map(tuple), min_size=1, max_size=2)
    ).map(lambda gens: GeneratedGroup(len(gens[0]), gens))


@settings(max_examples=30, deadline=None)
@given(random_groups())
def test_soundness_sentinel_random(G):
    row = evaluate(G, "random")
    solvable = is_solvable(G)
    if row.verdicts["thm13"].hypothesis_satisfied or row.verdicts["thm11"].hypothesis_satisfied:
        assert solvable
    if row.verdicts["conj12"].hypothesis_satisfied:
        assert row.verdicts["thm13"].hypothesis_satisfied


def test_direct_products():
    # A5 x C7: v2 = 5, v3 = 10, v7 = 1
    prof = vp_profile(C.direct_product([C.alternating(5), C.cyclic(7)]).group)
    assert (prof.v(2), prof.v(3), prof.v(5), prof.v(7)) == (5, 10, 6, 1)
    row = evaluate(group(6, "(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"), "S3xS3")
    assert row.profile.v(3) == 1 and row.profile.v(2) == 9
    assert not row.verdicts["thm11"].hypothesis_satisfied
    assert row.verdicts["thm13"].hypothesis_satisfied
