import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylkit.category import (codiscrete, enumerate_functors, free_category, nerve, nerve_functor,
                             ordinal, poset_category)
from cylkit.classify import (PreconditionError, check_inn2triv, check_paraequiv,
                             classify_fibration, fun_over, fibrewise_isofibration, hom_space,
                             is_contractible_kan, is_isofibration, is_quasicategory,
                             kan_equivalence, qcat_equivalence)
from cylkit.corpus import CountedRandom, random_category, random_nerve_map
from cylkit.homotopy import HomotopyError, ho_functor, homotopy_category
from cylkit.maps import SimplicialMap, identity_map, to_point
from cylkit.sset import Simplex
from cylkit.standard import J_truncated, boundary_inclusion, horn, simplex, simplex_map
from cylkit.verdict import NO, YES_BOUNDED, YES_CERTIFIED


def _nerve_id(C):
    N = nerve(C)
    return nerve_functor({o: o for o in C.objects}, {m: m for m in C.morphisms()}, C, C, N, N)


def test_classify_kinds_on_simplices():
    assert classify_fibration(to_point(simplex(2)), "inner").status == YES_CERTIFIED
    assert classify_fibration(to_point(simplex(1)), "left").status == NO
    assert classify_fibration(to_point(simplex(1)), "kan").status == NO
    assert classify_fibration(to_point(simplex(0)), "trivial").status == YES_CERTIFIED
    assert classify_fibration(identity_map(horn(2, 1)), "trivial").status == YES_CERTIFIED
    with pytest.raises(ValueError):
        classify_fibration(to_point(simplex(0)), "outer")


def test_horn_is_not_a_quasicategory():
    v = is_quasicategory(horn(2, 1))
    assert v.status == NO and v.witness["member"].startswith("h")


@given(st.integers(0, 10**6))
def test_nerves_have_nerve_homotopy_categories(seed):
    C = random_category(CountedRandom(seed), 4)
    H = homotopy_category(nerve(C))
    assert sorted(H.objects) == sorted(C.objects)
    for a in C.objects:
        for b in C.objects:
            assert len(H.category.hom(a, b)) == len(C.hom(a, b))


def test_homotopy_category_of_simplex_and_J():
    H = homotopy_category(simplex(2))
    assert len(H.category.morphisms()) == 6
    J = J_truncated(3)
    HJ = homotopy_category(J)
    assert sorted(HJ.objects) == ["0", "1"]
    assert all(HJ.is_iso(m) for m in HJ.category.morphisms())
    assert all(len(HJ.category.hom(a, b)) == 1 for a in "01" for b in "01")


def test_homotopy_category_rejects_non_quasicategory():
    with pytest.raises(HomotopyError):
        homotopy_category(horn(2, 1))


def test_isofibrations():
    D = simplex(1)
    assert is_isofibration(identity_map(D)).status == YES_CERTIFIED
    assert is_isofibration(to_point(simplex(2))).status == YES_CERTIFIED
    J = J_truncated(3)
    v0 = SimplicialMap(simplex(0), J, {"0": Simplex("0", (0,))})
    v = is_isofibration(v0, check_objects=False)
    assert v.status == NO and v.witness["object"] == "0"
    with pytest.raises(PreconditionError):
        is_isofibration(to_point(horn(2, 1)))


def test_fibrewise_isofibration_of_identity():
    C = ordinal(2)
    f = _nerve_id(C)
    p = to_point(f.source)
    assert fibrewise_isofibration(f, p, p).is_yes


def test_hom_spaces():
    D = simplex(2)
    H = hom_space(D, "0", "2")
    assert H.counts()[0] == 1
    assert is_contractible_kan(H).is_yes
    E = hom_space(D, "2", "0")
    assert E.dimension == -1
    assert H.meta["hom_convention"] == "right"


def test_contractible_kan():
    assert is_contractible_kan(simplex(0)).status == YES_CERTIFIED
    assert is_contractible_kan(simplex(1)).status == NO
    assert is_contractible_kan(J_truncated(3)).status == YES_BOUNDED


def test_qcat_equivalence():
    assert qcat_equivalence(identity_map(simplex(2))).is_yes
    assert qcat_equivalence(to_point(simplex(1))).status == NO
    inc = SimplicialMap(simplex(0), simplex(1), {"0": Simplex("0", (0,))})
    assert qcat_equivalence(inc).status == NO


def test_kan_equivalence_of_points():
    assert kan_equivalence(identity_map(simplex(0))).is_yes


def test_inn2triv_identity_and_boundary():
    r = check_inn2triv(identity_map(simplex(2)))
    assert set(r.statuses().values()) == {YES_CERTIFIED} and r.agreement
    r = check_inn2triv(boundary_inclusion(1))
    assert set(r.statuses().values()) == {NO} and r.agreement
    assert r.verdicts["iii"].witness is not None


@given(st.integers(0, 10**6))
def test_inn2triv_conditions_agree_on_nerve_maps(seed):
    f = random_nerve_map(CountedRandom(seed))
    r = check_inn2triv(f)
    assert r.agreement


def test_paraequiv_identity_and_nonequivalence():
    C = ordinal(1)
    f = _nerve_id(C)
    p = to_point(f.source)
    r = check_paraequiv(f, p, p)
    assert r.agreement and all(v.is_yes for v in r.verdicts.values())
    assert "i" in r.notes
    P = to_point(simplex(0))
    g = SimplicialMap(simplex(0), simplex(1), {"0": Simplex("0", (0,))})
    r = check_paraequiv(g, P, to_point(simplex(1)))
    assert r.agreement and r.verdicts["iv"].status == NO


def test_fun_over_counts():
    D1 = simplex(1)
    pt = (simplex(0), to_point(simplex(0)))
    F = fun_over(simplex(0), pt, (D1, to_point(D1)), max_dim=1)
    # maps Delta[n] -> Delta[1]: 2 vertices, 3 edges of which one nondegenerate
    assert F.counts()[0] == 2
    assert len(F.level(1)) == 3
    G = fun_over(simplex(0), (D1, to_point(D1)), (D1, to_point(D1)), max_dim=1)
    assert len(G.level(0)) == 3
