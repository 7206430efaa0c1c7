from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylkit.category import nerve, ordinal, poset_category
from cylkit.corpus import CountedRandom, random_sset
from cylkit.delta import face_values
from cylkit.maps import (find_isomorphism, inclusion, is_epi, is_mono, isomorphic, map_props,
                         opposite, to_point)
from cylkit.sset import Simplex, SimplicialSetError, build, nd
from cylkit.standard import (J_truncated, boundary, horn, horn_inclusion, simplex, spine,
                             standard)

D2_SPEC = {
    "name": "D2",
    "generators": {0: ["a", "b", "c"], 1: ["ab", "ac", "bc"], 2: ["abc"]},
    "faces": {"ab": ["b", "a"], "ac": ["c", "a"], "bc": ["c", "b"],
              "abc": ["bc", "ac", "ab"]},
}


def test_build_delta2_has_seven_generators():
    X = build(D2_SPEC)
    assert X.size() == 7 and X.counts() == (3, 3, 1)
    assert isomorphic(X, simplex(2))


def test_build_rejects_bad_simplicial_identity():
    bad = dict(D2_SPEC, faces=dict(D2_SPEC["faces"], abc=["ac", "bc", "ab"]))
    with pytest.raises(SimplicialSetError, match="abc"):
        build(bad)


def test_boundary_delta2_has_six_generators():
    assert boundary(2).size() == 6


def test_standard_horn_and_J():
    assert standard("horn", 2, 1).counts() == (3, 2)
    assert J_truncated(2).counts() == (2, 2, 2)


def test_nerve_of_two_is_delta1():
    assert isomorphic(standard("nerve", ordinal(1), truncation=3), simplex(1))


@pytest.mark.parametrize("X,n,expected", [
    (simplex(2), 3, 15), (boundary(1), 0, 2), (simplex(0), 5, 1)])
def test_level_sizes(X, n, expected):
    assert len(X.level(n)) == expected


@pytest.mark.parametrize("m", range(5))
def test_simplex_levels_are_binomial(m):
    for n in range(5):
        assert len(simplex(m).level(n)) == comb(m + n + 1, m)


def test_face_of_top_cell():
    D = simplex(2)
    assert D.face(D.nd("012"), 1) == D.nd("02")


def test_degenerate_face_cancels():
    D = simplex(1)
    v = D.nd("0")
    assert D.face(D.degen(v, 0), 0) == v
    assert D.act(D.nd("01"), (0, 1)) == D.nd("01")


def test_map_properties():
    p = map_props(horn_inclusion(2, 1))
    assert p["mono"] and not p["epi"] and p["bijective_on_0"]
    q = map_props(to_point(simplex(1)))
    assert q["epi"] and not q["mono"]
    r = map_props(inclusion(boundary(1), simplex(1)))
    assert r["mono"] and r["bijective_on_0"]


def test_generator_and_level_routes_agree():
    for f in (horn_inclusion(2, 1), to_point(simplex(2)), inclusion(spine(3), simplex(3))):
        p = map_props(f)
        assert p["mono"] == is_mono(f) and p["epi"] == is_epi(f)


@pytest.mark.parametrize("n", range(4))
def test_opposite_of_simplex(n):
    assert isomorphic(opposite(simplex(n)), simplex(n))


def test_opposite_of_horns():
    assert isomorphic(opposite(horn(2, 1)), horn(2, 1))
    assert isomorphic(opposite(horn(2, 0)), horn(2, 2))


def test_opposite_of_nerve():
    C = poset_category(["x", "y", "z"], lambda a, b: a <= b, name="P")
    assert isomorphic(opposite(nerve(C)), nerve(C.opposite()))


@st.composite
def simplices(draw):
    rng = CountedRandom(draw(st.integers(0, 10**6)))
    X = random_sset(rng)
    k = draw(st.integers(0, 4))
    lv = X.level(k)
    return X, lv[draw(st.integers(0, len(lv) - 1))]


def ops(k):
    return st.integers(0, 4).flatmap(
        lambda m: st.lists(st.integers(0, k), min_size=m + 1, max_size=m + 1).map(
            lambda v: tuple(sorted(v))))


@given(simplices(), st.data())
def test_action_is_functorial_and_normal(xs, data):
    X, x = xs
    c1 = data.draw(ops(x.dimension))
    c2 = data.draw(ops(len(c1) - 1))
    y = X.act(x, c1)
    assert y.gen in X.dim_of and y.epi[-1] == X.dim_of[y.gen]
    assert set(y.epi) == set(range(X.dim_of[y.gen] + 1))
    assert X.act(y, c2) == X.act(x, tuple(c1[v] for v in c2))


@given(simplices())
def test_identity_action(xs):
    X, x = xs
    assert X.act(x, tuple(range(x.dimension + 1))) == x


@given(simplices())
def test_simplicial_identities_on_levels(xs):
    X, x = xs
    n = x.dimension
    for j in range(n + 1 if n >= 2 else 0):
        for i in range(j):
            lhs = X.act(X.act(x, face_values(j, n)), face_values(i, n - 1))
            rhs = X.act(X.act(x, face_values(i, n)), face_values(j - 1, n - 1))
            assert lhs == rhs
    for i in range(n + 1):
        assert X.face(X.degen(x, i), i) == x
        assert X.face(X.degen(x, i), i + 1) == x


def test_find_isomorphism_respects_fixed():
    D = simplex(1)
    assert find_isomorphism(D, D, {"0": "1"}) is None
    assert find_isomorphism(D, D, {"0": "0"}) is not None


def test_simplex_word_round_trip():
    s = Simplex.from_word("01", (2, 0), 1)
    assert s.degeneracy_word == (2, 0) and s.dimension == 3
    assert nd("01", 1).nondegenerate
