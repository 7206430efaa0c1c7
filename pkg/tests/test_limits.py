import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylkit.corpus import CountedRandom, random_subcomplex
from cylkit.limits import (cell_presentation_mono, coproduct, fibre, join, join_structure,
                           leibniz_join, product, pullback, pushout, simplex_join_iso)
from cylkit.maps import from_empty, identity_map, inclusion, is_iso, is_mono, isomorphic, to_point
from cylkit.standard import (boundary, boundary_inclusion, empty, horn, horn_inclusion, simplex,
                             spine_inclusion)


def test_pushout_over_empty_is_two_points():
    E, P = empty(), simplex(0)
    po = pushout(from_empty(E, P), from_empty(E, P))
    assert po.obj.counts() == (2,)


def test_two_triangles_glued_along_horn():
    i = horn_inclusion(2, 1)
    po = pushout(i, i)
    assert po.obj.size() == 9
    assert po.obj.counts() == (3, 4, 2)


def test_pushout_along_identity():
    i = horn_inclusion(2, 1)
    po = pushout(identity_map(i.source), i)
    assert isomorphic(po.obj, simplex(2))


def test_pushout_mediates_uniquely():
    i = horn_inclusion(2, 1)
    po = pushout(i, i)
    m = po.mediate(identity_map(simplex(2)), identity_map(simplex(2)))
    m.check()
    assert m.target == simplex(2)


def test_join_fibres():
    J = join(simplex(1), simplex(0))
    p = join_structure(J)
    assert isomorphic(fibre(p, "0"), simplex(1))
    assert isomorphic(fibre(p, "1"), simplex(0))


def test_pullback_of_identities():
    D = simplex(2)
    pb = pullback(identity_map(D), identity_map(D))
    assert isomorphic(pb.obj, D)


def test_square_counts():
    P = product(simplex(1), simplex(1)).obj
    assert P.counts() == (4, 5, 2)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
def test_join_of_simplices(m, n):
    f = simplex_join_iso(m, n)
    assert is_iso(f)
    assert isomorphic(join(simplex(m), simplex(n)), simplex(m + n + 1))


def test_join_units_and_cone():
    B = horn(2, 1)
    assert isomorphic(join(empty(), B), B)
    assert isomorphic(join(B, empty()), B)
    C = join(boundary(1), simplex(0))
    assert C.counts() == (3, 2)


def test_join_with_names_containing_separators():
    from cylkit.sset import FiniteSimplicialSet
    A = FiniteSimplicialSet("A", {0: ["0"]}, {})
    B = join(simplex(0), simplex(0))
    J = join(A, B)
    assert J.size() == 1 + B.size() + B.size()
    J2 = join(A, join(A, B))
    assert len(set(J2.dim_of)) == J2.size()


def test_leibniz_join_of_empties_is_boundary_inclusion():
    e = from_empty(empty(), simplex(0))
    c = leibniz_join(e, e)
    assert is_mono(c)
    assert isomorphic(c.source, boundary(1)) and isomorphic(c.target, simplex(1))


def test_leibniz_join_with_horn_gives_inner_horn():
    c = leibniz_join(horn_inclusion(2, 1), from_empty(empty(), simplex(0)))
    assert isomorphic(c.source, horn(3, 1)) and isomorphic(c.target, simplex(3))


def test_leibniz_join_with_empty_boundary_is_a_shift():
    e = from_empty(empty(), simplex(0))
    h = horn_inclusion(2, 1)
    c = leibniz_join(e, h)
    # Delta[0] * Lambda^1[2] with Delta[0] * ... : the cone on the horn, union the simplex
    assert isomorphic(c.target, simplex(3))
    assert isomorphic(c.source, horn(3, 2))


def test_cell_presentations():
    p = cell_presentation_mono(from_empty(empty(), simplex(1)))
    assert [s[0] for s in p.steps] == ["b_0", "b_0", "b_1"]
    p.replay()
    q = cell_presentation_mono(horn_inclusion(2, 1))
    assert [s[0] for s in q.steps] == ["b_1", "b_2"]
    q.replay()
    assert cell_presentation_mono(identity_map(simplex(2))).steps == []


def test_coproduct_renames_clashes():
    X, iX, iY = coproduct(simplex(1), simplex(1))
    assert X.counts() == (4, 2)
    assert is_mono(iX) and is_mono(iY)


@given(st.integers(0, 10**6))
def test_pushout_of_random_subcomplexes_is_union(seed):
    rng = CountedRandom(seed)
    n = rng.randint(1, 3)
    A = random_subcomplex(rng, n, name="A")
    B = random_subcomplex(rng, n, name="B")
    D = simplex(n)
    common = [g for g in A.dim_of if g in B.dim_of]
    from cylkit.maps import subcomplex
    C = subcomplex(D, common, name="C")
    po = pushout(inclusion(C, A), inclusion(C, B))
    union = set(A.dim_of) | set(B.dim_of)
    assert po.obj.size() == len(union)
    m = po.mediate(inclusion(A, D), inclusion(B, D))
    assert is_mono(m)


@given(st.integers(0, 10**6))
def test_cell_presentation_replays(seed):
    rng = CountedRandom(seed)
    n = rng.randint(0, 3)
    A = random_subcomplex(rng, n)
    cell_presentation_mono(inclusion(A, simplex(n))).replay()


def test_pullback_along_point_is_product():
    X, Y = horn(2, 1), simplex(1)
    pb = pullback(to_point(X), to_point(Y))
    assert pb.obj.counts() == product(X, Y).obj.counts()


def test_spine_inclusion_is_mono():
    assert is_mono(spine_inclusion(3)) and is_mono(boundary_inclusion(2))
