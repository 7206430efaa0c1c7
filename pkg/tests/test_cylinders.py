from hypothesis import given, settings
from hypothesis import strategies as st

from cylkit.category import discrete, ordinal
from cylkit.corpus import CountedRandom, random_cylinder
from cylkit.cylinders import (Profunctor, check_reedy_local, collage_nerve, cylinder_isomorphism,
                              cylinders_equal, divide, dual_cylinder, exterior_product,
                              from_presheaf, initial, initial_map, is_ambifibrant,
                              is_cylinder_map, left_cone, leibniz_exterior, leibniz_lift_check,
                              make_cylinder, profunctor_from_category, pullback_cyl, pushforward, reflect_L, right_divide, split_cylinder,
                              terminal, to_presheaf, triangle_identities,
                              verify_division_adjunction, verify_tfae)
from cylkit.limits import join
from cylkit.maps import SimplicialMap, from_empty, identity_map, to_point
from cylkit.sset import Simplex
from cylkit.standard import (boundary, boundary_inclusion, empty, horn, simplex,
                             vertex_inclusion)
from cylkit.verdict import NO, YES_CERTIFIED

P0 = simplex(0)


def vert(X, g):
    return Simplex(g, (0,))


def point_at(X, g):
    return SimplicialMap(P0, X, {"0": vert(X, g)})


def test_initial_and_terminal():
    A, B = simplex(0), simplex(1)
    I = initial(A, B)
    assert I.total.counts() == (3, 1)
    T = terminal(A, B)
    assert T.total.counts() == join(A, B).counts()
    assert is_cylinder_map(initial_map(T), I, T)
    assert cylinder_isomorphism(T, T) is not None
    assert cylinder_isomorphism(I, T) is None


def test_make_cylinder_from_a_map_to_the_interval():
    X = make_cylinder(simplex(1), identity_map(simplex(1)))
    assert X.A.counts() == (1,) and X.B.counts() == (1,)
    assert cylinder_isomorphism(X, terminal(X.A, X.B)) is not None


def test_reflection_of_join_is_terminal():
    A, B = simplex(0), simplex(0)
    J = join(A, B)
    R = reflect_L(J, identity_map(J), A, B)
    assert cylinder_isomorphism(R.cylinder, terminal(A, B)) is not None


def test_reflection_of_ends_only_is_initial():
    A, B = simplex(0), simplex(0)
    J = join(A, B)
    M = boundary(1)
    m = SimplicialMap(M, J, {"0": J.nd(J.vertices()[0]), "1": J.nd(J.vertices()[1])})
    R = reflect_L(M, m, A, B, J)
    assert R.cylinder.total.counts() == (2,)


def test_exterior_product_of_points():
    A = simplex(0)
    B = simplex(0)
    E = exterior_product(P0, identity_map(P0), P0, identity_map(P0), A, B)
    assert sum(E.cylinder.total.counts()) == 3
    assert cylinder_isomorphism(E.cylinder, terminal(A, B)) is not None


def test_leibniz_exterior_of_empty_inclusions():
    E = empty()
    f = from_empty(E, P0)
    L = leibniz_exterior(f, identity_map(P0), f, identity_map(P0), P0, P0)
    assert L.domain.cylinder.total.counts() == (2,)
    assert L.codomain.cylinder.total.counts() == (2, 1)


def test_division_of_terminal_cylinder():
    B = simplex(1)
    T = terminal(P0, B)
    D = divide(T, identity_map(P0), "L")
    assert D.exact and D.obj.counts() == B.counts()
    D = right_divide(T, from_empty(empty(), B))
    assert D.exact and D.obj.counts() == P0.counts()


def test_division_adjunction_on_small_cases():
    X = terminal(P0, simplex(1))
    r = verify_division_adjunction(identity_map(P0), identity_map(simplex(1)), X)
    assert r.ok and r.exact
    X = initial(P0, P0)
    r = verify_division_adjunction(identity_map(P0), identity_map(P0), X)
    assert r.ok and r.counts == (0, 0, 0)


def test_leibniz_lifting_forms_agree():
    X = terminal(P0, simplex(1))
    f = from_empty(empty(), P0)
    g = boundary_inclusion(1)
    r = leibniz_lift_check(f, identity_map(P0), g, identity_map(simplex(1)), X)
    assert r.agree and all(r.values)
    X = initial(P0, simplex(0))
    r = leibniz_lift_check(f, identity_map(P0), f, identity_map(P0), X)
    assert r.agree and not any(r.values)


def test_presheaf_round_trip_and_constancy():
    for X in (initial(P0, simplex(1)), terminal(P0, simplex(1)), terminal(boundary(1), P0)):
        P = to_presheaf(X)
        Y = from_presheaf(P)
        assert cylinder_isomorphism(Y, X) is not None
    assert to_presheaf(terminal(P0, P0)).is_constant(1)
    assert to_presheaf(initial(P0, P0)).is_constant(0)


@settings(max_examples=15)
@given(st.integers(0, 10**6))
def test_presheaf_round_trip_random(seed):
    X = random_cylinder(CountedRandom(seed))
    assert cylinder_isomorphism(from_presheaf(to_presheaf(X)), X) is not None


def test_pushforward_and_pullback_of_initial_and_terminal():
    u = identity_map(P0)
    v = to_point(simplex(1))
    F = pushforward(u, v, initial(P0, simplex(1)))
    assert cylinder_isomorphism(F.cylinder, initial(P0, P0)) is not None
    G = pullback_cyl(u, v, terminal(P0, P0))
    assert cylinder_isomorphism(G.cylinder, terminal(P0, simplex(1))) is not None
    assert triangle_identities(u, v, terminal(P0, simplex(1)), terminal(P0, P0)).ok


def test_left_cone_examples():
    B = simplex(1)
    C, _ = left_cone(empty(), from_empty(empty(), B))
    assert C.counts() == (3, 1)
    C, _ = left_cone(B, identity_map(B))
    assert C.counts() == join(P0, B).counts()
    C, _ = left_cone(P0, point_at(B, "0"))
    assert C.counts()[0] == 3 and C.counts()[1] == 2


def test_collage_examples():
    A, B = ordinal(0, name="A"), discrete(["b"], name="B")
    X = collage_nerve(Profunctor(A, B, {}))
    assert cylinder_isomorphism(X, initial(X.A, X.B)) is not None
    Y = collage_nerve(profunctor_from_category(ordinal(1), ["0"], ["1"]))
    assert Y.total.counts() == (2, 1)
    assert is_ambifibrant(Y).status == YES_CERTIFIED


def test_reedy_conditions_on_terminal_and_initial():
    T = terminal(P0, simplex(1))
    for c in ("vert_left_fibrant", "horiz_right_fibrant", "vert_right_local"):
        assert check_reedy_local(T, c).is_yes
    I = initial(P0, P0)
    assert check_reedy_local(I, "vert_left_fibrant").is_yes
    r = verify_tfae(I)
    assert r.agreement


def test_inner_horn_split_is_not_ambifibrant():
    H = horn(2, 1)
    X = split_cylinder(H, {"0"}, A="A", B="B")
    v = is_ambifibrant(X)
    assert v.status == NO
    assert verify_tfae(X).agreement


def test_dual_cylinder():
    T = terminal(P0, simplex(1))
    D = dual_cylinder(T)
    assert D.A.name.endswith("^op") and D.B.name.endswith("^op")
    assert cylinder_isomorphism(D, terminal(D.A, D.B)) is not None
    assert cylinders_equal(dual_cylinder(D), T)


@settings(max_examples=15)
@given(st.integers(0, 10**6))
def test_dual_preserves_ambifibrancy(seed):
    X = random_cylinder(CountedRandom(seed))
    assert cylinders_equal(dual_cylinder(dual_cylinder(X)), X)
    assert is_ambifibrant(X).status == is_ambifibrant(dual_cylinder(X)).status
