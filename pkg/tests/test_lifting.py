import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylkit.anodyne import (ExpansionCertificate, certify_inner_anodyne, find_inner_expansion,
                            is_absolute_wce, right_cancellation_check, soa_factor)
from cylkit.category import free_category, nerve, ordinal, poset_category
from cylkit.corpus import CountedRandom, random_cancellation_pair, random_category
from cylkit.lifting import LiftingProblem, explicit_square, has_rlp, iter_lifts, solve_lift
from cylkit.limits import coproduct, pushout
from cylkit.maps import SimplicialMap, compose, identity_map, is_mono, to_point
from cylkit.sset import Simplex
from cylkit.standard import (boundary_inclusion, horn, horn_inclusion, simplex, simplex_map,
                             spine_inclusion)
from cylkit.verdict import EXHAUSTED, NO, YES_BOUNDED, YES_CERTIFIED, Verdict, combine, exit_code


def test_verdict_has_no_truth_value():
    with pytest.raises(TypeError):
        bool(Verdict(YES_CERTIFIED))
    with pytest.raises(ValueError):
        Verdict("MAYBE")


def test_combine_and_exit_codes():
    y, b, n, e = (Verdict(s) for s in (YES_CERTIFIED, YES_BOUNDED, NO, EXHAUSTED))
    assert combine([y, b]).status == YES_BOUNDED
    assert combine([y, e, n]).status == NO
    assert combine([y, e]).status == EXHAUSTED
    assert [exit_code(v) for v in ([y, b], [n, e], [e, y])] == [0, 1, 2]


def test_inner_horn_against_nerve_has_unique_diagonal():
    C = free_category(["a", "b", "c"], [("f", "a", "b"), ("g", "b", "c")], name="C")
    N = nerve(C)
    i = horn_inclusion(2, 1)
    p = to_point(N)
    tops = list(iter_lifts(boundary_inclusion(0), p, {}, to_point(simplex(0))))
    assert tops
    for top in iter_lifts(
            SimplicialMap(simplex(0).__class__("∅", {}, {}), i.source, {}), p, {},
            to_point(i.source)):
        prob = LiftingProblem(i, p, SimplicialMap(i.source, N, top), to_point(simplex(2)))
        v = solve_lift(prob, count=True)
        assert v.status == YES_CERTIFIED and v.budget_report["solutions"] == 1


def test_boundary_against_edge_with_reversed_top_fails():
    i = boundary_inclusion(1)
    p = to_point(simplex(1))
    prob = explicit_square(i, p, {"0": Simplex("1", (0,)), "1": Simplex("0", (0,))},
                           {g: Simplex("0", (0,) * (d + 1)) for g, d in simplex(1).dim_of.items()})
    assert solve_lift(prob).status == NO


def test_identity_left_leg_lifts_with_top():
    D = simplex(2)
    p = to_point(D)
    top = identity_map(D)
    prob = LiftingProblem(identity_map(D), p, top, to_point(D))
    v = solve_lift(prob)
    assert v.status == YES_CERTIFIED and v.witness.assignment == top.assignment


def test_has_rlp_examples():
    C = poset_category(["x", "y"], lambda a, b: a <= b)
    D = ordinal(2)
    from cylkit.category import enumerate_functors, nerve_functor
    F_obj, F_mor = enumerate_functors(C, D)[0]
    f = nerve_functor(F_obj, F_mor, C, D, nerve(C), nerve(D))
    assert has_rlp(f, "inner_horns").status == YES_CERTIFIED
    v = has_rlp(to_point(simplex(1)), "boundaries", 2)
    assert v.status == NO and v.witness["member"] == "b_1"
    assert has_rlp(identity_map(horn(2, 1)), "all_horns").status == YES_CERTIFIED


@pytest.mark.parametrize("n", [2, 3, 4])
def test_spine_inclusions_certified(n):
    v = certify_inner_anodyne(spine_inclusion(n))
    assert v.status == YES_CERTIFIED
    assert isinstance(v.witness, ExpansionCertificate) and v.witness.replay()


def test_horn_is_certified_and_boundary_refuted():
    assert certify_inner_anodyne(horn_inclusion(2, 1)).status == YES_CERTIFIED
    v = certify_inner_anodyne(boundary_inclusion(1))
    assert v.status == NO
    q = v.witness["inner_fibration"]
    assert q.source.counts() == (2,)
    assert has_rlp(q, "inner_horns").is_yes
    assert solve_lift(v.witness["square"]).status == NO


def test_outer_horn_is_refuted():
    assert certify_inner_anodyne(horn_inclusion(2, 0)).status == NO


def test_soa_factor_of_spine():
    F = soa_factor(spine_inclusion(2))
    assert F.replay()
    assert compose(F.right_part, F.left_part).assignment == spine_inclusion(2).assignment
    assert has_rlp(F.right_part, "inner_horns", F.report["dim_budget"]).is_yes
    assert has_rlp(F.right_part, "boundaries").is_yes


def test_soa_factor_of_identity_and_generator():
    D = simplex(2)
    F = soa_factor(identity_map(D))
    assert F.cells == [] and F.status == "SATURATED"
    assert F.right_part.assignment == identity_map(D).assignment
    G = soa_factor(horn_inclusion(2, 1))
    assert has_rlp(G.right_part, "inner_horns", G.report["dim_budget"]).is_yes


def test_absolute_wce():
    for n in (2, 3):
        for k in range(1, n):
            assert is_absolute_wce(horn_inclusion(n, k)).is_yes
    assert is_absolute_wce(boundary_inclusion(1)).status == NO
    # Delta[2] -> Delta[0] is surjective on vertices but no equivalence
    assert not is_absolute_wce(to_point(simplex(2))).is_yes


def _filled_triangle():
    """``Delta[2]`` with an inner 3-horn attached along a degenerate map."""
    h = horn_inclusion(3, 1)
    collapse = compose(simplex_map((0, 1, 2, 2), 3, 2), h)
    po = pushout(h, collapse)
    return po.inj_C


def test_right_cancellation_examples():
    u = horn_inclusion(2, 1)
    v = _filled_triangle()
    assert is_mono(v)
    r = right_cancellation_check(u, v)
    assert r.statuses() == {"u": YES_CERTIFIED, "vu": YES_CERTIFIED, "v": YES_CERTIFIED}
    r = right_cancellation_check(identity_map(simplex(2)), v)
    assert r.v.status == YES_CERTIFIED
    X, inc, _ = coproduct(simplex(2), simplex(0))
    r = right_cancellation_check(u, inc)
    assert r.v.status == NO and r.vu.status == NO and not r.contradiction


@given(st.integers(0, 10**6))
def test_right_cancellation_on_random_pairs(seed):
    u, v = random_cancellation_pair(CountedRandom(seed))
    r = right_cancellation_check(u, v)
    assert not r.contradiction
    if r.u.status == YES_CERTIFIED and r.vu.status == YES_CERTIFIED:
        assert r.v.status == YES_CERTIFIED


@given(st.integers(0, 10**6))
def test_nerves_are_quasicategories(seed):
    C = random_category(CountedRandom(seed), 4)
    assert has_rlp(to_point(nerve(C)), "inner_horns").status == YES_CERTIFIED


def test_inner_expansion_search_budget():
    steps, nodes, ran_out = find_inner_expansion(spine_inclusion(3))
    assert steps is not None and not ran_out
    steps, nodes, ran_out = find_inner_expansion(spine_inclusion(4), node_budget=1)
    assert steps is None and ran_out
