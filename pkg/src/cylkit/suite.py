"""The acceptance battery: fourteen seeded, deterministic checks.

Each check returns a :class:`CriterionResult`.  All randomness comes from
one :class:`~cylkit.corpus.CountedRandom`, with a named child stream per
criterion so that running a single criterion reproduces the same corpus.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

from . import corpus
from .anodyne import certify_inner_anodyne, is_absolute_wce, right_cancellation_check
from .category import nerve
from .classify import check_inn2triv, classify_fibration, is_isofibration, is_quasicategory
from .cylinders.basechange import pullback_cyl, pushforward, triangle_identities
from .cylinders.collage import collage_nerve, random_collage_profunctor
from .cylinders.core import (Cylinder, cylinder_isomorphism, cylinders_equal, dual_cylinder,
                             initial, initial_map, split_cylinder, terminal)
from .cylinders.division import leibniz_lift_check, verify_division_adjunction
from .cylinders.presheaf import from_presheaf, to_presheaf
from .cylinders.reedy import is_ambifibrant, verify_tfae
from .delta import monotone_maps
from .homotopy import ho_functor, is_discrete_isofibration
from .lifting import solve_lift
from .limits import join, join_left_inclusion, join_structure, simplex_join_iso
from .maps import SimplicialMap, compose, from_empty, is_iso, opposite_map, to_point
from .standard import (J_truncated, boundary, boundary_inclusion, empty, horn, horn_inclusion,
                       simplex, spine_inclusion, vertex_inclusion)
from .sset import nd
from .verdict import NO, YES_BOUNDED, YES_CERTIFIED


@dataclass
class CriterionResult:
    id: int
    tag: str
    title: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self, timing=True):
        mark = "PASS" if self.passed else "FAIL"
        base = f"[{mark}] {self.id:2d} {self.tag:<11} {self.title}"
        return f"{base} ({self.seconds:.2f}s)" if timing else base

    def to_dict(self):
        return {"id": self.id, "tag": self.tag, "title": self.title, "passed": self.passed,
                "detail": self.detail}


# -- 1. joins of simplices ------------------------------------------------------------

def c1_join(rng):
    bad = []
    for m in range(4):
        for n in range(4):
            f = simplex_join_iso(m, n)
            if not is_iso(f) or f.target.counts() != simplex(m + n + 1).counts():
                bad.append((m, n))
    return not bad, {"pairs": 16, "failures": bad}


# -- 2. level counts -----------------------------------------------------------------------

def c2_levels(rng):
    bad = []
    for m in range(6):
        D = simplex(m)
        for n in range(6):
            a, b, c = len(D.level(n)), comb(m + n + 1, m), len(monotone_maps(n, m))
            if not a == b == c:
                bad.append((m, n, a, b, c))
    return not bad, {"cells": 36, "failures": bad}


# -- 3. Eilenberg-Zilber normal forms ---------------------------------------------------

def elementary_act(X, x, op):
    """``x . op`` computed through one face or degeneracy at a time."""
    from .delta import MonotoneMap, epi_mono_factor
    k = x.dimension
    em = epi_mono_factor(MonotoneMap(len(op) - 1, k, tuple(op)))
    y = x
    for j in reversed(em.mono.face_word()):
        y = X.face(y, j)
    for i in reversed(em.epi.degeneracy_word()):
        y = X.degen(y, i)
    return y


def c3_ez(rng, count=1000):
    bad = []
    for idx, (X, x, c1, c2) in enumerate(corpus.ez_samples(rng, count)):
        y = X.act(x, c1)
        normal = (y.gen in X.dim_of and y.epi[-1] == X.dim_of[y.gen]
                  and set(y.epi) == set(range(X.dim_of[y.gen] + 1))
                  and sum(1 for z in X.level(y.dimension) if z == y) == 1)
        same = elementary_act(X, x, c1) == y
        functorial = X.act(y, c2) == X.act(x, tuple(c1[v] for v in c2))
        if not (normal and same and functorial):
            bad.append(idx)
    return not bad, {"samples": count, "failures": bad[:10]}


# -- 4. quasi-category detection -------------------------------------------------------------

def c4_qcat(rng):
    statuses = []
    for _ in range(10):
        C = corpus.random_category(rng, 4)
        statuses.append(is_quasicategory(nerve(C)).status)
    v = is_quasicategory(horn(2, 1))
    sq = v.witness["square"] if v.status == NO else None
    witness_ok = sq is not None and solve_lift(sq).status == NO
    ok = all(s == YES_CERTIFIED for s in statuses) and witness_ok
    return ok, {"nerves": statuses, "horn_1_2": v.status,
                "horn_witness": sq.describe() if sq is not None else None}


# -- 5. spine inclusions ------------------------------------------------------------

def c5_spines(rng):
    out, ok = {}, True
    for n in (2, 3, 4):
        t = time.perf_counter()
        v = certify_inner_anodyne(spine_inclusion(n))
        replayed = v.status == YES_CERTIFIED and _replay(v.witness)
        dt = time.perf_counter() - t
        out[f"I[{n}]"] = {"status": v.status, "replayed": replayed, "under_60s": dt < 60.0}
        ok = ok and replayed and (n < 4 or dt < 60.0)
    return ok, out


def _replay(w):
    if isinstance(w, dict):
        return w["retract"].verify() and w["factorization"].replay()
    return w.replay()


# -- 6. absolute weak categorical equivalences ---------------------------------------

def c6_wce(rng):
    out, ok = {}, True
    for n in (2, 3):
        for k in range(1, n):
            v = is_absolute_wce(horn_inclusion(n, k))
            out[f"horn({n},{k})"] = v.status
            ok = ok and v.is_yes
    v = is_absolute_wce(boundary_inclusion(1))
    refuted = False
    if v.status == NO and isinstance(v.witness, dict):
        q = v.witness["inner_fibration"]
        sq = v.witness.get("square")
        refuted = (classify_fibration(q, "inner").is_yes and sq is not None
                   and solve_lift(sq).status == NO)
    out["boundary(1)"] = v.status
    out["refuting_fibration"] = v.witness["inner_fibration"].source.name if refuted else None
    return ok and refuted, out


# -- 7. right cancellation -------------------------------------------------------------

def c7_cancellation(rng, pairs=20):
    rows, contradictions, ok = [], 0, True
    for _ in range(pairs):
        u, v = corpus.random_cancellation_pair(rng)
        r = right_cancellation_check(u, v)
        rows.append(r.statuses())
        contradictions += r.contradiction
        if r.u.status == YES_CERTIFIED and r.vu.status == YES_CERTIFIED:
            ok = ok and r.v.status == YES_CERTIFIED
    premise = sum(1 for s in rows if s["u"] == s["vu"] == YES_CERTIFIED)
    return ok and contradictions == 0, {"pairs": pairs, "premise_holds": premise,
                                        "contradictions": contradictions}


# -- 8. equivalent characterisations of ambifibrancy -----------------------------------

def soa_cylinder(A, B):
    """Factor ``A + B -> A * B`` by the small object argument over inner horns."""
    from .anodyne import soa_factor
    T = terminal(A, B)
    u = initial_map(T)
    F = soa_factor(u)
    I = initial(A, B)
    return Cylinder(F.middle, compose(join_structure(T.total), F.right_part), A, B,
                    compose(F.left_part, I.incA), compose(F.left_part, I.incB)).check()


def c8_tfae(rng):
    pairs = {"(Δ[1],Δ[0])": (simplex(1), simplex(0)),
             "(Λ¹[2],Δ[1])": (horn(2, 1), simplex(1)),
             "(I[2],I[2])": (spine_inclusion(2).source, spine_inclusion(2).source)}
    out, ok = {}, True
    for name, (A, B) in pairs.items():
        rep = verify_tfae(soa_cylinder(A, B))
        out[name] = rep.statuses()
        ok = ok and not rep.contradiction
    return ok, out


# -- 9. trivial fibrations between quasi-categories ---------------------------------

def c9_inn2triv(rng):
    rows, ok = [], True
    for _ in range(10):
        p = corpus.random_nerve_fibration(rng)
        rep = check_inn2triv(p)
        rows.append(rep.statuses())
        ok = ok and rep.agreement
    rep = check_inn2triv(boundary_inclusion(1))
    neg = all(v.status == NO and v.witness is not None for v in rep.verdicts.values())
    return ok and neg, {"nerve_maps": rows, "boundary(1)": rep.statuses()}


# -- 10. adjunctions, Leibniz lifts and presheaves ------------------------------------

def small_cylinders():
    D0, D1 = simplex(0), simplex(1)
    L = horn(2, 1)
    return [initial(D0, D0), terminal(D0, D0), terminal(D1, D0), terminal(D0, boundary(1)),
            initial(D1, D0), split_cylinder(L, {"0"}, A="Δ[0]", B="Δ[1]"),
            split_cylinder(horn(2, 0), {"0"}, A="Δ[0]", B="∂Δ[1]")]


def _maps_into(W, A):
    return corpus.all_maps(W, A)


def adjunction_triples(limit=10):
    weights = [simplex(0), boundary(1), simplex(1)]
    for X in small_cylinders():
        for M in weights:
            for S in weights:
                if M.size() + S.size() + X.total.size() > limit:
                    continue
                for m in _maps_into(M, X.A):
                    for s in _maps_into(S, X.B):
                        yield m, s, X


def leibniz_triples(limit=10):
    E = empty()
    monos = [from_empty(E, simplex(0)), boundary_inclusion(1), vertex_inclusion(1, 0),
             vertex_inclusion(1, 1)]
    for X in small_cylinders():
        for f in monos:
            for g in monos:
                N, T = f.target, g.target
                if N.size() + T.size() + X.total.size() > limit:
                    continue
                for n_map in _maps_into(N, X.A):
                    for t_map in _maps_into(T, X.B):
                        yield f, n_map, g, t_map, X


def c10_adjunctions(rng):
    adj = [verify_division_adjunction(m, s, X) for m, s, X in adjunction_triples()]
    adj_ok = all(r.ok for r in adj)
    leib = [leibniz_lift_check(*t) for t in leibniz_triples()]
    leib_ok = all(r.agree for r in leib)
    trips = sum(1 for r in leib if all(r.values))
    rt_ok = True
    for X in corpus.cylinder_corpus(rng, 10):
        P = to_presheaf(X)
        P.check_functoriality()
        rt_ok = rt_ok and cylinder_isomorphism(from_presheaf(P), X) is not None
    A, B = horn(2, 1), simplex(1)
    const = to_presheaf(terminal(A, B)).is_constant(1) and to_presheaf(initial(A, B)).is_constant(0)
    ok = adj_ok and leib_ok and rt_ok and const
    return ok, {"adjunction_triples": len(adj), "adjunction_ok": adj_ok,
                "leibniz_triples": len(leib), "leibniz_all_lift": trips,
                "leibniz_agree": leib_ok, "presheaf_round_trip": rt_ok,
                "terminal_initial_constant": const}


# -- 11. duality ---------------------------------------------------------------------

def c11_duality(rng):
    mism = []
    maps = corpus.map_corpus(rng, 10)
    for idx, p in enumerate(maps):
        a = classify_fibration(p, "left").status
        b = classify_fibration(opposite_map(p), "right").status
        c = classify_fibration(p, "inner").status
        d = classify_fibration(opposite_map(p), "inner").status
        if a != b or c != d:
            mism.append(idx)
    cyls = corpus.cylinder_corpus(rng, 10)
    invol = all(cylinders_equal(dual_cylinder(dual_cylinder(X)), X) for X in cyls)
    return not mism and invol, {"maps": len(maps), "mismatches": mism, "involution": invol}


# -- 12. collages ----------------------------------------------------------------------

def c12_collage(rng, count=6):
    rows, ok = [], True
    for _ in range(count):
        X = collage_nerve(random_collage_profunctor(rng, 3))
        v = is_ambifibrant(X)
        disc = is_discrete_isofibration(ho_functor(X.structure))
        rows.append({"counts": list(X.total.counts()), "ambifibrant": v.status,
                     "discrete_isofibration": disc})
        ok = ok and v.is_yes and disc
    return ok, {"collages": rows}


# -- 13. base change ---------------------------------------------------------------------

def basechange_instances(rng, count=5):
    out = []
    while len(out) < count:
        X = corpus.random_cylinder(rng)
        if X.A.is_empty() or X.B.is_empty():
            continue
        choice = rng.randrange(3)
        if choice == 0:
            u, v = to_point(X.A), to_point(X.B)
        elif choice == 1:
            u = _cone_on(X.A)
            v = to_point(X.B)
        else:
            u = to_point(X.A)
            v = _cone_on(X.B)
        out.append((u, v, X))
    return out


def _cone_on(A):
    """``A * Delta[0]`` and the inclusion of ``A``."""
    J = join(A, simplex(0), name=f"{A.name}▷")
    return join_left_inclusion(J)


def c13_basechange(rng):
    rows, ok = [], True
    for u, v, X in basechange_instances(rng):
        A2, B2 = u.target, v.target
        init = cylinder_isomorphism(pushforward(u, v, initial(X.A, X.B)).cylinder,
                                    initial(A2, B2)) is not None
        term = cylinder_isomorphism(pullback_cyl(u, v, terminal(A2, B2)).cylinder,
                                    terminal(X.A, X.B)) is not None
        Y = pushforward(u, v, X).cylinder
        tri = triangle_identities(u, v, X, Y).ok
        rows.append({"initial": init, "terminal": term, "triangles": tri})
        ok = ok and init and term and tri
    return ok, {"instances": rows}


# -- 14. the truncated free-living isomorphism -------------------------------------------

def c14_J(rng, d=3):
    J = J_truncated(d)
    p = SimplicialMap(simplex(0), J, {"0": nd("0", 0)}).check()
    inner = classify_fibration(p, "inner")
    iso = is_isofibration(p, check_objects=False)
    ok = inner.status == YES_BOUNDED and iso.status == NO
    return ok, {"truncation": d, "inner": inner.status, "inner_cutoff": inner.cutoff,
                "isofibration": iso.status}


CRITERIA = [
    (1, "join", "join of simplices is a simplex", c1_join),
    (2, "levels", "level counts match binomials and brute force", c2_levels),
    (3, "ez", "Eilenberg-Zilber normal forms and functoriality", c3_ez),
    (4, "qcat", "nerves are quasi-categories; the inner horn is not", c4_qcat),
    (5, "anodyne", "spine inclusions certified inner anodyne", c5_spines),
    (6, "wce", "inner horns are absolute equivalences; boundary(1) is not", c6_wce),
    (7, "cancel", "right cancellation on seeded inner expansions", c7_cancellation),
    (8, "tfae", "ambifibrancy characterisations agree", c8_tfae),
    (9, "inn2triv", "trivial fibration characterisations agree", c9_inn2triv),
    (10, "adjunction", "division adjunction, Leibniz lifts and presheaves", c10_adjunctions),
    (11, "duality", "left/right duality and dual-cylinder involution", c11_duality),
    (12, "collage", "collage nerves are ambifibrant", c12_collage),
    (13, "basechange", "pushforward and pullback of cylinders", c13_basechange),
    (14, "J", "vertex of truncated J: inner but not an isofibration", c14_J),
]


def selected(only=None):
    if not only:
        return list(CRITERIA)
    keys = {str(k).strip() for k in (only if isinstance(only, (list, tuple)) else
                                       str(only).split(","))}
    return [c for c in CRITERIA if str(c[0]) in keys or c[1] in keys]


def run_criterion(entry, seed=42):
    cid, tag, title, fn = entry
    rng = corpus.CountedRandom(seed).child(tag)
    t = time.perf_counter()
    passed, detail = fn(rng)
    detail = dict(detail, rng_draws=rng.draws)
    return CriterionResult(cid, tag, title, bool(passed), detail, time.perf_counter() - t)


def run_suite(seed=42, only=None, on_result=None):
    results = []
    for entry in selected(only):
        r = run_criterion(entry, seed)
        if on_result is not None:
            on_result(r)
        results.append(r)
    return results
