"""Small object argument, inner anodyne certification and absolute equivalences."""
from __future__ import annotations

from dataclasses import dataclass, field

from .category import discrete, free_category, nerve, ordinal
from .lifting import (LiftingError, LiftingProblem, _bottoms, _family, _tops, default_max_dim,
                      has_rlp, iter_lifts, solve_lift)
from .maps import (SimplicialMap, compose, identity_map, image_gens, inclusion, is_iso,
                   is_mono, subcomplex, surjective_on_vertices, to_point)
from .limits import pushout
from .sset import SimplicialSetError
from .verdict import EXHAUSTED, NO, YES_BOUNDED, YES_CERTIFIED, Verdict


# -- small object argument ------------------------------------------------------

@dataclass
class Cell:
    label: str
    stage: int
    dimension: int
    top: dict
    bottom: dict
    new_generators: tuple


@dataclass
class CellComplexFactorization:
    """``u = right_part o left_part`` with ``left_part`` a finite relative cell complex."""

    source_map: SimplicialMap
    middle: object
    left_part: SimplicialMap
    right_part: SimplicialMap
    family: object
    cells: list
    status: str
    report: dict = field(default_factory=dict)

    def replay(self):
        """Re-attach every recorded cell and compare with the stored data."""
        members = dict(_family(self.family, self.report["dim_budget"]))
        M = self.source_map.source
        for c in self.cells:
            i = members[c.label]
            top = SimplicialMap(i.source, M, c.top).check()
            M = pushout(i, top).obj
        if M != self.middle:
            raise SimplicialSetError("replayed cells do not reproduce the middle object")
        if compose(self.right_part, self.left_part).assignment != self.source_map.assignment:
            raise SimplicialSetError("right_part o left_part differs from the factored map")
        self.right_part.check()
        self.left_part.check()
        return True


def _unfilled(members, n, r):
    out = []
    for lab, i in members:
        if i.target.dimension != n:
            continue
        for bottom in _bottoms(i.target, r.target):
            for top in _tops(i, r, bottom):
                if next(iter_lifts(i, r, top.assignment, bottom), None) is None:
                    out.append((lab, i, top, bottom))
    return out


def soa_factor(u, family="inner_horns", stage_budget=3, dim_budget=None):
    """Finite-stage small object argument.

    Each stage runs through the member dimensions in increasing order and,
    per dimension, attaches a cell for every square without a diagonal at
    once.  After ``stage_budget`` stages a final scan decides whether the
    right part still has unfilled squares (status EXHAUSTED) or not
    (status SATURATED).
    """
    if stage_budget < 1:
        raise ValueError("stage_budget must be positive")
    if dim_budget is None:
        dim_budget = default_max_dim(u.source, u.target)
    if dim_budget < 0:
        raise ValueError("dim_budget must be non-negative")
    members = _family(family, dim_budget)
    dims = sorted({i.target.dimension for _, i in members})
    left = identity_map(u.source)
    r = u
    cells = []
    stages = []
    status = "EXHAUSTED"
    for stage in range(1, stage_budget + 2):
        attached = 0
        for n in dims:
            batch = _unfilled(members, n, r)
            if stage > stage_budget:
                attached += len(batch)
                if batch:
                    break
                continue
            inc = identity_map(r.source)
            for lab, i, top, bottom in batch:
                top_now = compose(inc, top)
                po = pushout(i, top_now)
                r = po.mediate(bottom, r)
                inc = compose(po.inj_C, inc)
                left = compose(po.inj_C, left)
                new = tuple(sorted(po.new_names.values()))
                cells.append(Cell(lab, stage, n, dict(top_now.assignment),
                                  dict(bottom.assignment), new))
            attached += len(batch)
        stages.append({"stage": stage, "attached": attached})
        if attached == 0:
            status = "SATURATED"
            break
        if stage > stage_budget:
            break
    report = {"stage_budget": stage_budget, "dim_budget": dim_budget, "stages": stages,
              "cells": len(cells)}
    return CellComplexFactorization(u, r.source, left, r, family, cells, status, report)


# -- certificates ------------------------------------------------------------------

@dataclass
class RetractCertificate:
    """``u`` is a retract of the cell complex ``left`` via ``section`` and ``retraction``."""

    u: SimplicialMap
    left: SimplicialMap
    section: SimplicialMap
    retraction: SimplicialMap

    def verify(self):
        B = self.u.target
        if compose(self.retraction, self.section).assignment != identity_map(B).assignment:
            raise SimplicialSetError("retraction o section is not the identity")
        if compose(self.section, self.u).assignment != self.left.assignment:
            raise SimplicialSetError("section does not restrict to the cell complex inclusion")
        return True


@dataclass
class ExpansionCertificate:
    """A sequence of inner elementary expansions from the image of ``u`` to its codomain.

    Each step ``(sigma, k, tau)`` adds a nondegenerate ``n``-simplex
    ``sigma`` together with its missing inner face ``tau = d_k sigma``; that
    is a pushout of the inner horn inclusion ``h^k_n``.
    """

    u: SimplicialMap
    steps: list

    def replay(self):
        B = self.u.target
        S = set(image_gens(self.u))
        for sigma, k, tau in self.steps:
            n = B.dim_of[sigma]
            if not 0 < k < n:
                raise SimplicialSetError(f"step {sigma!r}: {k} is not an inner index")
            if sigma in S or tau in S:
                raise SimplicialSetError(f"step {sigma!r}: simplex already present")
            f = B.faces[sigma]
            if f[k] != B.nd(tau):
                raise SimplicialSetError(f"step {sigma!r}: face {k} is not {tau!r}")
            if any(f[i].gen not in S for i in range(n + 1) if i != k):
                raise SimplicialSetError(f"step {sigma!r}: horn not present")
            S.add(sigma)
            S.add(tau)
        if S != set(B.dim_of):
            raise SimplicialSetError("expansions do not exhaust the codomain")
        return True


def _expansion_moves(B, S, missing):
    moves = []
    for sigma in missing:
        n = B.dim_of[sigma]
        if n < 2:
            continue
        f = B.faces[sigma]
        absent = [i for i in range(n + 1) if f[i].gen not in S]
        if len(absent) != 1:
            continue
        k = absent[0]
        if 0 < k < n and f[k].nondegenerate:
            moves.append((sigma, k, f[k].gen))
    return moves


def find_inner_expansion(u, node_budget=200000):
    """Depth-first search for an inner elementary expansion sequence.

    Returns ``(steps or None, nodes explored, exhausted flag)``.
    """
    B = u.target
    start = frozenset(image_gens(u))
    failed = set()
    nodes = 0
    path = []

    def rec(S):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _Budget()
        missing = [g for g in B.all_generators() if g not in S]
        if not missing:
            return True
        if S in failed:
            return False
        moves = _expansion_moves(B, S, missing)
        # a step must pair a missing simplex with a face not added elsewhere
        for sigma, k, tau in moves:
            path.append((sigma, k, tau))
            if rec(S | {sigma, tau}):
                return True
            path.pop()
        failed.add(S)
        return False

    try:
        ok = rec(start)
    except _Budget:
        return None, nodes, True
    return (list(path) if ok else None), nodes, False


class _Budget(Exception):
    pass


def refutation_library():
    """Nerves of small categories; their maps to a point are inner fibrations."""
    out = []
    for C in (discrete(["a", "b"], name="{a,b}"), ordinal(1), ordinal(2),
              free_category(["a", "b"], [("f", "a", "b"), ("g", "a", "b")], name="parallel"),
              free_category(["a", "b", "c", "d"], [("f", "a", "b"), ("g", "b", "d"),
                                                   ("h", "a", "c"), ("k", "c", "d")],
                            name="square")):
        N = nerve(C)
        out.append(to_point(N))
    return out


def _vertex_refutation(u):
    """Witness for a map missing vertices: the full subcomplex on the image vertices."""
    B = u.target
    verts = {u.assignment[v].gen for v in u.source.vertices()}
    keep = [g for g in B.dim_of if set(B.vertices_of(B.nd(g))) <= verts]
    F = subcomplex(B, keep, name=f"full({B.name})")
    q = inclusion(F, B)
    if not is_mono(u):
        return {"inner_fibration": q, "reason": "not surjective on vertices"}
    top = SimplicialMap(u.source, F, u.assignment)
    prob = LiftingProblem(u, q, top, identity_map(B))
    v = solve_lift(prob)
    assert v.status == NO
    return {"inner_fibration": q, "square": prob, "reason": "not surjective on vertices"}


def library_refutation(u, library=None, top_budget=5000):
    """Search for an inner fibration ``E -> pt`` and a map ``A -> E`` not extending along ``u``."""
    for q in (library or refutation_library()):
        if q.target.dimension != 0 or q.target.size() != 1:
            continue
        pt = q.target
        bottom = to_point(u.target, pt)
        seen = 0
        for top in _tops(u, q, bottom):
            seen += 1
            if seen > top_budget:
                break
            if next(iter_lifts(u, q, top.assignment, bottom), None) is None:
                prob = LiftingProblem(u, q, top, bottom)
                return {"inner_fibration": q, "square": prob,
                        "reason": f"a map into {q.source.name} does not extend"}
    return None


def certify_inner_anodyne(u, stage_budget=3, dim_budget=None, node_budget=200000,
                          library=None):
    """Certify or refute that a monomorphism is inner anodyne.

    Order: isomorphism check, vertex refutation, nerve-library refutation,
    inner elementary expansion search, then the small object argument with
    the retract argument.  YES_CERTIFIED always carries a replayable
    certificate; NO carries a failing square against an inner fibration.
    """
    if not is_mono(u):
        raise LiftingError("certify_inner_anodyne needs a monomorphism")
    if is_iso(u):
        cert = ExpansionCertificate(u, [])
        cert.replay()
        return Verdict(YES_CERTIFIED, witness=cert, note="isomorphism")
    if not surjective_on_vertices(u):
        return Verdict(NO, witness=_vertex_refutation(u),
                       note="inner anodyne maps are bijective on vertices")
    ref = library_refutation(u, library)
    if ref is not None:
        return Verdict(NO, witness=ref, note=ref["reason"])
    steps, nodes, ran_out = find_inner_expansion(u, node_budget)
    if steps is not None:
        cert = ExpansionCertificate(u, steps)
        cert.replay()
        return Verdict(YES_CERTIFIED, witness=cert,
                       budget_report={"expansion_nodes": nodes},
                       note=f"{len(steps)} inner elementary expansions")
    fac = soa_factor(u, "inner_horns", stage_budget, dim_budget)
    fac.replay()
    prob = LiftingProblem(u, fac.right_part, fac.left_part, identity_map(u.target))
    v = solve_lift(prob)
    report = {"expansion_nodes": nodes, "expansion_budget_hit": ran_out, **fac.report,
              "soa_status": fac.status}
    if v.status == YES_CERTIFIED:
        cert = RetractCertificate(u, fac.left_part, v.witness, fac.right_part)
        cert.verify()
        return Verdict(YES_CERTIFIED, witness={"retract": cert, "factorization": fac},
                       budget_report=report, note="retract of a relative inner horn complex")
    return Verdict(EXHAUSTED, cutoff=fac.report["dim_budget"], budget_report=report,
                   note="no refutation and no certificate within budgets")


def is_absolute_wce(u, stage_budget=3, dim_budget=None, library=None):
    """Absolute weak categorical equivalence: inner anodyne followed by a trivial fibration."""
    if not surjective_on_vertices(u):
        return Verdict(NO, witness=_vertex_refutation(u),
                       note="absolute equivalences are surjective on vertices")
    if is_mono(u):
        v = certify_inner_anodyne(u, stage_budget, dim_budget, library=library)
        v.note = "monomorphism: absolute iff inner anodyne; " + v.note
        return v
    d = dim_budget if dim_budget is not None else default_max_dim(u.source, u.target)
    triv = has_rlp(u, "boundaries", d)
    if triv.is_yes:
        return Verdict(triv.status, cutoff=triv.cutoff, witness=triv.witness,
                       budget_report=triv.budget_report, note="trivial fibration")
    fac = soa_factor(u, "inner_horns", stage_budget, d)
    if fac.status != "SATURATED":
        return Verdict(EXHAUSTED, cutoff=d, budget_report=fac.report,
                       note="factorization did not saturate")
    rt = has_rlp(fac.right_part, "boundaries", d)
    if rt.is_yes:
        return Verdict(rt.status, cutoff=rt.cutoff, witness={"factorization": fac},
                       budget_report=fac.report,
                       note="inner anodyne cell complex followed by a trivial fibration")
    return Verdict(EXHAUSTED, cutoff=d, budget_report=fac.report,
                   note="right part of the factorization is not a trivial fibration")


@dataclass
class RightCancellationReport:
    u: Verdict
    vu: Verdict
    v: Verdict
    contradiction: bool

    def statuses(self):
        return {"u": self.u.status, "vu": self.vu.status, "v": self.v.status}


def right_cancellation_check(u, v, **budgets):
    """Certify ``u``, ``v o u`` and ``v``; flags ``u``, ``vu`` certified with ``v`` refuted."""
    if u.target != v.source:
        raise LiftingError("maps are not composable")
    if not (is_mono(u) and is_mono(v)):
        raise LiftingError("right cancellation check needs monomorphisms")
    vu = compose(v, u)
    ru = certify_inner_anodyne(u, **budgets)
    rvu = certify_inner_anodyne(vu, **budgets)
    rv = certify_inner_anodyne(v, **budgets)
    bad = ru.status == YES_CERTIFIED and rvu.status == YES_CERTIFIED and rv.status == NO
    return RightCancellationReport(ru, rvu, rv, bad)
