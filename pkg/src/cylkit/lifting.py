"""Lifting problems: exact search for diagonals and bounded lifting-property verdicts."""
from __future__ import annotations

import os
import sys
from dataclasses import dataclass

from .category import CategoryError, FiniteCategory, chain_simplex
from .maps import SimplicialMap, compose, is_iso, is_mono, make_map
from .sset import Simplex, SimplicialSetError
from .standard import classifying_map, family_members
from .verdict import EXHAUSTED, NO, YES_BOUNDED, YES_CERTIFIED, Verdict


class LiftingError(ValueError):
    pass


def default_max_dim(*objs, extra=2):
    env = os.environ.get("CYLKIT_MAX_DIM")
    if env:
        return int(env)
    return max([X.dimension for X in objs] + [0]) + extra


@dataclass
class LiftingProblem:
    left: SimplicialMap
    right: SimplicialMap
    top: SimplicialMap
    bottom: SimplicialMap

    def __post_init__(self):
        i, p, t, b = self.left, self.right, self.top, self.bottom
        if not is_mono(i):
            raise LiftingError("left leg of a lifting problem must be a monomorphism")
        if t.source != i.source or b.source != i.target or t.target != p.source \
                or b.target != p.target:
            raise LiftingError("square does not typecheck")
        for a in i.source.dim_of:
            x = i.source.nd(a)
            if p.apply(t.apply(x)) != b.apply(i.apply(x)):
                raise LiftingError(f"square does not commute at generator {a!r}")

    def is_diagonal(self, d):
        """Independent check that ``d`` makes both triangles commute."""
        d.check()
        A, B = self.left.source, self.left.target
        up = all(d.apply(self.left.apply(A.nd(a))) == self.top.assignment[a] for a in A.dim_of)
        down = all(self.right.apply(d.assignment[b]) == self.bottom.assignment[b]
                   for b in B.dim_of)
        return up and down

    def describe(self):
        return {
            "left": f"{self.left.source.name} -> {self.left.target.name}",
            "right": f"{self.right.source.name} -> {self.right.target.name}",
            "top": {k: repr(v) for k, v in sorted(self.top.assignment.items())},
            "bottom": {k: repr(v) for k, v in sorted(self.bottom.assignment.items())},
        }


def _candidate_index(p, n):
    cache = p.meta.setdefault("_lift_index", {})
    hit = cache.get(n)
    if hit is None:
        X = p.source
        hit = {}
        for faces, xs in X.face_index(n).items():
            for x in xs:
                hit.setdefault((faces, p.apply(x)), []).append(x)
        cache[n] = hit
    return hit


def iter_lifts(i, p, top_assign, bottom):
    """Yield every diagonal ``B -> X`` (as assignments) extending ``top`` over ``bottom``.

    Free generators of ``B`` are filled in dimension-increasing canonical order;
    candidates for a generator are the simplices of ``X`` with the already
    determined faces and the prescribed image under ``p``.
    """
    B = i.target
    fixed = {}
    for a, y in i.assignment.items():
        fixed[y.gen] = top_assign[a]
    free = [b for b in B.all_generators() if b not in fixed]
    d = dict(fixed)

    def image(s):
        y = d[s.gen]
        return Simplex(y.gen, tuple(y.epi[k] for k in s.epi))

    if len(free) + 200 > sys.getrecursionlimit():
        sys.setrecursionlimit(len(free) + 1000)

    def rec(idx):
        if idx == len(free):
            yield dict(d)
            return
        b = free[idx]
        n = B.dim_of[b]
        faces = tuple(image(s) for s in B.faces[b]) if n else ()
        for x in _candidate_index(p, n).get((faces, bottom.assignment[b]), ()):
            d[b] = x
            yield from rec(idx + 1)
        d.pop(b, None)

    yield from rec(0)


def solve_lift(problem, count=False, limit=None):
    """Decide a single lifting square exactly.

    Returns YES_CERTIFIED with the first diagonal in canonical order, or NO.
    With ``count`` the number of diagonals (up to ``limit``) is reported.
    """
    i, p = problem.left, problem.right
    if i.source.dim_of and set(problem.top.assignment) != set(i.source.dim_of):
        raise LiftingError("top map is incomplete")
    first, n = None, 0
    for d in iter_lifts(i, p, problem.top.assignment, problem.bottom):
        if first is None:
            first = d
        n += 1
        if not count or (limit is not None and n >= limit):
            break
    report = {"solutions": n} if count else {}
    if first is None:
        return Verdict(NO, witness=problem, budget_report=report, note="no diagonal exists")
    diag = SimplicialMap(i.target, p.source, first)
    if not problem.is_diagonal(diag):
        raise LiftingError("internal error: diagonal fails verification")
    return Verdict(YES_CERTIFIED, witness=diag, budget_report=report)


def lift_problem(i, p, top, bottom):
    return LiftingProblem(i, p, top, bottom)


# -- structural certificates --------------------------------------------------

def recognize_nerve(X):
    """Return a category ``C`` with ``X`` isomorphic to its (exact) nerve, else None.

    Objects are vertices and morphisms are edges; composites are read off
    the unique 2-simplex over each composable pair and the spine map to the
    nerve of the resulting category is checked to be an isomorphism.
    """
    cached = X.meta.get("_nerve_cat")
    if cached is not None:
        return cached or None
    res = _recognize(X)
    X.meta["_nerve_cat"] = res if res is not None else False
    return res


def _recognize(X):
    if X.meta.get("truncated"):
        return None
    verts = list(X.vertices())
    if not verts:
        return None
    edges = {}
    for v in verts:
        edges[f"id{v}"] = (v, v, Simplex(v, (0, 0)))
    for e in X.gens(1):
        t, s = X.faces[e][0].gen, X.faces[e][1].gen
        edges[e] = (s, t, X.nd(e))
    by_simplex = {sx: nm for nm, (_, _, sx) in edges.items()}
    homs = {}
    for nm, (s, t, _) in edges.items():
        homs.setdefault((s, t), []).append(nm)
    comp = {}
    tri = {}
    for (d0, d1, d2), xs in X.face_index(2).items():
        tri.setdefault((d0, d2), []).extend(xs)
    for f, (a, b, fx) in edges.items():
        for g, (b2, c, gx) in edges.items():
            if b2 != b:
                continue
            hits = tri.get((gx, fx), [])
            if len(hits) != 1:
                return None
            comp[(g, f)] = by_simplex[X.face(hits[0], 1)]
    ids = {v: f"id{v}" for v in verts}
    try:
        C = FiniteCategory(verts, homs, comp, ids, name=f"ho({X.name})")
    except CategoryError:
        return None
    if not C.non_identity_graph_acyclic():
        return None
    # spine map X -> N(C) must be a bijection on generators compatible with faces
    from .category import nerve
    N = nerve(C)
    if N.counts() != X.counts():
        return None
    assign = {}
    for g, d in X.dim_of.items():
        x = X.nd(g)
        if d == 0:
            assign[g] = Simplex(g, (0,))
            continue
        chain = tuple(by_simplex[X.act(x, (j, j + 1))] for j in range(d))
        assign[g] = chain_simplex(C, X.vertex(x, 0).gen, chain)
    f = SimplicialMap(X, N, assign)
    try:
        f.check()
    except SimplicialSetError:
        return None
    if not is_iso(f):
        return None
    return C


def is_exact_nerve(X):
    if X.meta.get("category") is not None and X.meta.get("exact"):
        return True
    return recognize_nerve(X) is not None


def _components(X):
    parent = {v: v for v in X.vertices()}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v
    for e in X.gens(1):
        a, b = find(X.faces[e][0].gen), find(X.faces[e][1].gen)
        if a != b:
            parent[a] = b
    return {v: find(v) for v in parent}


def is_full_subcomplex_inclusion(p, componentwise=False):
    """``p`` mono whose image contains every nondegenerate simplex spanned by image vertices.

    With ``componentwise`` only simplices whose vertices come from a single
    connected component of the source are required.
    """
    if not is_mono(p):
        return False
    Y = p.target
    img = {y.gen for y in p.assignment.values()}
    back = {p.assignment[v].gen: v for v in p.source.vertices()}
    comp = _components(p.source) if componentwise else None
    for g in Y.dim_of:
        if g in img:
            continue
        vs = Y.vertices_of(Y.nd(g))
        if not all(v in back for v in vs):
            continue
        if comp is None or len({comp[back[v]] for v in vs}) == 1:
            return False
    return True


def _member_shape(label):
    if label.startswith("b_"):
        return "b", int(label[2:]), None
    if label.startswith("h^"):
        k, n = label[2:].split("_")
        return "h", int(n), int(k)
    return "x", None, None


def _certificate(p, family, labels):
    """A structural reason that ``p`` lifts against every member, and the
    largest member dimension that still needs the exhaustive check."""
    if is_iso(p):
        return "isomorphism", -1
    shapes = [_member_shape(lab) for lab in labels]
    if any(s[0] == "x" for s in shapes):
        return None, None
    inner_only = all(s[0] == "h" and 0 < s[2] < s[1] for s in shapes)
    if inner_only and is_exact_nerve(p.source) and is_exact_nerve(p.target):
        return "map of nerves (unique inner horn fillers)", -1
    if is_full_subcomplex_inclusion(p, componentwise=True):
        # horns and boundaries with n >= 2 are connected and contain all vertices
        return "componentwise full subcomplex inclusion", 1
    if is_exact_nerve(p.source) and is_exact_nerve(p.target):
        # nerves are 2-coskeletal: higher squares extend uniquely
        return "map of nerves (2-coskeletal)", 3 if any(s[0] == "h" for s in shapes) else 2
    return None, None


def _family(family, max_dim):
    if isinstance(family, str):
        return family_members(family, max_dim)
    out = []
    for k, m in enumerate(family):
        if isinstance(m, tuple):
            out.append(m)
        else:
            out.append((m.name or f"member{k}", m))
    return out


def _tops(i, p, bottom):
    """All maps ``A -> X`` over ``bottom o i``."""
    from .standard import empty
    A = i.source
    E = empty()
    e = SimplicialMap(E, A, {})
    over = compose(bottom, i)
    for d in iter_lifts(e, p, {}, over):
        yield SimplicialMap(A, p.source, d)


def _bottoms(B, Y):
    """All maps ``B -> Y``; for a standard simplex these are the simplices of ``Y``."""
    if B.meta.get("simplex") is not None:
        for y in Y.level(B.dimension):
            yield classifying_map(Y, y)
        return
    from .maps import to_point
    from .standard import empty
    e = SimplicialMap(empty(), B, {})
    for d in iter_lifts(e, to_point(Y), {}, to_point(B)):
        yield SimplicialMap(B, Y, d)


def has_rlp(p, family, max_dim=None, certify=True, square_budget=None):
    """Bounded right lifting property of ``p`` against a generating family.

    Every square whose left leg is a family member of dimension at most
    ``max_dim`` is enumerated and decided.  A NO carries the failing square.
    """
    if max_dim is None:
        max_dim = default_max_dim(p.source, p.target)
    truncs = [X.meta.get("truncation") for X in (p.source, p.target)
              if X.meta.get("truncated") and X.meta.get("truncation") is not None]
    if truncs and min(truncs) < max_dim:
        # squares beyond a truncation level say nothing about the represented object
        max_dim = min(truncs)
    members = _family(family, max_dim)
    labels = [lab for lab, _ in members]
    cert, check_to = (None, None)
    if certify:
        cert, check_to = _certificate(p, family, labels)
    truncated = bool(p.source.meta.get("truncated") or p.target.meta.get("truncated"))
    squares = 0
    for lab, i in members:
        n = i.target.dimension
        if cert is not None and _member_shape(lab)[1] is not None and n > check_to:
            continue
        for bottom in _bottoms(i.target, p.target):
            for top in _tops(i, p, bottom):
                squares += 1
                if square_budget is not None and squares > square_budget:
                    return Verdict(EXHAUSTED, cutoff=max_dim,
                                   budget_report={"squares": squares, "max_dim": max_dim},
                                   note="square budget exhausted")
                prob = LiftingProblem(i, p, top, bottom)
                found = next(iter_lifts(i, p, top.assignment, bottom), None)
                if found is None:
                    return Verdict(NO, cutoff=max_dim, witness={"member": lab, "square": prob},
                                   budget_report={"squares": squares, "max_dim": max_dim},
                                   note=f"unfillable square against {lab}")
    report = {"squares": squares, "max_dim": max_dim, "members": len(members)}
    if cert is not None:
        if truncated:
            return Verdict(YES_BOUNDED, cutoff=max_dim, witness={"certificate": cert},
                           budget_report=report,
                           note=f"{cert}; bounded because an object is a truncation")
        return Verdict(YES_CERTIFIED, witness={"certificate": cert}, budget_report=report,
                       note=cert)
    return Verdict(YES_BOUNDED, cutoff=max_dim, budget_report=report,
                   note=f"all squares up to dimension {max_dim} fill")


def explicit_square(i, p, top, bottom):
    """Convenience constructor accepting plain assignments."""
    t = make_map(i.source, p.source, top)
    b = make_map(i.target, p.target, bottom)
    return LiftingProblem(i, p, t, b)
