"""Fibration classes, quasi-categories, isofibrations, hom-spaces and equivalence checks."""
from __future__ import annotations

from dataclasses import dataclass, field

from .anodyne import is_absolute_wce
from .homotopy import (HomotopyError, ho_functor, homotopy_category, is_equivalence_on_ho,
                       iso_lifting_failure)
from .lifting import default_max_dim, has_rlp, iter_lifts
from .limits import from_levels, inherit_truncation, product, pullback
from .maps import SimplicialMap, compose, surjective_on_vertices, to_point
from .sset import Simplex
from .standard import classifying_map, empty, simplex
from .verdict import EXHAUSTED, NO, YES_BOUNDED, YES_CERTIFIED, Verdict, combine

KIND_FAMILY = {
    "inner": "inner_horns",
    "left": "left_horns",
    "right": "right_horns",
    "kan": "all_horns",
    "trivial": "boundaries",
}


class PreconditionError(ValueError):
    pass


def classify_fibration(p, kind, max_dim=None):
    if kind not in KIND_FAMILY:
        raise ValueError(f"unknown fibration kind {kind!r}")
    return has_rlp(p, KIND_FAMILY[kind], max_dim)


def is_quasicategory(X, max_dim=None):
    return classify_fibration(to_point(X), "inner", max_dim)


def _require(v, what):
    if v.status == NO:
        raise PreconditionError(f"{what} fails: {v.note}")


# -- isofibrations --------------------------------------------------------------

def is_isofibration(p, max_dim=None, check_objects=True):
    """Inner fibration whose homotopy functor lifts isomorphisms."""
    if check_objects:
        _require(is_quasicategory(p.source, max_dim), "source quasi-category check")
        _require(is_quasicategory(p.target, max_dim), "target quasi-category check")
    inner = classify_fibration(p, "inner", max_dim)
    if inner.status == NO:
        return inner
    F = ho_functor(p)
    fail = iso_lifting_failure(F)
    if fail is not None:
        x, phi, _ = fail
        return Verdict(NO, witness={"object": x, "isomorphism": phi, "functor": F},
                       note=f"isomorphism {phi} out of the image of {x} has no lift")
    return combine([inner, Verdict(YES_CERTIFIED)], note="inner fibration lifting isomorphisms")


def fibre_map(f, p, q, b):
    """Restriction of ``f: X -> Y`` (over ``B``) to the fibres over a vertex ``b``."""
    from .limits import fibre
    Xb, Yb = fibre(p, b), fibre(q, b)
    return SimplicialMap(Xb, Yb, {g: f.assignment[g] for g in Xb.dim_of}).check()


def fibrewise_isofibration(f, p, q, max_dim=None):
    """Inner fibration over ``B`` that is an isofibration on every vertex fibre."""
    _require(classify_fibration(p, "inner", max_dim), "inner-fibration check of p")
    _require(classify_fibration(q, "inner", max_dim), "inner-fibration check of q")
    verdicts = [classify_fibration(f, "inner", max_dim)]
    if verdicts[0].status == NO:
        return verdicts[0]
    for b in p.target.vertices():
        v = is_isofibration(fibre_map(f, p, q, b), max_dim, check_objects=False)
        if v.status == NO:
            v.note = f"over vertex {b}: {v.note}"
            return v
        verdicts.append(v)
    return combine(verdicts, note="fibrewise isofibration")


# -- hom-spaces -------------------------------------------------------------------

def _label(z):
    if z.nondegenerate:
        return z.gen
    return f"{z.gen}@{''.join(str(v) for v in z.epi)}"


def hom_space(X, x, y, max_dim=None):
    """Right hom-space: ``n``-simplices are ``(n+1)``-simplices of ``X`` with
    front ``n``-face totally degenerate at ``x`` and last vertex ``y``."""
    if isinstance(x, Simplex):
        x = x.gen
    if isinstance(y, Simplex):
        y = y.gen
    top = X.dimension
    N = top if max_dim is None else min(max_dim, top)
    N = max(N, 0)
    levels = {}
    for n in range(N + 1):
        front = tuple(range(n + 1))
        want = Simplex(x, (0,) * (n + 1))
        levels[n] = [s for s in X.level(n + 1)
                     if X.act(s, (n + 1,)).gen == y and X.act(s, front) == want]
    H = from_levels(levels, lambda z, n, i: X.face(z, i), lambda z, n, i: X.degen(z, i),
                    name=f"Hom_{X.name}({x},{y})", label=_label,
                    meta={"hom_convention": "right"})
    if N < top or X.meta.get("truncated"):
        H.meta["truncated"] = True
        H.meta["truncation"] = N
    return H


def hom_space_over_edge(p, x, y, f, max_dim=None):
    """Hom-space from ``x`` to ``y`` inside the pullback ``X_f`` of ``p`` along ``f``."""
    B = p.target
    if isinstance(f, str):
        f = Simplex(f, (0, 1))
    if isinstance(x, str):
        x = Simplex(x, (0,))
    if isinstance(y, str):
        y = Simplex(y, (0,))
    if p.apply(x) != B.vertex(f, 0) or p.apply(y) != B.vertex(f, 1):
        raise PreconditionError("endpoints do not lie over the ends of the edge")
    pb = pullback(p, classifying_map(B, f))
    xs = pb.pair(x, Simplex("0", (0,)))
    ys = pb.pair(y, Simplex("1", (0,)))
    return hom_space(pb.obj, xs, ys, max_dim)


def is_contractible_kan(K, max_dim=None):
    return has_rlp(to_point(K), "boundaries", max_dim)


def _components(K):
    parent = {v: v for v in K.vertices()}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v
    for e in K.gens(1):
        a, b = find(K.faces[e][0].gen), find(K.faces[e][1].gen)
        if a != b:
            parent[a] = b
    return {v: find(v) for v in parent}


def kan_equivalence(g, max_dim=None):
    """Bounded homotopy-equivalence check for a map between Kan complexes.

    A map that is not bijective on components is refuted; otherwise the map
    is accepted when it is a (bounded) trivial fibration, after factorization
    if needed, or when both sides are contractible.
    """
    K, L = g.source, g.target
    cK, cL = _components(K), _components(L)
    img = {}
    for v in K.vertices():
        img.setdefault(cK[v], set()).add(cL[g.assignment[v].gen])
    pi0 = {k: next(iter(s)) for k, s in img.items()}
    if len(set(pi0.values())) != len(pi0) or set(pi0.values()) != set(cL.values()):
        return Verdict(NO, witness={"components": (sorted(set(cK.values())),
                                                   sorted(set(cL.values())))},
                       note="not a bijection on path components")
    if K.is_empty() and L.is_empty():
        return Verdict(YES_CERTIFIED, note="empty spaces")
    v = is_absolute_wce(g, dim_budget=max_dim)
    if v.is_yes:
        return v
    a, b = is_contractible_kan(K, max_dim), is_contractible_kan(L, max_dim)
    if a.is_yes and b.is_yes:
        return combine([a, b], note="both sides contractible")
    return Verdict(EXHAUSTED, note="equivalence undecided within budget")


def qcat_equivalence(f, max_dim=None):
    """Essential surjectivity on ho plus hom-space equivalences for all vertex pairs."""
    X, Y = f.source, f.target
    _require(is_quasicategory(X, max_dim), "source quasi-category check")
    _require(is_quasicategory(Y, max_dim), "target quasi-category check")
    F = ho_functor(f)
    D = F.target.category
    img = set(F.on_objects.values())
    for d in D.objects:
        if not any(D.is_iso(m) for c in img for m in D.hom(c, d)):
            return Verdict(NO, witness={"object": d}, note=f"{d} is not in the essential image")
    parts = []
    for a in X.vertices():
        for b in X.vertices():
            H1 = hom_space(X, a, b, max_dim)
            H2 = hom_space(Y, f.assignment[a].gen, f.assignment[b].gen, max_dim)
            g = _hom_map(f, H1, H2)
            v = kan_equivalence(g, max_dim)
            if v.status == NO:
                v.note = f"hom {a} -> {b}: {v.note}"
                return v
            parts.append(v)
    ok, why = is_equivalence_on_ho(F)
    if not ok:
        return Verdict(NO, witness={"functor": F}, note=why)
    return combine(parts, note="essentially surjective and fully faithful")


def _hom_map(f, H1, H2):
    """Map of right hom-spaces induced by ``f``; elements are simplices of the ambient."""
    nf2 = H2.meta["_nf"]
    el = H1.meta["_element_of"]
    assign = {g: nf2(f.apply(el[g][1]), d) for g, d in H1.dim_of.items()}
    return SimplicialMap(H1, H2, assign).check()


# -- inn2triv and paraequiv ------------------------------------------------------

@dataclass
class ConditionReport:
    verdicts: dict
    agreement: bool
    notes: dict = field(default_factory=dict)

    def statuses(self):
        return {k: v.status for k, v in self.verdicts.items()}


def _agree(verdicts):
    decided = [v for v in verdicts if v.status != EXHAUSTED]
    return len({v.is_yes for v in decided}) <= 1


def check_inn2triv(p, max_dim=None):
    """Trivial fibration (i), edgewise pullbacks (ii), surjectivity plus contractible homs (iii)."""
    _require(classify_fibration(p, "inner", max_dim), "inner-fibration check")
    B = p.target
    v1 = classify_fibration(p, "trivial", max_dim)
    parts2 = []
    for f in B.level(1):
        pb = pullback(p, classifying_map(B, f))
        v = classify_fibration(pb.proj_Y, "trivial", max_dim)
        if v.status == NO:
            v.note = f"over edge {f!r}: {v.note}"
            parts2 = [v]
            break
        parts2.append(v)
    v2 = combine(parts2) if parts2 else Verdict(YES_CERTIFIED, note="no edges")
    if not surjective_on_vertices(p):
        v3 = Verdict(NO, witness={"reason": "not surjective on vertices"},
                     note="some vertex of the base has an empty fibre")
    else:
        parts3 = []
        for f in B.level(1):
            a, b = B.vertex(f, 0), B.vertex(f, 1)
            xs = [x for x in p.source.vertices() if p.assignment[x] == a]
            ys = [y for y in p.source.vertices() if p.assignment[y] == b]
            for x in xs:
                for y in ys:
                    H = hom_space_over_edge(p, x, y, f, max_dim)
                    v = is_contractible_kan(H, max_dim)
                    if v.status == NO:
                        v.witness = {"edge": f, "x": x, "y": y, "hom_space": H,
                                     "square": v.witness}
                        v.note = f"Hom over {f!r} from {x} to {y} is not contractible"
                        parts3 = [v]
                        break
                    parts3.append(v)
                if parts3 and parts3[-1].status == NO:
                    break
            if parts3 and parts3[-1].status == NO:
                break
        v3 = combine(parts3) if parts3 else Verdict(YES_CERTIFIED)
    vs = {"i": v1, "ii": v2, "iii": v3}
    return ConditionReport(vs, _agree(vs.values()), {"hom_convention": "right"})


def fun_over(B, Xp, Yq, max_dim=None):
    """``Fun_B((X,p),(Y,q))``: level ``n`` is the set of maps ``Delta[n] x X -> Y`` over ``B``."""
    X, p = Xp
    Y, q = Yq
    N = 2 if max_dim is None else max_dim
    prods, levels, elems = {}, {}, {}
    for n in range(N + 2):
        prods[n] = product(simplex(n), X)
    for n in range(N + 1):
        P = prods[n]
        over = compose(p, P.proj_Y)
        e = SimplicialMap(empty(), P.obj, {})
        levels[n] = [tuple(sorted(d.items())) for d in iter_lifts(e, q, {}, over)]
        elems[n] = {z: i for i, z in enumerate(levels[n])}

    def op_map(n_from, n_to, values):
        P, Q = prods[n_from], prods[n_to]
        from .standard import simplex_map
        delta = simplex_map(values, n_from, n_to)
        return Q.lift(compose(delta, P.proj_X), P.proj_Y)

    cache = {}

    def face(z, n, i):
        key = ("d", n, i)
        if key not in cache:
            vals = [v if v < i else v + 1 for v in range(n)]
            cache[key] = op_map(n - 1, n, vals)
        m = cache[key]
        zz = SimplicialMap(prods[n].obj, Y, dict(z))
        return tuple(sorted(compose(zz, m).assignment.items()))

    def degen(z, n, i):
        key = ("s", n, i)
        if key not in cache:
            vals = [v if v <= i else v - 1 for v in range(n + 2)]
            cache[key] = op_map(n + 1, n, vals)
        m = cache[key]
        zz = SimplicialMap(prods[n].obj, Y, dict(z))
        return tuple(sorted(compose(zz, m).assignment.items()))

    names = {}
    for n in range(N + 1):
        for z in levels[n]:
            names[(n, z)] = f"φ{n}.{elems[n][z]}"
    lvl_of = {}
    for n in range(N + 1):
        for z in levels[n]:
            lvl_of.setdefault(z, n)

    def label(z):
        return names[(lvl_of[z], z)]

    F = from_levels(levels, face, degen,
                    name=f"Fun_{B.name}({X.name},{Y.name})", label=label)
    F.meta["truncated"] = True
    F.meta["truncation"] = N
    return inherit_truncation(F, X, Y)


def check_paraequiv(u, p, q, max_dim=None):
    """Conditions (ii)-(iv) for a map ``u: X -> Y`` over ``B``; (i) is not computed."""
    _require(classify_fibration(p, "inner", max_dim), "inner-fibration check of p")
    _require(classify_fibration(q, "inner", max_dim), "inner-fibration check of q")
    B = p.target
    X, Y = p.source, q.source
    edges = list(B.level(1))
    v2parts, v3parts, v4parts = [], [], []
    for f in edges:
        c = classifying_map(B, f)
        pX, pY = pullback(p, c), pullback(q, c)
        uf = pY.lift(compose(u, pX.proj_X), pX.proj_Y)
        v = qcat_equivalence(uf, max_dim)
        v2parts.append(v)
        if v.status == NO:
            v.note = f"over edge {f!r}: {v.note}"
            break
    v2 = combine(v2parts)
    # (iii) simplicial hom out of (Delta[1], f)
    for f in edges:
        c = classifying_map(B, f)
        FX = fun_over(B, (simplex(1), c), (X, p), max_dim=2)
        FY = fun_over(B, (simplex(1), c), (Y, q), max_dim=2)
        g = _postcompose(FX, FY, u)
        try:
            v = qcat_equivalence(g, max_dim=1)
        except (PreconditionError, HomotopyError) as exc:
            v = Verdict(EXHAUSTED, note=f"simplicial hom not decidable here: {exc}")
        v3parts.append(v)
        if v.status == NO:
            v.note = f"Fun over {f!r}: {v.note}"
            break
    v3 = combine(v3parts)
    # (iv) fibrewise essential surjectivity and parametrised full faithfulness
    for b in B.vertices():
        fm = fibre_map(u, p, q, b)
        F = ho_functor(fm)
        D = F.target.category
        img = set(F.on_objects.values())
        miss = [d for d in D.objects
                if not any(D.is_iso(m) for c0 in img for m in D.hom(c0, d))]
        if miss:
            v4parts.append(Verdict(NO, witness={"vertex": b, "object": miss[0]},
                                   note=f"fibre over {b} misses {miss[0]} up to isomorphism"))
            break
        v4parts.append(Verdict(YES_CERTIFIED))
    if not any(v.status == NO for v in v4parts):
        for f in edges:
            a, b = B.vertex(f, 0), B.vertex(f, 1)
            for x in [x for x in X.vertices() if p.assignment[x] == a]:
                for y in [y for y in X.vertices() if p.assignment[y] == b]:
                    H1 = hom_space_over_edge(p, x, y, f, max_dim)
                    H2 = hom_space_over_edge(q, u.assignment[x].gen, u.assignment[y].gen, f,
                                             max_dim)
                    g = _edge_hom_map(u, f, H1, H2, p, q)
                    v = kan_equivalence(g, max_dim)
                    v4parts.append(v)
                    if v.status == NO:
                        v.note = f"Hom over {f!r} from {x} to {y}: {v.note}"
                        break
    v4 = combine(v4parts)
    vs = {"ii": v2, "iii": v3, "iv": v4}
    return ConditionReport(vs, _agree(vs.values()),
                           {"i": "not computed: no decision procedure for the model-structure "
                                 "weak equivalence"})


def _postcompose(FX, FY, u):
    """Map ``Fun_B(K, X) -> Fun_B(K, Y)`` given by composing with ``u``."""
    nfY = FY.meta["_nf"]
    el = FX.meta["_element_of"]
    assign = {}
    for g in FX.dim_of:
        n, z = el[g]
        assign[g] = nfY(tuple(sorted((k, u.apply(v)) for k, v in z)), n)
    return SimplicialMap(FX, FY, assign).check()


def _edge_hom_map(u, f, H1, H2, p, q):
    """Map of hom-spaces over an edge induced by ``u`` (pair simplices map componentwise)."""
    B = p.target
    c = classifying_map(B, f)
    pX, pY = pullback(p, c), pullback(q, c)
    uf = pY.lift(compose(u, pX.proj_X), pX.proj_Y)
    return _hom_map(uf, H1, H2)


def bounded_yes(note, cutoff=None):
    return Verdict(YES_BOUNDED, cutoff=cutoff, note=note)


def default_dim(*objs):
    return default_max_dim(*objs)
