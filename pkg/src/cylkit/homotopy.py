"""Homotopy categories of quasi-categories and induced functors."""
from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory


class HomotopyError(ValueError):
    pass


def _edges(X):
    return list(X.level(1))


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@dataclass
class HomotopyCategory:
    """``ho(X)``: vertices, and edges modulo the relation generated by 2-simplices.

    ``category`` is the resulting FiniteCategory; ``class_of`` sends every
    1-simplex of ``X`` to its class name.
    """

    X: object
    category: FiniteCategory
    class_of: dict
    witnesses: dict

    @property
    def objects(self):
        return self.category.objects

    @property
    def homs(self):
        return self.category.homs

    def cls(self, edge):
        return self.class_of[edge]

    def is_iso(self, m):
        return self.category.is_iso(m)


def homotopy_category(X):
    """Compute ``ho(X)``; raises when composition is not well defined on classes."""
    edges = _edges(X)
    parent = {e: e for e in edges}
    tri = list(X.level(2))
    faces = {s: X.faces_of(s) for s in tri}
    for s in tri:
        d0, d1, d2 = faces[s]
        if not d0.nondegenerate:
            a, b = _find(parent, d1), _find(parent, d2)
            if a != b:
                parent[a] = b
        if not d2.nondegenerate:
            a, b = _find(parent, d1), _find(parent, d0)
            if a != b:
                parent[a] = b
    classes = {}
    for e in edges:
        classes.setdefault(_find(parent, e), []).append(e)
    names = {}
    for root, members in classes.items():
        degen = [e for e in members if not e.nondegenerate]
        if degen:
            nm = f"id{degen[0].gen}"
        else:
            nm = min(e.gen for e in members)
        for e in members:
            names[e] = nm
    src = {e: X.vertex(e, 0).gen for e in edges}
    tgt = {e: X.vertex(e, 1).gen for e in edges}
    homs = {}
    for e in edges:
        homs.setdefault((src[e], tgt[e]), set()).add(names[e])
    homs = {k: sorted(v) for k, v in homs.items()}
    comp, witnesses = {}, {}
    for s in tri:
        d0, d1, d2 = faces[s]
        key = (names[d0], names[d2])
        val = names[d1]
        if key in comp and comp[key] != val:
            raise HomotopyError(
                f"composition of {key[0]} after {key[1]} is not well defined on classes")
        if key not in comp:
            comp[key] = val
            witnesses[key] = s
    ids = {v: f"id{v}" for v in X.vertices()}
    # every composable pair of classes needs a composite
    by_src = {}
    for (a, b), ms in homs.items():
        for m in ms:
            by_src.setdefault(a, []).append((m, b))
    for (a, b), ms in homs.items():
        for f in ms:
            for g, c in by_src.get(b, ()):
                if (g, f) not in comp:
                    raise HomotopyError(f"no 2-simplex composes {g} after {f}; not a quasi-category")
    C = FiniteCategory(list(X.vertices()), homs, comp, ids, name=f"ho({X.name})")
    return HomotopyCategory(X, C, names, witnesses)


@dataclass
class HoFunctor:
    source: HomotopyCategory
    target: HomotopyCategory
    on_objects: dict
    on_morphisms: dict

    def check(self):
        C, D = self.source.category, self.target.category
        for m in C.morphisms():
            fm = self.on_morphisms[m]
            if D.src[fm] != self.on_objects[C.src[m]] or D.tgt[fm] != self.on_objects[C.tgt[m]]:
                raise HomotopyError(f"{m} is sent to a morphism with the wrong ends")
        for (g, f), h in C.composition.items():
            if D.comp(self.on_morphisms[g], self.on_morphisms[f]) != self.on_morphisms[h]:
                raise HomotopyError(f"functoriality fails at {g} o {f}")
        return self


def ho_functor(p, hoX=None, hoY=None):
    hoX = hoX or homotopy_category(p.source)
    hoY = hoY or homotopy_category(p.target)
    objs = {v: p.assignment[v].gen for v in p.source.vertices()}
    mors = {}
    for e, nm in hoX.class_of.items():
        img = hoY.class_of[p.apply(e)]
        if mors.setdefault(nm, img) != img:
            raise HomotopyError(f"{p} does not respect the homotopy relation at {nm}")
    return HoFunctor(hoX, hoY, objs, mors).check()


def iso_lifts(F, x, phi):
    """Isomorphisms out of ``x`` in the source sent to ``phi``."""
    C = F.source.category
    return [m for m in C.morphisms()
            if C.src[m] == x and C.is_iso(m) and F.on_morphisms[m] == phi]


def iso_lifting_failure(F, unique=False):
    """First (x, phi) without a lift (or with several, when ``unique``); None if all lift."""
    C, D = F.source.category, F.target.category
    for x in C.objects:
        fx = F.on_objects[x]
        for phi in D.morphisms():
            if D.src[phi] != fx or not D.is_iso(phi):
                continue
            lifts = iso_lifts(F, x, phi)
            if not lifts or (unique and len(lifts) > 1):
                return x, phi, lifts
    return None


def is_discrete_isofibration(F):
    """Every isomorphism out of ``F(x)`` lifts to exactly one isomorphism out of ``x``."""
    return iso_lifting_failure(F, unique=True) is None


def is_equivalence_on_ho(F):
    """Essential surjectivity and full faithfulness of a functor between finite categories."""
    C, D = F.source.category, F.target.category
    img = set(F.on_objects.values())
    for d in D.objects:
        if not any(D.is_iso(m) for c in img for m in D.hom(c, d)):
            return False, f"object {d} is not in the essential image"
    for a in C.objects:
        for b in C.objects:
            hs = C.hom(a, b)
            ts = D.hom(F.on_objects[a], F.on_objects[b])
            if sorted(F.on_morphisms[m] for m in hs) != sorted(ts):
                return False, f"not bijective on homs {a} -> {b}"
    return True, ""


def simplex_of_class(H, nm):
    for e, c in H.class_of.items():
        if c == nm:
            return e
    return None
