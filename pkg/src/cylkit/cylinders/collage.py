"""Profunctors, collage categories and their nerves as cylinders."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..category import CHAIN_SEP, CategoryError, FiniteCategory, free_category, nerve, poset_category
from ..maps import SimplicialMap
from ..sset import Simplex
from ..standard import simplex
from .core import make_cylinder


@dataclass
class Profunctor:
    """``values[(a, b)]`` with actions ``left[(f, x)]`` (``f: a' -> a`` in A) and
    ``right[(x, g)]`` (``g: b -> b'`` in B)."""

    source: FiniteCategory
    target: FiniteCategory
    values: dict
    left: dict = field(default_factory=dict)
    right: dict = field(default_factory=dict)

    def value(self, a, b):
        return tuple(self.values.get((a, b), ()))

    def elements(self):
        return {x: (a, b) for (a, b), xs in self.values.items() for x in xs}

    def check(self):
        A, B = self.source, self.target
        where = self.elements()
        if len(where) != sum(len(v) for v in self.values.values()):
            raise CategoryError("profunctor elements must have distinct names")
        clash = set(where) & (set(A.src) | set(B.src))
        if clash:
            raise CategoryError(f"profunctor elements clash with morphism names: {sorted(clash)}")
        for x, (a, b) in where.items():
            for f in A.morphisms():
                if A.tgt[f] != a:
                    continue
                y = self.left.get((f, x))
                if y is None or where.get(y) != (A.src[f], b):
                    raise CategoryError(f"left action of {f!r} on {x!r} is missing or mistyped")
            for g in B.morphisms():
                if B.src[g] != b:
                    continue
                y = self.right.get((x, g))
                if y is None or where.get(y) != (a, B.tgt[g]):
                    raise CategoryError(f"right action of {g!r} on {x!r} is missing or mistyped")
            if self.left[(A.identities[a], x)] != x or self.right[(x, B.identities[b])] != x:
                raise CategoryError(f"identities do not act trivially on {x!r}")
        for x, (a, b) in where.items():
            for f in A.morphisms():
                if A.tgt[f] != a:
                    continue
                for f2 in A.morphisms():
                    if A.tgt[f2] == A.src[f]:
                        if self.left[(f2, self.left[(f, x)])] != self.left[(A.comp(f, f2), x)]:
                            raise CategoryError("left action is not associative")
                for g in B.morphisms():
                    if B.src[g] == b:
                        if self.right[(self.left[(f, x)], g)] != self.left[(f, self.right[(x, g)])]:
                            raise CategoryError("left and right actions do not commute")
            for g in B.morphisms():
                if B.src[g] != b:
                    continue
                for g2 in B.morphisms():
                    if B.src[g2] == B.tgt[g]:
                        if self.right[(self.right[(x, g)], g2)] != self.right[(x, B.comp(g2, g))]:
                            raise CategoryError("right action is not associative")
        return self

    def to_dict(self):
        return {
            "format": "Profunctor JSON v1",
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "values": [{"a": a, "b": b, "elements": list(xs)}
                       for (a, b), xs in sorted(self.values.items())],
            "left": [{"morphism": f, "element": x, "result": y}
                     for (f, x), y in sorted(self.left.items())],
            "right": [{"element": x, "morphism": g, "result": y}
                      for (x, g), y in sorted(self.right.items())],
        }

    @classmethod
    def from_dict(cls, d):
        A = FiniteCategory.from_dict(d["source"])
        B = FiniteCategory.from_dict(d["target"])
        values = {(v["a"], v["b"]): tuple(v["elements"]) for v in d["values"]}
        left = {(e["morphism"], e["element"]): e["result"] for e in d["left"]}
        right = {(e["element"], e["morphism"]): e["result"] for e in d["right"]}
        return cls(A, B, values, left, right).check()


def empty_profunctor(A, B):
    return Profunctor(A, B, {})


def collage_category(P, name=None):
    """Objects of A then B; ``hom(a, b) = P(a, b)``, nothing from B back to A."""
    A, B = P.source, P.target
    if set(A.objects) & set(B.objects):
        raise CategoryError("collage needs disjoint object names")
    homs = dict(A.homs)
    homs.update(B.homs)
    for (a, b), xs in P.values.items():
        if xs:
            homs[(a, b)] = tuple(xs)
    comp = dict(A.composition)
    comp.update(B.composition)
    for x, (a, b) in P.elements().items():
        for f in A.morphisms():
            if A.tgt[f] == a:
                comp[(x, f)] = P.left[(f, x)]
        for g in B.morphisms():
            if B.src[g] == b:
                comp[(g, x)] = P.right[(x, g)]
    ids = dict(A.identities)
    ids.update(B.identities)
    return FiniteCategory(list(A.objects) + list(B.objects), homs, comp, ids,
                          name=name or f"coll({A.name},{B.name})")


def full_subcategory(C, objs, name):
    keep = set(objs)
    homs = {k: v for k, v in C.homs.items() if k[0] in keep and k[1] in keep}
    mors = {m for v in homs.values() for m in v}
    comp = {k: v for k, v in C.composition.items() if k[0] in mors and k[1] in mors}
    ids = {a: C.identities[a] for a in objs}
    return FiniteCategory(list(objs), homs, comp, ids, name=name)


def profunctor_from_category(C, A_objs, B_objs):
    """Split a category with no morphisms from ``B_objs`` to ``A_objs`` into (A, B, P)."""
    for a in A_objs:
        for b in B_objs:
            if C.hom(b, a):
                raise CategoryError(f"morphism from {b!r} back to {a!r}")
    A = full_subcategory(C, A_objs, "A")
    B = full_subcategory(C, B_objs, "B")
    values = {(a, b): tuple(C.hom(a, b)) for a in A_objs for b in B_objs if C.hom(a, b)}
    left, right = {}, {}
    for (a, b), xs in values.items():
        for x in xs:
            for f in A.morphisms():
                if A.tgt[f] == a:
                    left[(f, x)] = C.comp(x, f)
            for g in B.morphisms():
                if B.src[g] == b:
                    right[(x, g)] = C.comp(g, x)
    return Profunctor(A, B, values, left, right).check()


def collage_nerve(P, truncation=None, name=None):
    """Nerve of the collage with its functor to ``[1]``, as a cylinder."""
    P.check()
    C = collage_category(P)
    N = nerve(C, truncation=truncation, name=name or f"N({C.name})")
    side = {a: 0 for a in P.source.objects}
    side.update({b: 1 for b in P.target.objects})
    by_name = {str(o): o for o in C.objects}
    assign = {}
    for g, d in N.dim_of.items():
        if d == 0:
            s = side[by_name[g]]
            assign[g] = Simplex(str(s), (0,))
            continue
        chain = g.split(CHAIN_SEP)
        objs = [C.src[chain[0]]] + [C.tgt[m] for m in chain]
        sides = tuple(side[o] for o in objs)
        if sides[0] == sides[-1]:
            assign[g] = Simplex(str(sides[0]), (0,) * (d + 1))
        else:
            assign[g] = Simplex("01", sides)
    p = SimplicialMap(N, simplex(1), assign).check()
    return make_cylinder(N, p, A=f"N({P.source.name})", B=f"N({P.target.name})")


def random_collage_profunctor(rng, max_objects=3, kind=None):
    """A profunctor extracted from a random acyclic category on ``A ⊔ B``.

    Edges only run forward within each side and from A to B.  ``kind`` picks a
    poset or a free category; both give finite nerves.
    """
    na = rng.randint(1, max_objects)
    nb = rng.randint(1, max_objects)
    A_objs = [f"a{i}" for i in range(na)]
    B_objs = [f"b{j}" for j in range(nb)]
    objs = A_objs + B_objs
    pairs = [(x, y) for i, x in enumerate(objs) for y in objs[i + 1:]]
    kind = kind or rng.choice(["poset", "free"])
    if kind == "poset":
        rel = {p for p in pairs if rng.random() < 0.5}
        # transitive closure
        changed = True
        while changed:
            changed = False
            for (x, y) in list(rel):
                for (y2, z) in list(rel):
                    if y2 == y and (x, z) not in rel:
                        rel.add((x, z))
                        changed = True
        C = poset_category(objs, lambda x, y: (x, y) in rel, name="C")
    else:
        edges = []
        budget = 4
        for (x, y) in pairs:
            if budget and rng.random() < 0.4:
                k = 2 if (x[0] != y[0] and rng.random() < 0.3) else 1
                for t in range(k):
                    edges.append((f"e{len(edges)}", x, y))
                budget -= 1
        C = free_category(objs, edges, name="C")
    return profunctor_from_category(C, A_objs, B_objs)
