"""Finite categories and their nerves."""
from __future__ import annotations

from itertools import product

from .sset import FiniteSimplicialSet, Simplex, SimplicialSetError


class CategoryError(ValueError):
    pass


class FiniteCategory:
    """Objects, named morphisms, a composition table and identities.

    ``homs[(a, b)]`` lists the morphisms ``a -> b`` (identities included);
    ``composition[(g, f)]`` is ``g o f`` for composable ``f: a -> b``,
    ``g: b -> c``.
    """

    def __init__(self, objects, homs, composition, identities, name="C", validate=True):
        self.name = name
        self.objects = tuple(objects)
        self.homs = {k: tuple(v) for k, v in homs.items() if v}
        self.composition = dict(composition)
        self.identities = dict(identities)
        self.src = {}
        self.tgt = {}
        for (a, b), ms in self.homs.items():
            for m in ms:
                if m in self.src:
                    raise CategoryError(f"morphism {m!r} appears in two hom-sets")
                self.src[m] = a
                self.tgt[m] = b
        self._id_set = set(self.identities.values())
        if validate:
            self.validate()

    def __repr__(self):
        return f"FiniteCategory({self.name!r}, {len(self.objects)} objects, {len(self.src)} morphisms)"

    def morphisms(self):
        return sorted(self.src)

    def hom(self, a, b):
        return self.homs.get((a, b), ())

    def is_identity(self, m):
        return m in self._id_set

    def comp(self, g, f):
        return self.composition[(g, f)]

    def validate(self):
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise CategoryError("duplicate object names")
        for (a, b) in self.homs:
            if a not in objs or b not in objs:
                raise CategoryError(f"hom-set ({a!r}, {b!r}) names an unknown object")
        for a in self.objects:
            i = self.identities.get(a)
            if i is None or self.src.get(i) != a or self.tgt.get(i) != a:
                raise CategoryError(f"object {a!r} lacks an identity")
        for f in self.src:
            for g in self.src:
                if self.tgt[f] != self.src[g]:
                    continue
                h = self.composition.get((g, f))
                if h is None:
                    raise CategoryError(f"composite of {g!r} after {f!r} is missing")
                if self.src.get(h) != self.src[f] or self.tgt.get(h) != self.tgt[g]:
                    raise CategoryError(f"composite {g!r} o {f!r} = {h!r} has the wrong type")
        for f in self.src:
            if self.comp(self.identities[self.tgt[f]], f) != f:
                raise CategoryError(f"left identity law fails at {f!r}")
            if self.comp(f, self.identities[self.src[f]]) != f:
                raise CategoryError(f"right identity law fails at {f!r}")
        for f in self.src:
            for g in self.homs_from(self.tgt[f]):
                for h in self.homs_from(self.tgt[g]):
                    if self.comp(h, self.comp(g, f)) != self.comp(self.comp(h, g), f):
                        raise CategoryError(f"associativity fails at ({h!r}, {g!r}, {f!r})")

    def homs_from(self, a):
        out = []
        for (x, _), ms in self.homs.items():
            if x == a:
                out.extend(ms)
        return out

    def non_identity_graph_acyclic(self):
        """True when no chain of non-identity morphisms returns to its start."""
        succ = {a: set() for a in self.objects}
        for m in self.src:
            if not self.is_identity(m):
                if self.src[m] == self.tgt[m]:
                    return False
                succ[self.src[m]].add(self.tgt[m])
        state = {}

        def visit(a):
            state[a] = 1
            for b in succ[a]:
                s = state.get(b, 0)
                if s == 1 or (s == 0 and not visit(b)):
                    return False
            state[a] = 2
            return True

        return all(state.get(a) == 2 or visit(a) for a in self.objects)

    def opposite(self):
        homs = {(b, a): ms for (a, b), ms in self.homs.items()}
        comp = {(f, g): h for (g, f), h in self.composition.items()}
        return FiniteCategory(self.objects, homs, comp, self.identities,
                              name=f"{self.name}^op", validate=False)

    def is_iso(self, m):
        a, b = self.src[m], self.tgt[m]
        return any(self.comp(n, m) == self.identities[a] and self.comp(m, n) == self.identities[b]
                   for n in self.hom(b, a))

    def to_dict(self):
        return {
            "name": self.name,
            "objects": list(self.objects),
            "morphisms": [{"name": m, "source": self.src[m], "target": self.tgt[m]}
                          for m in self.morphisms()],
            "identities": {a: self.identities[a] for a in self.objects},
            "composition": [{"first": f, "second": g, "result": h}
                            for (g, f), h in sorted(self.composition.items())],
        }

    @classmethod
    def from_dict(cls, d):
        homs = {}
        for m in d["morphisms"]:
            homs.setdefault((m["source"], m["target"]), []).append(m["name"])
        comp = {(c["second"], c["first"]): c["result"] for c in d["composition"]}
        return cls(d["objects"], homs, comp, d["identities"], name=d.get("name", "C"))


# -- small constructions ----------------------------------------------------

def poset_category(objects, leq, name="P"):
    """The category of a preorder given by a relation closed under reflexivity/transitivity."""
    homs, comp, ids = {}, {}, {}
    sep = "" if all(len(str(a)) == 1 for a in objects) else ">"
    for a in objects:
        for b in objects:
            if a == b or leq(a, b):
                homs[(a, b)] = [f"{a}{sep}{b}" if a != b else f"id{a}"]
    for a in objects:
        ids[a] = f"id{a}"
    for (a, b), (f,) in homs.items():
        for (b2, c), (g,) in homs.items():
            if b2 == b:
                comp[(g, f)] = homs[(a, c)][0]
    return FiniteCategory(objects, homs, comp, ids, name=name)


def ordinal(n, name=None):
    objs = [str(i) for i in range(n + 1)]
    return poset_category(objs, lambda a, b: int(a) <= int(b), name=name or f"[{n}]")


def discrete(objects, name="D"):
    return poset_category(list(objects), lambda a, b: a == b, name=name)


def free_category(objects, edges, name="F"):
    """Free category on an acyclic quiver; ``edges`` are ``(name, source, target)``.

    A path ``e1`` then ``e2`` is named ``"e2.e1"`` (composition order).
    """
    out = {a: [] for a in objects}
    for e, s, t in edges:
        out[s].append((e, t))
    ids = {a: f"id{a}" for a in objects}
    homs, path_of, src, tgt = {}, {}, {}, {}
    for a in objects:
        stack = [(a, ())]
        while stack:
            cur, path = stack.pop()
            nm = ".".join(reversed(path)) if path else ids[a]
            homs.setdefault((a, cur), []).append(nm)
            path_of[nm], src[nm], tgt[nm] = path, a, cur
            if len(path) > len(edges):
                raise CategoryError("quiver has a cycle; free category is infinite")
            for e, t in out[cur]:
                stack.append((t, path + (e,)))
    comp = {}
    for g in path_of:
        for f in path_of:
            if tgt[f] == src[g]:
                p = path_of[f] + path_of[g]
                comp[(g, f)] = ".".join(reversed(p)) if p else ids[src[f]]
    return FiniteCategory(objects, {k: sorted(v) for k, v in homs.items()}, comp, ids, name=name)


def codiscrete(objects, name="K"):
    """Contractible groupoid: exactly one morphism between any two objects."""
    return poset_category(list(objects), lambda a, b: True, name=name)


def functor_check(F_obj, F_mor, C, D):
    """Raise unless the assignments form a functor ``C -> D``."""
    for a in C.objects:
        if F_mor[C.identities[a]] != D.identities[F_obj[a]]:
            raise CategoryError(f"identity of {a!r} not preserved")
    for m in C.src:
        if D.src[F_mor[m]] != F_obj[C.src[m]] or D.tgt[F_mor[m]] != F_obj[C.tgt[m]]:
            raise CategoryError(f"{m!r} sent to a morphism of the wrong type")
    for (g, f), h in C.composition.items():
        if D.comp(F_mor[g], F_mor[f]) != F_mor[h]:
            raise CategoryError(f"composite {g!r} o {f!r} not preserved")
    return True


def category_product(C, D, name=None):
    objs = [f"({a},{b})" for a in C.objects for b in D.objects]
    key = {(a, b): f"({a},{b})" for a in C.objects for b in D.objects}
    homs, ids, comp = {}, {}, {}
    for (a, a2), ms in C.homs.items():
        for (b, b2), ns in D.homs.items():
            homs[(key[a, b], key[a2, b2])] = [f"({m},{n})" for m in ms for n in ns]
    for a in C.objects:
        for b in D.objects:
            ids[key[a, b]] = f"({C.identities[a]},{D.identities[b]})"
    for (g, f), h in C.composition.items():
        for (g2, f2), h2 in D.composition.items():
            comp[(f"({g},{g2})", f"({f},{f2})")] = f"({h},{h2})"
    return FiniteCategory(objs, homs, comp, ids, name=name or f"{C.name}x{D.name}")


# -- nerves -------------------------------------------------------------------

CHAIN_SEP = "|"


def _chain_name(chain):
    return CHAIN_SEP.join(chain)


def chain_simplex(C, x0, chain):
    """EZ normal form of the nerve simplex given by a start object and morphism chain."""
    nd = [m for m in chain if not C.is_identity(m)]
    epi = [0]
    for m in chain:
        epi.append(epi[-1] + (0 if C.is_identity(m) else 1))
    if not nd:
        return Simplex(str(x0), tuple(epi))
    return Simplex(_chain_name(nd), tuple(epi))


def nerve(C, truncation=None, name=None):
    """Nerve of ``C``; exact when the non-identity morphisms form no cycle.

    Otherwise the nerve is infinite and only simplices of dimension at most
    ``truncation`` (default 3) are materialized.
    """
    exact = C.non_identity_graph_acyclic()
    if not exact and truncation is None:
        truncation = 3
    limit = truncation if truncation is not None else None
    non_id = {a: [m for m in C.homs_from(a) if not C.is_identity(m)] for a in C.objects}
    gens = {0: [str(a) for a in C.objects]}
    faces = {}
    frontier = [(m,) for a in C.objects for m in non_id[a]]
    n = 1
    while frontier and (limit is None or n <= limit):
        gens[n] = []
        nxt = []
        for chain in frontier:
            nm = _chain_name(chain)
            gens[n].append(nm)
            x0 = C.src[chain[0]]
            fs = []
            if n == 1:
                fs = [Simplex(str(C.tgt[chain[0]]), (0,)), Simplex(str(x0), (0,))]
            else:
                fs.append(chain_simplex(C, C.tgt[chain[0]], chain[1:]))
                for i in range(1, n):
                    merged = chain[:i - 1] + (C.comp(chain[i], chain[i - 1]),) + chain[i + 1:]
                    fs.append(chain_simplex(C, x0, merged))
                fs.append(chain_simplex(C, x0, chain[:-1]))
            faces[nm] = fs
            for m in non_id[C.tgt[chain[-1]]]:
                nxt.append(chain + (m,))
        frontier = nxt
        n += 1
    truncated = bool(frontier)
    meta = {"category": C, "exact": exact and not truncated, "truncation": truncation,
            "truncated": truncated}
    return FiniteSimplicialSet(name or f"N({C.name})", gens, faces, validate=False, meta=meta)


def nerve_functor(F_obj, F_mor, C, D, NC=None, ND=None):
    """Nerve of a functor as a map ``N(C) -> N(D)`` (up to the source truncation)."""
    from .maps import SimplicialMap
    NC = NC or nerve(C)
    ND = ND or nerve(D, truncation=NC.meta.get("truncation"))
    assign = {}
    for g, d in NC.dim_of.items():
        if d == 0:
            assign[g] = Simplex(str(F_obj[_obj_of(C, g)]), (0,))
        else:
            chain = g.split(CHAIN_SEP)
            x0 = C.src[chain[0]]
            assign[g] = chain_simplex(D, F_obj[x0], tuple(F_mor[m] for m in chain))
    return SimplicialMap(NC, ND, assign).check()


def _obj_of(C, name):
    for a in C.objects:
        if str(a) == name:
            return a
    raise KeyError(name)


def thin_nerve(objects, rel, limit, name, sep=None):
    """Nerve of a thin category: sequences with consecutive pairs in ``rel``.

    Nondegenerate simplices are the sequences with no repeated neighbours;
    they are named by concatenating object names.
    """
    if sep is None:
        sep = "" if all(len(str(o)) == 1 for o in objects) else "."
    objects = [str(o) for o in objects]
    succ = {a: [b for b in objects if b != a and rel(a, b)] for a in objects}

    def gname(seq):
        return sep.join(seq)

    def norm(seq):
        out = [seq[0]]
        epi = [0]
        for s in seq[1:]:
            if s != out[-1]:
                out.append(s)
            epi.append(len(out) - 1)
        return Simplex(gname(out), tuple(epi))

    gens = {0: list(objects)}
    faces = {}
    frontier = [(a,) for a in objects]
    n = 0
    truncated = False
    while True:
        nxt = [seq + (b,) for seq in frontier for b in succ[seq[-1]]]
        if not nxt:
            break
        n += 1
        if limit is not None and n > limit:
            truncated = True
            break
        gens[n] = []
        for seq in nxt:
            nm = gname(seq)
            gens[n].append(nm)
            faces[nm] = [norm(seq[:i] + seq[i + 1:]) for i in range(n + 1)]
        frontier = nxt
    X = FiniteSimplicialSet(name, gens, faces, validate=False,
                            meta={"truncated": truncated, "truncation": limit if truncated else None})
    if len(X.dim_of) != sum(len(v) for v in gens.values()):
        raise SimplicialSetError("ambiguous simplex names in thin nerve")
    return X


def all_chains_bounded(C):
    return C.non_identity_graph_acyclic()


def enumerate_functors(C, D):
    """All functors ``C -> D`` by brute force (tiny categories only)."""
    objs = list(C.objects)
    out = []
    for images in product(D.objects, repeat=len(objs)):
        F_obj = dict(zip(objs, images))
        mors = C.morphisms()
        choices = [D.hom(F_obj[C.src[m]], F_obj[C.tgt[m]]) for m in mors]
        for pick in product(*choices):
            F_mor = dict(zip(mors, pick))
            try:
                functor_check(F_obj, F_mor, C, D)
            except CategoryError:
                continue
            out.append((F_obj, F_mor))
    return out
