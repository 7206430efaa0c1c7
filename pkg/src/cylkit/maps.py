"""Simplicial maps between finite simplicial sets."""
from __future__ import annotations

from .sset import FiniteSimplicialSet, Simplex, SimplicialSetError, nd


class SimplicialMap:
    """A map determined by the images of the generators of its source.

    ``assignment[g]`` is a simplex of ``target`` of the same dimension as
    ``g``.  Any simplex ``g . e`` then goes to ``assignment[g] . e``.
    """

    __slots__ = ("source", "target", "assignment", "name", "meta")

    def __init__(self, source, target, assignment, name=None):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        self.name = name
        self.meta = {}

    def __call__(self, x):
        return self.apply(x)

    def apply(self, x):
        y = self.assignment[x.gen]
        ye = y.epi
        return Simplex(y.gen, tuple(ye[i] for i in x.epi))

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.assignment == other.assignment)

    def __hash__(self):
        return hash(tuple(sorted(self.assignment.items())))

    def __repr__(self):
        return f"SimplicialMap({self.source.name} -> {self.target.name})"

    def check(self):
        S, T = self.source, self.target
        missing = [g for g in S.dim_of if g not in self.assignment]
        if missing:
            raise SimplicialSetError(f"assignment misses generators {missing[:5]}")
        for g, d in S.dim_of.items():
            y = self.assignment[g]
            if not T.contains(y):
                raise SimplicialSetError(f"{g!r} is sent to {y!r}, not a simplex of {T.name}")
            if y.dimension != d:
                raise SimplicialSetError(
                    f"{g!r} has dimension {d} but its image has dimension {y.dimension}")
        for g, fs in S.faces.items():
            y = self.assignment[g]
            for i, f in enumerate(fs):
                if self.apply(f) != T.face(y, i):
                    raise SimplicialSetError(
                        f"map {S.name} -> {T.name} is not face compatible at "
                        f"generator {g!r}, face index {i}")
        return self


def make_map(source, target, assignment, *, validate=True, name=None):
    """Build a map; ``assignment`` values may be Simplex or ``(word, target)`` pairs."""
    amap = {}
    for g, v in assignment.items():
        if isinstance(v, Simplex):
            amap[g] = v
        elif isinstance(v, str):
            amap[g] = Simplex(v, tuple([0] * (source.dim_of[g] + 1))) \
                if target.dim_of.get(v) == 0 else nd(v, target.dim_of[v])
        else:
            word, tgt = v
            if tgt not in target.dim_of:
                raise SimplicialSetError(f"{g!r} is sent to unknown generator {tgt!r}")
            amap[g] = Simplex.from_word(tgt, word, target.dim_of[tgt])
    f = SimplicialMap(source, target, amap, name=name)
    if validate:
        f.check()
    return f


def identity_map(X):
    return SimplicialMap(X, X, {g: X.nd(g) for g in X.dim_of})


def compose(g, f):
    """``g o f``: apply ``f`` first."""
    if f.target != g.source:
        raise SimplicialSetError(
            f"cannot compose {g.source.name} -> {g.target.name} after "
            f"{f.source.name} -> {f.target.name}")
    return SimplicialMap(f.source, g.target,
                         {h: g.apply(y) for h, y in f.assignment.items()})


def to_point(X, point=None):
    """The unique map to the terminal simplicial set."""
    from .standard import simplex
    P = point or simplex(0)
    v = P.vertices()[0]
    return SimplicialMap(X, P, {g: Simplex(v, (0,) * (d + 1)) for g, d in X.dim_of.items()})


def from_empty(E, X):
    return SimplicialMap(E, X, {})


def inclusion(sub, X):
    """Name-preserving inclusion of a subcomplex."""
    return make_map(sub, X, {g: X.nd(g) for g in sub.dim_of})


def subcomplex(X, gens, name=None):
    """The subcomplex on a face-closed set of generators (names kept)."""
    gens = set(gens)
    for g in gens:
        for f in X.faces.get(g, ()):
            if f.gen not in gens:
                raise SimplicialSetError(f"generator set is not closed: {g!r} needs {f.gen!r}")
    by_dim = {}
    for g in gens:
        by_dim.setdefault(X.dim_of[g], []).append(g)
    return FiniteSimplicialSet(name or f"sub({X.name})", by_dim,
                               {g: X.faces[g] for g in gens if X.dim_of[g] > 0},
                               validate=False)


def closure(X, gens):
    """Smallest face-closed set of generators containing ``gens``."""
    out = set()
    stack = list(gens)
    while stack:
        g = stack.pop()
        if g in out:
            continue
        out.add(g)
        stack.extend(f.gen for f in X.faces.get(g, ()))
    return out


# -- properties ----------------------------------------------------------

def is_mono(f):
    """Generator criterion: injective on generators, each sent to a nondegenerate simplex."""
    seen = set()
    for y in f.assignment.values():
        if not y.nondegenerate or y.gen in seen:
            return False
        seen.add(y.gen)
    return True


def is_epi(f):
    hit = {y.gen for y in f.assignment.values()}
    return all(g in hit for g in f.target.dim_of)


def is_iso(f):
    return is_mono(f) and is_epi(f)


def image_gens(f):
    return {y.gen for y in f.assignment.values()}


def map_props(f, bound=None):
    """Levelwise injectivity/surjectivity checked on every level up to ``bound``.

    ``bound`` defaults to one more than the larger dimension; the generator
    criteria (:func:`is_mono`, :func:`is_epi`) are the independent route.
    """
    if bound is None:
        bound = max(f.source.dimension, f.target.dimension, 0) + 1
    mono = epi = True
    for n in range(bound + 1):
        src = f.source.level(n)
        img = [f.apply(x) for x in src]
        if len(set(img)) != len(img):
            mono = False
        if len(set(img)) != len(f.target.level(n)):
            epi = False
    v0 = {f.apply(x) for x in f.source.level(0)}
    return {
        "mono": mono,
        "epi": epi,
        "bijective_on_0": len(v0) == len(f.source.level(0)) == len(f.target.level(0)),
        "checked_to": bound,
    }


def surjective_on_vertices(f):
    return {f.assignment[v].gen for v in f.source.vertices()} == set(f.target.vertices())


def inverse(f):
    if not is_iso(f):
        raise SimplicialSetError("map is not an isomorphism")
    back = {y.gen: nd(g, f.source.dim_of[g]) for g, y in f.assignment.items()}
    return SimplicialMap(f.target, f.source, back)


# -- opposites -------------------------------------------------------------

def _rev(x):
    k = x.epi[-1]
    return Simplex(x.gen, tuple(k - v for v in reversed(x.epi)))


def opposite(X, name=None):
    """Reverse the vertex order of every simplex; generator names are kept."""
    faces = {}
    for g, fs in X.faces.items():
        d = X.dim_of[g]
        faces[g] = [_rev(fs[d - i]) for i in range(d + 1)]
    gens = {d: list(names) for d, names in enumerate(X.generators)}
    meta = {}
    if "category" in X.meta:
        meta["category"] = X.meta["category"].opposite()
        meta["exact"] = X.meta.get("exact", False)
        meta["truncation"] = X.meta.get("truncation")
    if X.meta.get("truncated"):
        meta["truncated"] = True
        meta["truncation"] = X.meta.get("truncation")
    return FiniteSimplicialSet(name or f"{X.name}^op", gens, faces, validate=False, meta=meta)


def opposite_map(f, source_op=None, target_op=None):
    S = source_op or opposite(f.source)
    T = target_op or opposite(f.target)
    return SimplicialMap(S, T, {g: _rev(y) for g, y in f.assignment.items()})


# -- isomorphism search ---------------------------------------------------

def find_isomorphism(X, Y, fixed=None):
    """An isomorphism ``X -> Y`` extending ``fixed`` (generator -> generator), or None."""
    if X.counts() != Y.counts():
        return None
    fixed = dict(fixed or {})
    order = [g for names in X.generators for g in names]
    free = [g for g in order if g not in fixed]
    assign = dict(fixed)
    used = set(fixed.values())

    # cheap invariants: number of cofaces per generator
    def coface_count(Z):
        c = {g: 0 for g in Z.dim_of}
        for fs in Z.faces.values():
            for f in fs:
                c[f.gen] += 1
        return c
    cx, cy = coface_count(X), coface_count(Y)

    def image(s):
        t = assign[s.gen]
        return Simplex(t, s.epi)

    def ok(g, h):
        if cx[g] != cy[h]:
            return False
        if X.dim_of[g] == 0:
            return True
        return all(image(f) == yf for f, yf in zip(X.faces[g], Y.faces[h]))

    for g, h in fixed.items():
        if Y.dim_of.get(h) != X.dim_of[g]:
            return None
    for g in fixed:
        if X.dim_of[g] > 0 and not all(f.gen in assign for f in X.faces[g]):
            continue
        if X.dim_of[g] > 0 and not ok(g, fixed[g]):
            return None

    def rec(idx):
        if idx == len(free):
            return True
        g = free[idx]
        for h in Y.gens(X.dim_of[g]):
            if h in used or not ok(g, h):
                continue
            assign[g] = h
            used.add(h)
            if rec(idx + 1):
                return True
            del assign[g]
            used.discard(h)
        return False

    import sys
    if len(free) + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(len(free) + 1000)
    if not rec(0):
        return None
    return SimplicialMap(X, Y, {g: nd(h, X.dim_of[g]) for g, h in assign.items()}).check()


def isomorphic(X, Y):
    return find_isomorphism(X, Y) is not None
