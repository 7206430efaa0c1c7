"""Seeded corpora: every random choice flows through one counted generator."""
from __future__ import annotations

import hashlib
import random
from itertools import combinations

from .anodyne import _expansion_moves
from .category import enumerate_functors, free_category, nerve, nerve_functor, poset_category
from .lifting import iter_lifts
from .maps import SimplicialMap, closure, from_empty, inclusion, subcomplex, to_point
from .standard import empty, horn, simplex, spine, vname


class CountedRandom(random.Random):
    """``random.Random`` that counts its draws and derives named child streams."""

    def __init__(self, seed=0):
        self.seed_value = seed
        self.draws = 0
        super().__init__(seed)

    def random(self):
        self.draws += 1
        return super().random()

    def getrandbits(self, k):
        self.draws += 1
        return super().getrandbits(k)

    def child(self, tag):
        h = hashlib.sha256(f"{self.seed_value}:{tag}".encode()).digest()
        return CountedRandom(int.from_bytes(h[:8], "big"))


# -- categories -------------------------------------------------------------------

def random_category(rng, max_objects=4, name="C"):
    """A random acyclic finite category: a poset or a free category on a DAG."""
    n = rng.randint(1, max_objects)
    objs = [f"x{i}" for i in range(n)]
    pairs = list(combinations(objs, 2))
    if rng.random() < 0.5:
        rel = {p for p in pairs if rng.random() < 0.5}
        changed = True
        while changed:
            changed = False
            for (a, b) in sorted(rel):
                for (b2, c) in sorted(rel):
                    if b == b2 and (a, c) not in rel:
                        rel.add((a, c))
                        changed = True
        return poset_category(objs, lambda a, b: (a, b) in rel, name=name)
    edges = []
    for (a, b) in pairs:
        if len(edges) < 4 and rng.random() < 0.4:
            edges.append((f"e{len(edges)}", a, b))
    return free_category(objs, edges, name=name)


def random_nerve_map(rng, max_objects=3):
    """The nerve of a random functor between random small categories."""
    while True:
        C = random_category(rng, max_objects, name="C")
        D = random_category(rng, max_objects, name="D")
        fs = enumerate_functors(C, D)
        if fs:
            F_obj, F_mor = fs[rng.randrange(len(fs))]
            return nerve_functor(F_obj, F_mor, C, D, nerve(C), nerve(D))


def random_nerve_fibration(rng, max_objects=3):
    """A nerve map, or with probability 1/3 the nerve of an identity functor.

    Functors between acyclic categories are trivial fibrations on nerves only
    when they are isomorphisms, so identities supply the positive cases.
    """
    if rng.random() < 1 / 3:
        C = random_category(rng, max_objects, name="C")
        N = nerve(C)
        ids = {m: m for m in C.morphisms()}
        return nerve_functor({o: o for o in C.objects}, ids, C, C, N, N)
    return random_nerve_map(rng, max_objects)


# -- simplicial sets -------------------------------------------------------------

def random_subcomplex(rng, n, name=None, keep=0.5):
    """Face-closed subcomplex of ``Delta[n]`` generated by randomly chosen faces."""
    D = simplex(n)
    chosen = [g for g in D.all_generators() if rng.random() < keep * (0.6 ** D.dim_of[g])]
    chosen.append(vname((rng.randrange(n + 1),), n))
    return subcomplex(D, closure(D, chosen), name=name or f"R{n}")


def random_sset(rng, max_dim=3):
    kind = rng.randrange(3)
    if kind == 0:
        return random_subcomplex(rng, rng.randint(0, max_dim))
    if kind == 1:
        return nerve(random_category(rng, 3))
    return simplex(rng.randint(0, max_dim))


def random_simplex(rng, X, level):
    """A uniformly random ``level``-simplex of ``X`` (degenerate ones included)."""
    lv = X.level(level)
    return lv[rng.randrange(len(lv))]


def random_monotone(rng, m, n):
    """Random monotone values ``[m] -> [n]``."""
    return tuple(sorted(rng.randint(0, n) for _ in range(m + 1)))


def all_maps(S, X):
    return [SimplicialMap(S, X, a) for a in iter_lifts(from_empty(empty(), S), to_point(X), {},
                                                        to_point(S))]


# -- right cancellation -----------------------------------------------------------

def random_expansion(rng, B, start, steps):
    """Apply up to ``steps`` random inner elementary expansions to ``start`` inside ``B``."""
    S = set(start)
    for _ in range(steps):
        missing = [g for g in B.all_generators() if g not in S]
        moves = _expansion_moves(B, S, missing)
        if not moves:
            break
        sigma, _, tau = moves[rng.randrange(len(moves))]
        S |= {sigma, tau}
    return S


def random_cancellation_pair(rng, max_n=4):
    """Composable monos ``u: A -> B``, ``v: B -> Delta[n]`` built from inner expansions."""
    n = rng.randint(2, max_n)
    D = simplex(n)
    if rng.random() < 0.5 or n == 2:
        base = set(spine(n).dim_of)
    else:
        base = set(horn(n, rng.randint(1, n - 1)).dim_of)
    SA = random_expansion(rng, D, base, rng.randint(0, 3))
    SB = random_expansion(rng, D, SA, rng.randint(0, 4))
    A = subcomplex(D, SA, name=f"A{n}")
    B = subcomplex(D, SB, name=f"B{n}")
    return inclusion(A, B), inclusion(B, D)


# -- cylinders ---------------------------------------------------------------------

def random_split_cylinder(rng, max_n=3):
    """A random subcomplex of ``Delta[n]`` over ``Delta[1]``, split after a random vertex."""
    from .cylinders.core import split_cylinder
    while True:
        n = rng.randint(1, max_n)
        X = random_subcomplex(rng, n, keep=0.8)
        k = rng.randint(0, n - 1)
        zero = {vname((i,), n) for i in range(k + 1)}
        verts = set(X.vertices())
        if verts & zero and verts - zero:
            return split_cylinder(X, zero & verts, A="A", B="B")


def random_cylinder(rng):
    """A collage nerve, a split subcomplex of a simplex, or an exterior product."""
    from .cylinders.collage import collage_nerve, random_collage_profunctor
    from .cylinders.core import exterior_product
    kind = rng.randrange(3)
    if kind == 0:
        return collage_nerve(random_collage_profunctor(rng))
    if kind == 1:
        return random_split_cylinder(rng)
    A = random_subcomplex(rng, rng.randint(0, 2), name="A")
    B = random_subcomplex(rng, rng.randint(0, 2), name="B")
    M = simplex(rng.randint(0, 1))
    S = simplex(rng.randint(0, 1))
    ms, ss = all_maps(M, A), all_maps(S, B)
    return exterior_product(M, ms[rng.randrange(len(ms))], S, ss[rng.randrange(len(ss))],
                            A, B).cylinder


def cylinder_corpus(rng, count=10):
    return [random_cylinder(rng) for _ in range(count)]


def map_corpus(rng, count=10):
    """Maps for duality checks: horn/boundary inclusions, nerve maps, random face maps."""
    from .standard import boundary_inclusion, horn_inclusion
    out = [horn_inclusion(2, 1), horn_inclusion(2, 0), horn_inclusion(2, 2),
           boundary_inclusion(1), to_point(horn(2, 1))]
    while len(out) < count:
        if rng.random() < 0.5:
            out.append(random_nerve_map(rng))
        else:
            n = rng.randint(1, 3)
            X = random_subcomplex(rng, n, keep=0.8)
            out.append(inclusion(X, simplex(n)))
    return out


def ez_samples(rng, count):
    """``(X, x, c1, c2)``: a simplex and two composable monotone operators."""
    pool = [random_sset(rng) for _ in range(12)]
    pool = [X for X in pool if X.dimension >= 0]
    out = []
    while len(out) < count:
        X = pool[rng.randrange(len(pool))]
        k = rng.randint(0, 4)
        x = random_simplex(rng, X, k)
        m = rng.randint(0, 4)
        c1 = random_monotone(rng, m, k)
        j = rng.randint(0, 4)
        c2 = random_monotone(rng, j, m)
        out.append((X, x, c1, c2))
    return out


__all__ = ["CountedRandom", "random_category", "random_nerve_map", "random_nerve_fibration", "random_subcomplex",
           "random_sset", "random_simplex", "random_monotone", "all_maps", "random_expansion",
           "random_cancellation_pair", "random_split_cylinder", "random_cylinder",
           "cylinder_corpus", "map_corpus", "ez_samples"]
