"""Standard simplicial sets: simplices, boundaries, horns, spines, J and nerves."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .category import codiscrete, nerve, thin_nerve
from .maps import SimplicialMap, subcomplex
from .sset import FiniteSimplicialSet, Simplex, SimplicialSetError, nd


def vname(vertices, n):
    """Generator name of the face of ``Delta[n]`` spanned by ``vertices``."""
    if n < 10:
        return "".join(str(v) for v in vertices)
    return ".".join(str(v) for v in vertices)


@lru_cache(maxsize=None)
def simplex(n):
    if n < 0:
        raise SimplicialSetError("Delta[n] needs n >= 0")
    objs = [str(i) for i in range(n + 1)]
    X = thin_nerve(objs, lambda a, b: int(a) < int(b), None, f"Δ[{n}]",
                   sep="" if n < 10 else ".")
    X.meta["simplex"] = n
    return X


def _face_subcomplex(n, keep, name):
    D = simplex(n)
    gens = []
    for k in range(n + 1):
        for vs in combinations(range(n + 1), k + 1):
            if keep(set(vs)):
                gens.append(vname(vs, n))
    X = subcomplex(D, gens, name=name)
    X.meta["sub_of_simplex"] = n
    return X


@lru_cache(maxsize=None)
def boundary(n):
    return _face_subcomplex(n, lambda s: len(s) <= n, f"∂Δ[{n}]")


@lru_cache(maxsize=None)
def horn(n, k):
    if n < 1 or not 0 <= k <= n:
        raise SimplicialSetError(f"no horn Λ^{k}[{n}]: need n >= 1 and 0 <= k <= n")
    full = set(range(n + 1))
    return _face_subcomplex(n, lambda s: (s | {k}) != full, f"Λ^{k}[{n}]")


@lru_cache(maxsize=None)
def spine(n):
    return _face_subcomplex(
        n, lambda s: len(s) == 1 or (len(s) == 2 and max(s) - min(s) == 1), f"I[{n}]")


def J_truncated(d):
    """Nerve of the contractible groupoid on ``{0, 1}``, up to dimension ``d``."""
    X = thin_nerve(["0", "1"], lambda a, b: True, d, f"J≤{d}")
    X.meta["truncated"] = True
    X.meta["truncation"] = d
    X.meta["category"] = codiscrete(["0", "1"], name="Iso")
    X.meta["exact"] = False
    return X


def empty():
    return FiniteSimplicialSet("∅", {}, {}, validate=False)


def point():
    return simplex(0)


def inclusion_into_simplex(sub):
    n = sub.meta["sub_of_simplex"]
    D = simplex(n)
    return SimplicialMap(sub, D, {g: D.nd(g) for g in sub.dim_of})


def horn_inclusion(n, k):
    return inclusion_into_simplex(horn(n, k))


def boundary_inclusion(n):
    if n == 0:
        return SimplicialMap(empty(), simplex(0), {})
    return inclusion_into_simplex(boundary(n))


def spine_inclusion(n):
    return inclusion_into_simplex(spine(n))


def vertex_inclusion(n, v):
    """``Delta[0] -> Delta[n]`` picking vertex ``v``."""
    D = simplex(n)
    return SimplicialMap(simplex(0), D, {"0": Simplex(vname((v,), n), (0,))})


def final_vertex_inclusion(m):
    return vertex_inclusion(m, m)


def simplex_map(values, m, n):
    """The map ``Delta[m] -> Delta[n]`` induced by monotone ``values``."""
    S, T = simplex(m), simplex(n)
    assign = {}
    for g, d in S.dim_of.items():
        verts = [values[int(c)] for c in (g if m < 10 else g.split("."))]
        distinct = sorted(set(verts))
        epi = tuple(distinct.index(v) for v in verts)
        assign[g] = Simplex(vname(distinct, n), epi)
    return SimplicialMap(S, T, assign)


def classifying_map(X, x):
    """The map ``Delta[n] -> X`` picking the ``n``-simplex ``x``."""
    n = x.dimension
    D = simplex(n)
    assign = {}
    for g in D.dim_of:
        verts = tuple(int(c) for c in (g if n < 10 else g.split(".")))
        assign[g] = X.act(x, verts)
    return SimplicialMap(D, X, assign)


def standard(kind, *params, truncation=None):
    """Dispatch on ``kind`` in simplex/boundary/horn/spine/J_truncated/nerve."""
    if kind == "simplex":
        return simplex(int(params[0]))
    if kind == "boundary":
        return boundary(int(params[0]))
    if kind == "horn":
        return horn(int(params[0]), int(params[1]))
    if kind == "spine":
        return spine(int(params[0]))
    if kind in ("J", "J_truncated"):
        return J_truncated(int(params[0]))
    if kind == "nerve":
        return nerve(params[0], truncation=truncation)
    raise SimplicialSetError(f"unknown standard kind {kind!r}")


def family_members(family, max_dim):
    """Generating monomorphisms ``(label, map)`` of a named family up to ``max_dim``."""
    out = []
    for n in range(0, max_dim + 1):
        if family == "boundaries":
            out.append((f"b_{n}", boundary_inclusion(n)))
            continue
        if n < 1:
            continue
        for k in range(n + 1):
            inner = 0 < k < n
            if ((family == "inner_horns" and inner)
                    or (family == "left_horns" and k < n)
                    or (family == "right_horns" and k > 0)
                    or family == "all_horns"):
                out.append((f"h^{k}_{n}", horn_inclusion(n, k)))
    if family not in ("boundaries", "inner_horns", "left_horns", "right_horns", "all_horns"):
        raise SimplicialSetError(f"unknown family {family!r}")
    return out


def nd_simplex_of(n, vertices):
    return nd(vname(vertices, n), len(vertices) - 1)
