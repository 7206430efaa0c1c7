"""Finite limits and colimits, joins and cell presentations."""
from __future__ import annotations

from dataclasses import dataclass, field

from .delta import degeneracy_values, face_values, surjections
from .maps import (SimplicialMap, compose, image_gens, inclusion, is_mono, subcomplex,
                   to_point)
from .sset import FiniteSimplicialSet, Simplex, SimplicialSetError, apply_epi, nd


def _primes(k):
    return "'" * k


def _tagger(names, taken, extra=None):
    """Smallest ``k`` so that ``name + "'"*k`` avoids ``taken`` for all names."""
    k = 0
    while True:
        tagged = {n + _primes(k) for n in names}
        if not tagged & taken and (extra is None or extra(k, tagged)):
            return k
        k += 1


def inherit_truncation(P, *objs):
    """Mark ``P`` as a truncation when any input is one."""
    ts = [X.meta.get("truncation") for X in objs if X.meta.get("truncated")]
    if ts:
        P.meta["truncated"] = True
        P.meta["truncation"] = min(t for t in ts if t is not None) if any(
            t is not None for t in ts) else None
    return P


def _epi_str(e):
    if e and max(e) >= 10:
        return ".".join(str(v) for v in e)
    return "".join(str(v) for v in e)


# -- coproducts and pushouts -------------------------------------------------

@dataclass
class Pushout:
    obj: FiniteSimplicialSet
    inj_B: SimplicialMap
    inj_C: SimplicialMap
    f: SimplicialMap
    g: SimplicialMap
    new_names: dict = field(default_factory=dict)

    def __iter__(self):
        return iter((self.obj, self.inj_B, self.inj_C))

    def mediate(self, hB, hC, check=True):
        """The unique map out of the pushout restricting to ``hB`` and ``hC``."""
        if check:
            for a in self.f.source.dim_of:
                x = self.f.source.nd(a)
                if hB.apply(self.f.apply(x)) != hC.apply(self.g.apply(x)):
                    raise SimplicialSetError("cocone does not commute")
        assign = {c: hC.assignment[c] for c in self.g.target.dim_of}
        for b, new in self.new_names.items():
            assign[new] = hB.assignment[b]
        return SimplicialMap(self.obj, hB.target, assign)


def pushout(f, g, name=None):
    """Pushout of ``B <-f- A -g-> C``; at least one leg must be a monomorphism.

    Generators of ``C`` keep their names; generators of ``B`` outside the
    image of ``f`` are added, primed if a name is taken.
    """
    if f.source != g.source:
        raise SimplicialSetError("pushout legs need a common source")
    if not is_mono(f):
        if not is_mono(g):
            raise SimplicialSetError("pushout needs at least one monomorphic leg")
        po = pushout(g, f, name=name)
        return _swap(po, f, g)
    A, B, C = f.source, f.target, g.target
    finv = {y.gen: a for a, y in f.assignment.items()}
    new = [b for names in B.generators for b in names if b not in finv]
    k = _tagger(new, set(C.dim_of))
    rename = {b: b + _primes(k) for b in new}

    def translate(s):
        if s.gen in finv:
            return g.apply(Simplex(finv[s.gen], s.epi))
        return Simplex(rename[s.gen], s.epi)

    gens = {d: list(names) for d, names in enumerate(C.generators)}
    faces = dict(C.faces)
    for b in new:
        d = B.dim_of[b]
        gens.setdefault(d, []).append(rename[b])
        if d > 0:
            faces[rename[b]] = [translate(s) for s in B.faces[b]]
    P = FiniteSimplicialSet(name or f"{B.name}⊔_{A.name}{C.name}", gens, faces, validate=False)
    inherit_truncation(P, B, C)
    inj_C = SimplicialMap(C, P, {c: nd(c, C.dim_of[c]) for c in C.dim_of})
    inj_B = SimplicialMap(B, P, {b: translate(B.nd(b)) for b in B.dim_of})
    return Pushout(P, inj_B, inj_C, f, g, rename)


class _SwappedPushout(Pushout):
    def mediate(self, hB, hC, check=True):
        return self._inner.mediate(hC, hB, check=check)


def _swap(po, f, g):
    out = _SwappedPushout(po.obj, po.inj_C, po.inj_B, f, g, {})
    out._inner = po
    return out


def coproduct(X, Y, name=None):
    """``X + Y`` with inclusions; names of ``X`` kept, clashing names of ``Y`` primed."""
    from .standard import empty
    E = empty()
    po = pushout(SimplicialMap(E, Y, {}), SimplicialMap(E, X, {}),
                 name=name or f"{X.name}+{Y.name}")
    return po.obj, po.inj_C, po.inj_B


# -- pullbacks and products -------------------------------------------------

def _jointly_injective(e1, e2):
    return not any(e1[j] == e1[j + 1] and e2[j] == e2[j + 1] for j in range(len(e1) - 1))


def _collapse(u, v):
    """Remove positions repeated in both ``u`` and ``v``; returns (u', v', pair epi)."""
    keep_u, keep_v, epi = [u[0]], [v[0]], [0]
    for j in range(1, len(u)):
        if u[j] == u[j - 1] and v[j] == v[j - 1]:
            epi.append(epi[-1])
        else:
            keep_u.append(u[j])
            keep_v.append(v[j])
            epi.append(epi[-1] + 1)
    return tuple(keep_u), tuple(keep_v), tuple(epi)


@dataclass
class Pullback:
    obj: FiniteSimplicialSet
    proj_X: SimplicialMap
    proj_Y: SimplicialMap
    f: SimplicialMap
    g: SimplicialMap
    index: dict

    def __iter__(self):
        return iter((self.obj, self.proj_X, self.proj_Y))

    def pair(self, x, y):
        """The simplex of the pullback with components ``x`` and ``y``."""
        if self.f.apply(x) != self.g.apply(y):
            raise SimplicialSetError("components do not agree over the base")
        u, v, epi = _collapse(x.epi, y.epi)
        name = self.index[(x.gen, y.gen, u, v)]
        return Simplex(name, epi)

    def lift(self, hX, hY):
        """The map into the pullback with components ``hX`` and ``hY``."""
        Z = hX.source
        return SimplicialMap(Z, self.obj, {z: self.pair(hX.assignment[z], hY.assignment[z])
                                           for z in Z.dim_of})


def pullback(f, g, name=None):
    """Fibre product of ``X -f-> B <-g- Y`` by enumeration of nondegenerate pairs."""
    if f.target != g.target:
        raise SimplicialSetError("pullback legs need a common target")
    X, Y = f.source, g.source
    gens, index, comps = {}, {}, {}
    for a in X.all_generators():
        p = X.dim_of[a]
        for b in Y.all_generators():
            q = Y.dim_of[b]
            for n in range(max(p, q), p + q + 1):
                for e1 in surjections(n, p):
                    fx = f.apply(Simplex(a, e1))
                    for e2 in surjections(n, q):
                        if not _jointly_injective(e1, e2):
                            continue
                        if fx != g.apply(Simplex(b, e2)):
                            continue
                        if n == p == q:
                            nm = f"({a},{b})"
                        else:
                            nm = f"({a},{b}:{_epi_str(e1)},{_epi_str(e2)})"
                        gens.setdefault(n, []).append(nm)
                        index[(a, b, e1, e2)] = nm
                        comps[nm] = (Simplex(a, e1), Simplex(b, e2))
    faces = {}
    for nm, (x, y) in comps.items():
        n = x.dimension
        if n == 0:
            continue
        fs = []
        for i in range(n + 1):
            fx, fy = X.act(x, face_values(i, n)), Y.act(y, face_values(i, n))
            u, v, epi = _collapse(fx.epi, fy.epi)
            fs.append(Simplex(index[(fx.gen, fy.gen, u, v)], epi))
        faces[nm] = fs
    P = FiniteSimplicialSet(name or f"{X.name}×_{f.target.name}{Y.name}", gens, faces,
                            validate=False)
    inherit_truncation(P, X, Y)
    if len(P.dim_of) != len(comps):
        raise SimplicialSetError("pullback produced clashing generator names")
    pX = SimplicialMap(P, X, {nm: c[0] for nm, c in comps.items()})
    pY = SimplicialMap(P, Y, {nm: c[1] for nm, c in comps.items()})
    return Pullback(P, pX, pY, f, g, index)


def product(X, Y, name=None):
    from .standard import simplex
    pt = simplex(0)
    return pullback(to_point(X, pt), to_point(Y, pt), name=name or f"{X.name}×{Y.name}")


def fibre(p, b, name=None):
    """Fibre of ``p`` over a simplex ``b`` of its target.

    Over a vertex this is the subcomplex of ``p.source`` (names kept); over a
    higher simplex it is the pullback along the classifying map.
    """
    if isinstance(b, str):
        b = Simplex(b, (0,))
    if b.dimension == 0:
        gens = [g for g, y in p.assignment.items() if y.gen == b.gen]
        return subcomplex(p.source, gens, name=name or f"{p.source.name}_{b.gen}")
    from .standard import classifying_map
    return pullback(p, classifying_map(p.target, b), name=name).obj


def fibre_inclusion(p, b):
    F = fibre(p, b)
    return inclusion(F, p.source)


# -- joins -----------------------------------------------------------------

def join(A, B, name=None):
    """The join ``A * B``; structure data lives in ``meta['join']``."""
    left = set(A.dim_of)
    k = _tagger(list(B.dim_of), left)
    L = {a: a for a in A.dim_of}
    R = {b: b + _primes(k) for b in B.dim_of}
    # lengthen the separator until pair names are distinct and avoid both ends
    taken = left | set(R.values())
    sep = "*"
    cap = max((len(x) for x in taken), default=0) + 2
    while True:
        if len(sep) <= cap:
            P = {(a, b): f"{a}{sep}{R[b]}" for a in A.dim_of for b in B.dim_of}
        else:  # names that begin or end with '*' need brackets
            P = {(a, b): f"({a}){sep}({R[b]})" for a in A.dim_of for b in B.dim_of}
        names = set(P.values())
        if len(names) == len(P) and not names & taken:
            break
        sep += "*"
    kind = {}
    gens, faces = {}, {}
    for a, d in A.dim_of.items():
        gens.setdefault(d, []).append(L[a])
        kind[L[a]] = ("L", a)
        if d:
            faces[L[a]] = list(A.faces[a])
    for b, d in B.dim_of.items():
        gens.setdefault(d, []).append(R[b])
        kind[R[b]] = ("R", b)
        if d:
            faces[R[b]] = [Simplex(R[s.gen], s.epi) for s in B.faces[b]]
    for (a, b), nm in P.items():
        p, q = A.dim_of[a], B.dim_of[b]
        n = p + q + 1
        gens.setdefault(n, []).append(nm)
        kind[nm] = ("P", a, b)
        fs = []
        for i in range(n + 1):
            if i <= p:
                if p == 0:
                    fs.append(Simplex(R[b], tuple(range(q + 1))))
                else:
                    s = A.faces[a][i]
                    top = A.dim_of[s.gen]
                    fs.append(Simplex(P[(s.gen, b)], s.epi + tuple(top + 1 + j for j in range(q + 1))))
            else:
                j = i - p - 1
                if q == 0:
                    fs.append(Simplex(L[a], tuple(range(p + 1))))
                else:
                    s = B.faces[b][j]
                    fs.append(Simplex(P[(a, s.gen)], tuple(range(p + 1)) + tuple(p + 1 + v for v in s.epi)))
        faces[nm] = fs
    meta = {"join": {"left": A, "right": B, "L": L, "R": R, "P": P, "kind": kind}}
    J = FiniteSimplicialSet(name or f"{A.name}⋆{B.name}", gens, faces, validate=False, meta=meta)
    return inherit_truncation(J, A, B)


def join_info(J):
    info = J.meta.get("join")
    if info is None:
        raise SimplicialSetError(f"{J.name} carries no join structure")
    return info


def join_simplex(J, alpha, beta):
    """``alpha * beta`` for simplices of the two factors (either may be None)."""
    info = join_info(J)
    if alpha is None:
        return Simplex(info["R"][beta.gen], beta.epi)
    if beta is None:
        return Simplex(info["L"][alpha.gen], alpha.epi)
    top = info["left"].dim_of[alpha.gen]
    return Simplex(info["P"][(alpha.gen, beta.gen)],
                   alpha.epi + tuple(top + 1 + v for v in beta.epi))


def split_join_simplex(J, s):
    """Inverse of :func:`join_simplex`: returns ``(alpha, beta)`` (one may be None)."""
    info = join_info(J)
    k = info["kind"][s.gen]
    if k[0] == "L":
        return Simplex(k[1], s.epi), None
    if k[0] == "R":
        return None, Simplex(k[1], s.epi)
    a, b = k[1], k[2]
    top = info["left"].dim_of[a]
    m = sum(1 for v in s.epi if v <= top)
    return Simplex(a, s.epi[:m]), Simplex(b, tuple(v - top - 1 for v in s.epi[m:]))


def join_structure(J):
    """The canonical map ``A * B -> Delta[1]``."""
    from .standard import simplex
    D1 = simplex(1)
    info = join_info(J)
    assign = {}
    for g, k in info["kind"].items():
        d = J.dim_of[g]
        if k[0] == "L":
            assign[g] = Simplex("0", (0,) * (d + 1))
        elif k[0] == "R":
            assign[g] = Simplex("1", (0,) * (d + 1))
        else:
            p = info["left"].dim_of[k[1]]
            assign[g] = Simplex("01", (0,) * (p + 1) + (1,) * (d - p))
    return SimplicialMap(J, D1, assign)


def join_map(f, g, J=None, J2=None):
    """``f * g : A * B -> A' * B'``."""
    J = J or join(f.source, g.source)
    J2 = J2 or join(f.target, g.target)
    info = join_info(J)
    assign = {}
    for nm, k in info["kind"].items():
        if k[0] == "L":
            assign[nm] = join_simplex(J2, f.assignment[k[1]], None)
        elif k[0] == "R":
            assign[nm] = join_simplex(J2, None, g.assignment[k[1]])
        else:
            assign[nm] = join_simplex(J2, f.assignment[k[1]], g.assignment[k[2]])
    return SimplicialMap(J, J2, assign)


def join_left_inclusion(J):
    info = join_info(J)
    A = info["left"]
    return SimplicialMap(A, J, {a: Simplex(info["L"][a], tuple(range(A.dim_of[a] + 1)))
                                for a in A.dim_of})


def join_right_inclusion(J):
    info = join_info(J)
    B = info["right"]
    return SimplicialMap(B, J, {b: Simplex(info["R"][b], tuple(range(B.dim_of[b] + 1)))
                                for b in B.dim_of})


def flatten_parts(J, g):
    """Leaf components of a generator of an iterated join (None for absent factors)."""
    info = J.meta.get("join")
    if info is None:
        return (g,)
    k = info["kind"][g]
    A, B = info["left"], info["right"]
    if k[0] == "L":
        return flatten_parts(A, k[1]) + (None,) * _leaves(B)
    if k[0] == "R":
        return (None,) * _leaves(A) + flatten_parts(B, k[1])
    return flatten_parts(A, k[1]) + flatten_parts(B, k[2])


def _leaves(X):
    info = X.meta.get("join")
    if info is None:
        return 1
    return _leaves(info["left"]) + _leaves(info["right"])


def canonical_join_iso(J1, J2):
    """Match generators of two iterated joins of the same factors by leaf components."""
    by_parts = {flatten_parts(J2, g): g for g in J2.dim_of}
    assign = {}
    for g in J1.dim_of:
        h = by_parts.get(flatten_parts(J1, g))
        if h is None:
            raise SimplicialSetError(f"no counterpart for {g!r}")
        assign[g] = nd(h, J2.dim_of[h])
    return SimplicialMap(J1, J2, assign).check()


def simplex_join_iso(m, n):
    """The canonical isomorphism ``Delta[m] * Delta[n] -> Delta[m+1+n]``."""
    from .standard import simplex, vname
    J = join(simplex(m), simplex(n))
    D = simplex(m + n + 1)
    info = join_info(J)
    N = m + n + 1

    def verts(g, k):
        return [int(c) for c in (g if k < 10 else g.split("."))]
    assign = {}
    for g, kd in info["kind"].items():
        if kd[0] == "L":
            vs = verts(kd[1], m)
        elif kd[0] == "R":
            vs = [m + 1 + v for v in verts(kd[1], n)]
        else:
            vs = verts(kd[1], m) + [m + 1 + v for v in verts(kd[2], n)]
        assign[g] = nd(vname(vs, N), len(vs) - 1)
    return SimplicialMap(J, D, assign).check()


def leibniz_join(f, g):
    """Corner map ``(M*T) u_(M*S) (N*S) -> N*T`` of ``f: M -> N`` and ``g: S -> T``."""
    JNT = join(f.target, g.target)
    info = join_info(JNT)
    if is_mono(f) and is_mono(g):
        imf, img = image_gens(f), image_gens(g)
        keep = []
        for nm, k in info["kind"].items():
            if k[0] != "P" or k[1] in imf or k[2] in img:
                keep.append(nm)
        D = subcomplex(JNT, keep, name=f"({f.source.name}⋆{g.target.name})∪({f.target.name}⋆{g.source.name})")
        return inclusion(D, JNT)
    from .maps import identity_map
    JMS, JMT, JNS = join(f.source, g.source), join(f.source, g.target), join(f.target, g.source)
    a = join_map(identity_map(f.source), g, JMS, JMT)
    b = join_map(f, identity_map(g.source), JMS, JNS)
    po = pushout(a, b)
    hB = join_map(f, identity_map(g.target), JMT, JNT)
    hC = join_map(identity_map(f.target), g, JNS, JNT)
    return po.mediate(hB, hC)


# -- cell presentations -----------------------------------------------------

@dataclass
class CellPresentation:
    base: FiniteSimplicialSet
    target: FiniteSimplicialSet
    mono: SimplicialMap
    steps: list

    def replay(self):
        """Attach the recorded boundary cells one by one; returns an iso to ``target``."""
        from .standard import boundary_inclusion, simplex
        cur = self.base
        where = {y.gen: a for a, y in self.mono.assignment.items()}
        for kind, b, attach in self.steps:
            d = self.target.dim_of[b]
            bi = boundary_inclusion(d)
            att = SimplicialMap(bi.source, cur,
                                {v: Simplex(where[s.gen], s.epi) for v, s in attach.items()})
            po = pushout(bi, att)
            cur = po.obj
            top = simplex(d).all_generators()[-1] if d else "0"
            where[b] = po.inj_B.assignment[top].gen
        iso = SimplicialMap(self.target, cur,
                            {b: nd(where[b], self.target.dim_of[b]) for b in self.target.dim_of})
        iso.check()
        if not (is_mono(iso) and len(cur.dim_of) == len(self.target.dim_of)):
            raise SimplicialSetError("replay does not reproduce the codomain")
        if compose(iso, self.mono).assignment != {a: cur.nd(a) for a in self.base.dim_of}:
            raise SimplicialSetError("replay is not the identity on the base")
        return iso


def cell_presentation_mono(i):
    """Skeletal presentation of a monomorphism: one boundary cell per missing generator."""
    if not is_mono(i):
        raise SimplicialSetError("cell presentations need a monomorphism")
    from .standard import simplex
    B = i.target
    im = image_gens(i)
    steps = []
    for b in B.all_generators():
        if b in im:
            continue
        d = B.dim_of[b]
        D = simplex(d)
        attach = {}
        for v in D.all_generators()[:-1] if d else []:
            verts = tuple(int(c) for c in (v if d < 10 else v.split(".")))
            attach[v] = B.act(B.nd(b), verts)
        steps.append((f"b_{d}", b, attach))
    return CellPresentation(i.source, B, i, steps)


# -- generic construction from level data ------------------------------------

def from_levels(levels, face, degen, name, label=str, meta=None):
    """Build a simplicial set from explicit finite levels ``0..N``.

    ``face(x, n, i)`` and ``degen(x, n, i)`` give the operators on an
    element ``x`` of level ``n``.  Nondegenerate elements are those outside
    the image of the degeneracies; they become the generators.
    """
    N = max(levels) if levels else -1
    origin = {}
    for n in range(1, N + 1):
        for y in levels[n - 1]:
            for i in range(n):
                z = degen(y, n - 1, i)
                origin.setdefault((n, z), (y, i))
    memo = {}

    def nf(z, n):
        key = (n, z)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if key in origin:
            y, i = origin[key]
            res = apply_epi(nf(y, n - 1), degeneracy_values(i, n - 1))
        else:
            res = Simplex(label(z), tuple(range(n + 1)))
        memo[key] = res
        return res

    gens, faces, element_of = {}, {}, {}
    for n in range(N + 1):
        for z in levels[n]:
            if (n, z) in origin:
                continue
            nm = label(z)
            element_of[nm] = (n, z)
            gens.setdefault(n, []).append(nm)
            if n:
                faces[nm] = [nf(face(z, n, i), n - 1) for i in range(n + 1)]
    X = FiniteSimplicialSet(name, gens, faces, validate=False, meta=meta or {})
    X.meta["_nf"] = nf
    X.meta["_element_of"] = element_of
    top_nd = bool(gens.get(N)) if N >= 0 else False
    X.meta["top_level_nondegenerate"] = top_nd
    return X
