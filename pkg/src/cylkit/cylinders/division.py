"""Left and right division of cylinders, the two-variable adjunction and Leibniz lifting.

For ``m: M -> A`` and a cylinder ``X`` the left division ``M\\X`` lives over
``B``.  Its ``n``-simplices over ``beta`` are the maps ``M * Delta[n] -> X``
over ``m * beta``; these are recorded as compatible families indexed by the
nondegenerate simplices of ``M``, each member an element of the presheaf
value of ``X`` at ``(m(sigma), beta)``.  Right division is the mirror image.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..delta import degeneracy_values, face_values, surjections
from ..lifting import iter_lifts
from ..limits import from_levels, join_simplex
from ..maps import SimplicialMap, compose, from_empty
from ..sset import Simplex, apply_epi
from ..standard import classifying_map, empty
from ..verdict import EXHAUSTED, YES_CERTIFIED, Verdict
from .core import exterior_product, initial_map, leibniz_exterior
from .presheaf import element_label

DEFAULT_LEVEL_BUDGET = 8


def _sum(mu, nu, m):
    return tuple(mu) + tuple(m + 1 + v for v in nu)


def _value_index(X):
    idx = getattr(X, "_value_index", None)
    if idx is None:
        T, p = X.total, X.structure
        invA = {y.gen: a for a, y in X.incA.assignment.items()}
        invB = {y.gen: b for b, y in X.incB.assignment.items()}
        idx = []
        for g, y in p.assignment.items():
            if y.gen != "01":
                continue
            m = y.epi.count(0) - 1
            d = T.dim_of[g]
            x = T.nd(g)
            front = T.act(x, tuple(range(m + 1)))
            back = T.act(x, tuple(range(m + 1, d + 1)))
            idx.append((g, m, d - m - 1, Simplex(invA[front.gen], front.epi),
                        Simplex(invB[back.gen], back.epi)))
        X._value_index = idx
        X._value_cache = {}
    return idx


def cyl_value(X, alpha, beta):
    """Simplices of ``X`` with front face ``alpha`` in ``A`` and back face ``beta`` in ``B``."""
    idx = _value_index(X)
    key = (alpha, beta)
    hit = X._value_cache.get(key)
    if hit is not None:
        return hit
    m, n = alpha.dimension, beta.dimension
    out = []
    for g, mz, nz, az, bz in idx:
        if mz > m or nz > n:
            continue
        fronts = [e for e in surjections(m, mz) if apply_epi(az, e) == alpha]
        if not fronts:
            continue
        backs = [e for e in surjections(n, nz) if apply_epi(bz, e) == beta]
        for ef in fronts:
            for eb in backs:
                out.append(Simplex(g, _sum(ef, eb, mz)))
    res = tuple(sorted(out))
    X._value_cache[key] = res
    return res


@dataclass
class Division:
    """``M\\X`` over ``B`` (side ``"L"``) or ``X/S`` over ``A`` (side ``"R"``).

    Elements of the underlying levels are pairs ``(base simplex, family)``;
    ``weight_gens`` lists the nondegenerate simplices of the weight in the
    order used by families.
    """

    obj: object
    structure: SimplicialMap
    side: str
    weight: SimplicialMap
    cylinder: object
    weight_gens: tuple
    levels: dict
    exact: bool

    @property
    def status(self):
        return YES_CERTIFIED if self.exact else EXHAUSTED

    def simplex_of(self, element, n):
        if n in self._members:
            if element not in self._members[n]:
                raise KeyError(f"{element!r} is not a {n}-simplex of {self.obj.name}")
            return self.obj.meta["_nf"](element, n)
        # above the computed levels every element is degenerate
        for j in range(n):
            y = self._face(element, n, j)
            if self._degen(y, n - 1, j) == element:
                return apply_epi(self.simplex_of(y, n - 1), degeneracy_values(j, n - 1))
        raise KeyError(f"{element!r} is nondegenerate above the computed levels")

    def element_of(self, s):
        n, z = self.obj.meta["_element_of"][s.gen]
        if s.nondegenerate:
            return z
        out = z
        k = n
        for i in reversed(s.degeneracy_word):
            out = self._degen(out, k, i)
            k += 1
        return out


def _weight_op(side, mu, k, n):
    if side == "L":
        return _sum(mu, range(n + 1), k)
    return _sum(range(n + 1), mu, n)


def _base_op(side, nu, k, n):
    if side == "L":
        return _sum(range(k + 1), nu, k)
    return _sum(nu, range(k + 1), n)


def _value(X, side, w, b):
    return cyl_value(X, w, b) if side == "L" else cyl_value(X, b, w)


def divide(X, weight, side="L", level_budget=DEFAULT_LEVEL_BUDGET, name=None):
    """Left (``side='L'``) or right (``'R'``) division of ``X`` by ``weight: M -> A`` (or ``-> B``)."""
    T = X.total
    M = weight.source
    base = X.B if side == "L" else X.A
    wgens = tuple(g for d in range(len(M.generators)) for g in M.generators[d])
    dims = {g: M.dim_of[g] for g in wgens}
    wimg = {g: weight.assignment[g] for g in wgens}
    pos = {g: k for k, g in enumerate(wgens)}
    # constraints: face i of sigma equals tau acted on by a degeneracy
    cons = {}
    for g in wgens:
        k = dims[g]
        if k == 0:
            continue
        cons[g] = [(i, M.faces[g][i]) for i in range(k + 1)]
    if wgens:
        maximal = set(wgens)
        for g in wgens:
            for s in M.faces.get(g, ()):
                maximal.discard(s.gen)
        # a nondegenerate family needs every base position to be nondegenerate in
        # some maximal member; each member contributes at most dim X - 1 - rank
        bound = sum(max(T.dimension - 1 - max(wimg[g].epi), 0) for g in maximal)
    else:
        bound = max(base.dimension, 0)
    exact = bound <= level_budget
    top = min(bound, level_budget)

    def families(b, n):
        out = []
        fam = [None] * len(wgens)

        def rec(idx):
            if idx == len(wgens):
                out.append(tuple(fam))
                return
            g = wgens[idx]
            k = dims[g]
            for x in _value(X, side, wimg[g], b):
                ok = True
                for i, tau in cons.get(g, ()):
                    lhs = T.act(x, _weight_op(side, face_values(i, k), k, n))
                    y = fam[pos[tau.gen]]
                    rhs = T.act(y, _weight_op(side, tau.epi, dims[tau.gen], n))
                    if lhs != rhs:
                        ok = False
                        break
                if ok:
                    fam[idx] = x
                    rec(idx + 1)
            fam[idx] = None

        rec(0)
        return out

    levels = {}
    for n in range(top + 1):
        lv = []
        for b in base.level(n) if base.dimension >= 0 else ():
            for fam in families(b, n):
                lv.append((b, fam))
        levels[n] = lv

    def face(z, n, j):
        b, fam = z
        nb = base.face(b, j)
        return (nb, tuple(T.act(x, _base_op(side, face_values(j, n), dims[g], n))
                          for g, x in zip(wgens, fam)))

    def degen(z, n, j):
        b, fam = z
        nb = base.degen(b, j)
        return (nb, tuple(T.act(x, _base_op(side, degeneracy_values(j, n), dims[g], n))
                          for g, x in zip(wgens, fam)))

    def label(z):
        b, fam = z
        head = element_label(b)
        if not fam:
            return head
        return head + "|" + ",".join(element_label(x) for x in fam)

    nm = name or (f"{M.name}\\{X.total.name}" if side == "L" else f"{X.total.name}/{M.name}")
    D = from_levels(levels, face, degen, name=nm, label=label)
    struct = SimplicialMap(D, base, {g: z[1][0] for g, z in D.meta["_element_of"].items()})
    res = Division(D, struct, side, weight, X, wgens, levels, exact)
    res._members = {n: set(lv) for n, lv in levels.items()}
    res._degen = degen
    res._face = face
    return res


def left_divide(M_map, X, **kw):
    """``M\\X`` in ``sSet/B`` for ``M_map: M -> A``."""
    return divide(X, M_map, "L", **kw)


def right_divide(X, S_map, **kw):
    """``X/S`` in ``sSet/A`` for ``S_map: S -> B``."""
    return divide(X, S_map, "R", **kw)


def representable_divide(X, alpha, side="L"):
    """Division by ``(Delta[m], alpha)`` read directly off the presheaf values."""
    T = X.total
    base = X.B if side == "L" else X.A
    m = alpha.dimension
    top = max(T.dimension - 1, 0)
    levels = {}
    for n in range(top + 1):
        levels[n] = [(b, x) for b in base.level(n) if base.dimension >= 0
                     for x in _value(X, side, alpha, b)]

    def face(z, n, j):
        b, x = z
        return (base.face(b, j), T.act(x, _base_op(side, face_values(j, n), m, n)))

    def degen(z, n, j):
        b, x = z
        return (base.degen(b, j), T.act(x, _base_op(side, degeneracy_values(j, n), m, n)))

    D = from_levels(levels, face, degen, name=f"rep({element_label(alpha)})",
                    label=lambda z: element_label(z[1]))
    struct = SimplicialMap(D, base, {g: z[1][0] for g, z in D.meta["_element_of"].items()})
    return D, struct


def division_map(f, over_N, X, side="L", level_budget=DEFAULT_LEVEL_BUDGET):
    """``f\\X: N\\X -> M\\X`` (or ``X/f``) for ``f: M -> N`` with ``over_N: N -> A``."""
    DN = divide(X, over_N, side, level_budget)
    DM = divide(X, compose(over_N, f), side, level_budget)
    T = X.total
    assign = {}
    for g, (n, (b, fam)) in DN.obj.meta["_element_of"].items():
        byN = dict(zip(DN.weight_gens, fam))
        out = []
        for s in DM.weight_gens:
            img = f.assignment[s]
            out.append(T.act(byN[img.gen],
                             _weight_op(side, img.epi, f.target.dim_of[img.gen], n)))
        assign[g] = DM.simplex_of((b, tuple(out)), n)
    return DN, DM, SimplicialMap(DN.obj, DM.obj, assign).check()


# -- hom-set enumeration ------------------------------------------------------------

def maps_over(S, s, D, q):
    """All maps ``S -> D`` with ``q . phi = s``, as SimplicialMaps."""
    E = empty()
    i = from_empty(E, S)
    return [SimplicialMap(S, D, a) for a in iter_lifts(i, q, {}, s)]


def cylinder_maps(Y, X):
    """All maps of cylinders ``Y -> X`` (over ``A * B``, identity on the fibres)."""
    iY = initial_map(Y)
    iX = initial_map(X)
    return [SimplicialMap(Y.total, X.total, a)
            for a in iter_lifts(iY, X.canonical_map(), iX.assignment, Y.canonical_map())]


@dataclass
class AdjunctionReport:
    counts: tuple
    bijective: bool
    exact: bool
    note: str = ""

    @property
    def ok(self):
        return self.bijective and len(set(self.counts)) == 1


def verify_division_adjunction(m, s, X, level_budget=DEFAULT_LEVEL_BUDGET):
    """Enumerate ``sSet/B(S, M\\X)``, ``Cyl(M ⊠ S, X)`` and ``sSet/A(M, X/S)`` and compare.

    The two transposes of every cylinder map are computed explicitly; the
    check passes when all three hom-sets have the same size and both
    transposition maps are injective.
    """
    M, S = m.source, s.source
    R = exterior_product(M, m, S, s, X.A, X.B)
    MS = R.unit.source
    DL = divide(X, m, "L", level_budget)
    DR = divide(X, s, "R", level_budget)
    if not (DL.exact and DR.exact):
        return AdjunctionReport((), False, False, "division exceeded the level budget")
    cyl = cylinder_maps(R.cylinder, X)
    left = maps_over(S, s, DL.obj, DL.structure)
    right = maps_over(M, m, DR.obj, DR.structure)
    seenL, seenR = set(), set()
    for phi in cyl:
        tl = _transpose_maps(phi, R, MS, DL, S, s, "L")
        tr = _transpose_maps(phi, R, MS, DR, M, m, "R")
        seenL.add(tuple(sorted(tl.items())))
        seenR.add(tuple(sorted(tr.items())))
    leftset = {tuple(sorted(f.assignment.items())) for f in left}
    rightset = {tuple(sorted(f.assignment.items())) for f in right}
    bij = (len(seenL) == len(cyl) == len(seenR) and seenL <= leftset and seenR <= rightset)
    return AdjunctionReport((len(left), len(cyl), len(right)), bij, True)


def _transpose_maps(phi, R, MS, D, V, v_map, weight_side):
    W = D.weight.source
    assign = {}
    for g in V.all_generators():
        n = V.dim_of[g]
        fam = []
        for w in D.weight_gens:
            if weight_side == "L":
                js = join_simplex(MS, W.nd(w), V.nd(g))
            else:
                js = join_simplex(MS, V.nd(g), W.nd(w))
            fam.append(phi.apply(R.unit.apply(js)))
        assign[g] = D.simplex_of((v_map.assignment[g], tuple(fam)), n)
    SimplicialMap(V, D.obj, assign).check()
    return assign


# -- Leibniz lifting ----------------------------------------------------------------

@dataclass
class LeibnizLiftReport:
    join_form: bool
    exterior_form: bool
    left_division_form: bool
    right_division_form: bool
    squares: dict

    @property
    def values(self):
        return (self.join_form, self.exterior_form, self.left_division_form,
                self.right_division_form)

    @property
    def agree(self):
        return len(set(self.values)) == 1


def _all_squares_lift(i, p, bottoms, tally):
    """Every square ``i -> p`` over one of ``bottoms`` has a diagonal."""
    E = empty()
    for b in bottoms:
        for top in iter_lifts(from_empty(E, i.source), p, {}, compose(b, i)):
            tally[0] += 1
            if next(iter_lifts(i, p, top, b), None) is None:
                return False
    return True


def leibniz_lift_check(f, n_map, g, t_map, X, level_budget=DEFAULT_LEVEL_BUDGET):
    """Decide the four equivalent lifting conditions for ``f: M -> N``, ``g: S -> T``."""
    from ..limits import join_map, leibniz_join
    A, B = X.A, X.B
    squares = {}
    # (i) join form in sSet
    corner = leibniz_join(f, g)
    nt = join_map(n_map, t_map, corner.target, X.join_target())
    tally = [0]
    i_ok = _all_squares_lift(corner, X.canonical_map(), [nt], tally)
    squares["join"] = tally[0]
    # (ii) exterior Leibniz product in Cyl(A, B)
    LE = leibniz_exterior(f, n_map, g, t_map, A, B)
    tally = [0]
    ii_ok = True
    cod = LE.codomain.cylinder
    iX = initial_map(X)
    dom = LE.domain.cylinder
    for top in iter_lifts(initial_map(dom), X.canonical_map(), iX.assignment,
                          dom.canonical_map()):
        tally[0] += 1
        if next(iter_lifts(LE.map, X.canonical_map(), top, cod.canonical_map()), None) is None:
            ii_ok = False
            break
    squares["exterior"] = tally[0]
    # (iii) f\X against g in sSet/B
    DN, DM, fX = division_map(f, n_map, X, "L", level_budget)
    tally = [0]
    bottoms = maps_over(g.target, t_map, DM.obj, DM.structure)
    iii_ok = _all_squares_lift(g, fX, bottoms, tally)
    squares["left_division"] = tally[0]
    # (iv) X/g against f in sSet/A
    DT, DS, Xg = division_map(g, t_map, X, "R", level_budget)
    tally = [0]
    bottoms = maps_over(f.target, n_map, DS.obj, DS.structure)
    iv_ok = _all_squares_lift(f, Xg, bottoms, tally)
    squares["right_division"] = tally[0]
    return LeibnizLiftReport(i_ok, ii_ok, iii_ok, iv_ok, squares)


def weighted_limit_check(X, alpha, side="L"):
    """Compare the family construction with the representable formula at ``alpha``."""
    A = X.A if side == "L" else X.B
    D = divide(X, classifying_map(A, alpha), side)
    R, _ = representable_divide(X, alpha, side)
    return D.obj.counts() == R.counts(), D, R


def division_verdict(D):
    if D.exact:
        return Verdict(YES_CERTIFIED)
    return Verdict(EXHAUSTED, note="division exceeded the level budget")


__all__ = ["cyl_value", "Division", "divide", "left_divide", "right_divide",
           "representable_divide", "division_map", "maps_over", "cylinder_maps",
           "verify_division_adjunction", "leibniz_lift_check", "LeibnizLiftReport",
           "AdjunctionReport", "weighted_limit_check", "division_verdict"]
