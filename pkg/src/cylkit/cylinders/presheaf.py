"""Cylinders as presheaves on Delta/A x Delta/B.

The value at a pair of simplices ``(alpha, beta)`` of dimensions ``m`` and
``n`` is the set of ``(m+1+n)``-simplices of the total space lying over the
edge with front face ``alpha`` and back face ``beta``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..delta import degeneracy_values, face_values
from ..limits import from_levels
from ..maps import SimplicialMap
from ..sset import Simplex, SimplicialSetError
from ..standard import simplex
from .core import Cylinder, _inverse_names


def element_label(s):
    if s.nondegenerate:
        return s.gen
    return f"{s.gen}@{'.'.join(str(v) for v in s.epi)}"


def _sum(mu, nu, m):
    return tuple(mu) + tuple(m + 1 + v for v in nu)


@dataclass
class CylinderPresheaf:
    """Values and restriction tables of a cylinder presheaf up to total level ``N``.

    ``restrict[(alpha, beta, x, side, kind, i)]`` is the label obtained by
    acting on the left (``side='L'``) or right factor with the face
    (``kind='d'``) or degeneracy (``kind='s'``) operator of index ``i``.
    """

    A: object
    B: object
    N: int
    values: dict
    restrict: dict = field(default_factory=dict)

    def value(self, alpha, beta):
        return self.values.get((alpha, beta), ())

    def is_constant(self, size):
        return all(len(v) == size for v in self.values.values())

    def index_pairs(self):
        return list(self.values)

    def _d(self, alpha, beta, x, side, i):
        return self.restrict[(alpha, beta, x, side, "d", i)]

    def check_functoriality(self):
        """Face identities on each factor and commutation of the two actions."""
        A, B = self.A, self.B
        for (alpha, beta), xs in self.values.items():
            m, n = alpha.dimension, beta.dimension
            for x in xs:
                if m >= 2:
                    for j in range(m + 1):
                        for i in range(j):
                            lhs = self._d(A.face(alpha, j), beta, self._d(alpha, beta, x, "L", j),
                                          "L", i)
                            rhs = self._d(A.face(alpha, i), beta, self._d(alpha, beta, x, "L", i),
                                          "L", j - 1)
                            if lhs != rhs:
                                raise SimplicialSetError("left restrictions are not functorial")
                if n >= 2:
                    for j in range(n + 1):
                        for i in range(j):
                            lhs = self._d(alpha, B.face(beta, j), self._d(alpha, beta, x, "R", j),
                                          "R", i)
                            rhs = self._d(alpha, B.face(beta, i), self._d(alpha, beta, x, "R", i),
                                          "R", j - 1)
                            if lhs != rhs:
                                raise SimplicialSetError("right restrictions are not functorial")
                if m >= 1 and n >= 1:
                    for i in range(m + 1):
                        for j in range(n + 1):
                            lhs = self._d(A.face(alpha, i), beta, self._d(alpha, beta, x, "L", i),
                                          "R", j)
                            rhs = self._d(alpha, B.face(beta, j), self._d(alpha, beta, x, "R", j),
                                          "L", i)
                            if lhs != rhs:
                                raise SimplicialSetError("left and right actions do not commute")
        return True


def to_presheaf(X, N=None):
    """Presheaf form of a cylinder, computed through total dimension ``N``."""
    T, p = X.total, X.structure
    if N is None:
        N = T.dimension
    invA, invB = _inverse_names(X.incA), _inverse_names(X.incB)
    values = {}
    elems = {}
    for k in range(1, N + 1):
        for s in T.level(k):
            y = p.apply(s)
            if y.gen != "01":
                continue
            m = y.epi.count(0) - 1
            n = k - m - 1
            front = T.act(s, tuple(range(m + 1)))
            back = T.act(s, tuple(range(m + 1, k + 1)))
            alpha = Simplex(invA[front.gen], front.epi)
            beta = Simplex(invB[back.gen], back.epi)
            values.setdefault((alpha, beta), []).append(element_label(s))
            elems[element_label(s)] = (s, m, n)
    A, B = X.A, X.B
    # every index pair in range gets a (possibly empty) value
    for m in range(N):
        for n in range(N - m):
            for alpha in A.level(m) if A.dimension >= 0 else ():
                for beta in B.level(n) if B.dimension >= 0 else ():
                    values.setdefault((alpha, beta), [])
    values = {k: tuple(sorted(v)) for k, v in values.items()}
    restrict = {}
    for (alpha, beta), xs in values.items():
        m, n = alpha.dimension, beta.dimension
        k = m + 1 + n
        for lab in xs:
            s = elems[lab][0]
            for i in range(m + 1):
                if m >= 1:
                    restrict[(alpha, beta, lab, "L", "d", i)] = element_label(
                        T.act(s, _sum(face_values(i, m), range(n + 1), m)))
                if k + 1 <= N:
                    restrict[(alpha, beta, lab, "L", "s", i)] = element_label(
                        T.act(s, _sum(degeneracy_values(i, m), range(n + 1), m)))
            for j in range(n + 1):
                if n >= 1:
                    restrict[(alpha, beta, lab, "R", "d", j)] = element_label(
                        T.act(s, _sum(range(m + 1), face_values(j, n), m)))
                if k + 1 <= N:
                    restrict[(alpha, beta, lab, "R", "s", j)] = element_label(
                        T.act(s, _sum(range(m + 1), degeneracy_values(j, n), m)))
    return CylinderPresheaf(A, B, N, values, restrict)


def from_presheaf(P, name="X"):
    """Rebuild a cylinder from presheaf values and restriction tables."""
    A, B, N = P.A, P.B, P.N
    levels = {}
    for k in range(N + 1):
        lv = [("A", a) for a in A.level(k)] if A.dimension >= 0 else []
        lv += [("B", b) for b in B.level(k)] if B.dimension >= 0 else []
        for (alpha, beta), xs in P.values.items():
            if alpha.dimension + 1 + beta.dimension == k:
                lv.extend(("P", alpha, beta, x) for x in xs)
        levels[k] = lv

    def face(z, k, i):
        if z[0] == "A":
            return ("A", A.face(z[1], i))
        if z[0] == "B":
            return ("B", B.face(z[1], i))
        _, alpha, beta, x = z
        m, n = alpha.dimension, beta.dimension
        if i <= m:
            if m == 0:
                return ("B", beta)
            return ("P", A.face(alpha, i), beta, P.restrict[(alpha, beta, x, "L", "d", i)])
        j = i - m - 1
        if n == 0:
            return ("A", alpha)
        return ("P", alpha, B.face(beta, j), P.restrict[(alpha, beta, x, "R", "d", j)])

    def degen(z, k, i):
        if z[0] == "A":
            return ("A", A.degen(z[1], i))
        if z[0] == "B":
            return ("B", B.degen(z[1], i))
        _, alpha, beta, x = z
        m = alpha.dimension
        if i <= m:
            return ("P", A.degen(alpha, i), beta, P.restrict[(alpha, beta, x, "L", "s", i)])

        j = i - m - 1
        return ("P", alpha, B.degen(beta, j), P.restrict[(alpha, beta, x, "R", "s", j)])

    taken = set(A.dim_of)
    k = 0
    while {b + "'" * k for b in B.dim_of} & taken:
        k += 1
    bname = {b: b + "'" * k for b in B.dim_of}
    taken |= set(bname.values())
    pnames = {}
    for (alpha, beta), xs in P.values.items():
        for x in xs:
            nm = x
            while nm in taken:
                nm = nm + "°"
            pnames[(alpha, beta, x)] = nm

    def label(z):
        if z[0] == "A":
            return z[1].gen
        if z[0] == "B":
            return bname[z[1].gen]
        return pnames[(z[1], z[2], z[3])]

    T = from_levels(levels, face, degen, name=name, label=label)
    D1 = simplex(1)
    el = T.meta["_element_of"]
    assign = {}
    for g, (k, z) in el.items():
        if z[0] == "A":
            assign[g] = Simplex("0", (0,) * (k + 1))
        elif z[0] == "B":
            assign[g] = Simplex("1", (0,) * (k + 1))
        else:
            m = z[1].dimension
            assign[g] = Simplex("01", (0,) * (m + 1) + (1,) * (k - m))
    p = SimplicialMap(T, D1, assign)
    incA = SimplicialMap(A, T, {a: A.nd(a) for a in A.dim_of})
    incB = SimplicialMap(B, T, {b: Simplex(bname[b], tuple(range(B.dim_of[b] + 1)))
                                for b in B.dim_of})
    return Cylinder(T, p, A, B, incA, incB).check()
