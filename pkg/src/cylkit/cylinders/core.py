"""Cylinders over Delta[1] with prescribed fibres, the reflection L and exterior products."""
from __future__ import annotations

from dataclasses import dataclass

from ..limits import (coproduct, fibre, join, join_info, join_left_inclusion,
                      join_map, join_right_inclusion, join_simplex, join_structure,
                      leibniz_join, pushout)
from ..maps import (SimplicialMap, compose, find_isomorphism, identity_map, inclusion, is_mono,
                    opposite, opposite_map, subcomplex)
from ..sset import Simplex, SimplicialSetError
from ..standard import simplex


class CylinderError(SimplicialSetError):
    pass


@dataclass
class Cylinder:
    """A simplicial set over Delta[1] whose fibres are identified with ``A`` and ``B``."""

    total: object
    structure: SimplicialMap
    A: object
    B: object
    incA: SimplicialMap
    incB: SimplicialMap

    def check(self):
        p = self.structure
        p.check()
        self.incA.check()
        self.incB.check()
        if not (is_mono(self.incA) and is_mono(self.incB)):
            raise CylinderError("fibre inclusions must be monomorphisms")
        over0 = {g for g, y in p.assignment.items() if y.gen == "0"}
        over1 = {g for g, y in p.assignment.items() if y.gen == "1"}
        if {y.gen for y in self.incA.assignment.values()} != over0:
            raise CylinderError("fibre over 0 is not A")
        if {y.gen for y in self.incB.assignment.values()} != over1:
            raise CylinderError("fibre over 1 is not B")
        return self

    def decode_A(self, s):
        inv = _inverse_names(self.incA)
        return Simplex(inv[s.gen], s.epi)

    def decode_B(self, s):
        inv = _inverse_names(self.incB)
        return Simplex(inv[s.gen], s.epi)

    def join_target(self):
        J = getattr(self, "_join", None)
        if J is None:
            J = join(self.A, self.B)
            self._join = J
        return J

    def canonical_map(self):
        """The canonical map ``X -> A * B`` (front and back faces of each simplex)."""
        hit = getattr(self, "_canonical", None)
        if hit is not None:
            return hit
        X, p = self.total, self.structure
        J = self.join_target()
        invA, invB = _inverse_names(self.incA), _inverse_names(self.incB)
        assign = {}
        for g, y in p.assignment.items():
            if y.gen == "0":
                assign[g] = join_simplex(J, Simplex(invA[g], tuple(range(X.dim_of[g] + 1))), None)
            elif y.gen == "1":
                assign[g] = join_simplex(J, None, Simplex(invB[g], tuple(range(X.dim_of[g] + 1))))
            else:
                m = y.epi.count(0) - 1
                d = X.dim_of[g]
                x = X.nd(g)
                front = X.act(x, tuple(range(m + 1)))
                back = X.act(x, tuple(range(m + 1, d + 1)))
                a = Simplex(invA[front.gen], front.epi)
                b = Simplex(invB[back.gen], back.epi)
                assign[g] = join_simplex(J, a, b)
        c = SimplicialMap(X, J, assign)
        self._canonical = c
        return c


def _inverse_names(inc):
    return {y.gen: a for a, y in inc.assignment.items()}


def make_cylinder(X, p, A=None, B=None):
    """Cylinder from ``p: X -> Delta[1]``; fibres are the name-keeping subcomplexes."""
    if p.target != simplex(1):
        raise CylinderError("structure map must land in Delta[1]")
    FA = fibre(p, "0", name=A or f"{X.name}_0")
    FB = fibre(p, "1", name=B or f"{X.name}_1")
    return Cylinder(X, p, FA, FB, inclusion(FA, X), inclusion(FB, X)).check()


def initial(A, B):
    X, iA, iB = coproduct(A, B)
    D1 = simplex(1)
    assign = {}
    for a, y in iA.assignment.items():
        assign[y.gen] = Simplex("0", (0,) * (A.dim_of[a] + 1))
    for b, y in iB.assignment.items():
        assign[y.gen] = Simplex("1", (0,) * (B.dim_of[b] + 1))
    return Cylinder(X, SimplicialMap(X, D1, assign), A, B, iA, iB).check()


def terminal(A, B):
    J = join(A, B)
    C = Cylinder(J, join_structure(J), A, B, join_left_inclusion(J), join_right_inclusion(J))
    C._join = J
    return C.check()


def initial_map(X):
    """The canonical map ``A + B -> X``."""
    I = initial(X.A, X.B)
    X0 = I.total
    assign = {}
    for a, y in I.incA.assignment.items():
        assign[y.gen] = X.incA.assignment[a]
    for b, y in I.incB.assignment.items():
        assign[y.gen] = X.incB.assignment[b]
    return SimplicialMap(X0, X.total, assign)


def is_cylinder_map(f, X, Y):
    """``f: X.total -> Y.total`` over Delta[1] restricting to the identity on the fibres."""
    if f.source != X.total or f.target != Y.total:
        return False
    if compose(Y.structure, f).assignment != X.structure.assignment:
        return False
    if compose(f, X.incA).assignment != Y.incA.assignment:
        return False
    return compose(f, X.incB).assignment == Y.incB.assignment


# -- reflection L -------------------------------------------------------------------

@dataclass
class Reflection:
    cylinder: Cylinder
    unit: SimplicialMap
    over: SimplicialMap
    pushout: object


def reflect_L(M, m, A, B, J=None):
    """Reflect ``m: M -> A * B`` into ``Cyl(A, B)``.

    ``L(M)`` is the pushout of ``M <- M_A + M_B -> A + B`` where ``M_A`` and
    ``M_B`` are the parts of ``M`` lying over ``A`` and ``B``.
    """
    J = J or m.target
    info = join_info(J)
    kinds = info["kind"]
    over_A = [g for g, y in m.assignment.items() if kinds[y.gen][0] == "L"]
    over_B = [g for g, y in m.assignment.items() if kinds[y.gen][0] == "R"]
    MA = subcomplex(M, over_A, name=f"{M.name}_A")
    MB = subcomplex(M, over_B, name=f"{M.name}_B")
    MAB, jA, jB = coproduct(MA, MB)
    into_M = SimplicialMap(MAB, M, {**{y.gen: M.nd(a) for a, y in jA.assignment.items()},
                                    **{y.gen: M.nd(b) for b, y in jB.assignment.items()}})
    I = initial(A, B)
    to_AB = {}
    for a, y in jA.assignment.items():
        s = m.assignment[a]
        to_AB[y.gen] = I.incA.apply(Simplex(kinds[s.gen][1], s.epi))
    for b, y in jB.assignment.items():
        s = m.assignment[b]
        to_AB[y.gen] = I.incB.apply(Simplex(kinds[s.gen][1], s.epi))
    g = SimplicialMap(MAB, I.total, to_AB)
    po = pushout(into_M, g, name=f"L({M.name})")
    P = po.obj
    struct = po.mediate(compose(join_structure(J), m), I.structure)
    incA = compose(po.inj_C, I.incA)
    incB = compose(po.inj_C, I.incB)
    cyl = Cylinder(P, struct, A, B, incA, incB).check()
    over = po.mediate(m, _initial_to_join(I, J))
    cyl._join = J
    cyl._canonical = over
    return Reflection(cyl, po.inj_B, over, po)


def _initial_to_join(I, J):
    assign = {}
    for a, y in I.incA.assignment.items():
        assign[y.gen] = join_simplex(J, I.A.nd(a), None)
    for b, y in I.incB.assignment.items():
        assign[y.gen] = join_simplex(J, None, I.B.nd(b))
    return SimplicialMap(I.total, J, assign)


def exterior_product(M, m, S, s, A=None, B=None):
    """``(M, m) ⊠ (S, s) = L(M * S -> A * B)``."""
    A = A or m.target
    B = B or s.target
    J = join(A, B)
    MS = join(M, S)
    return reflect_L(MS, join_map(m, s, MS, J), A, B, J)


@dataclass
class LeibnizExterior:
    domain: Reflection
    codomain: Reflection
    map: SimplicialMap


def leibniz_exterior(f, m_N, g, s_T, A=None, B=None):
    """``f ⊠̂ g = L(f ⋆̂ g)`` for ``f: M -> N`` over ``A`` and ``g: S -> T`` over ``B``."""
    A = A or m_N.target
    B = B or s_T.target
    J = join(A, B)
    corner = leibniz_join(f, g)
    NT = corner.target
    over_NT = join_map(m_N, s_T, NT, J)
    Lcod = reflect_L(NT, over_NT, A, B, J)
    Ldom = reflect_L(corner.source, compose(over_NT, corner), A, B, J)
    hB = compose(Lcod.unit, corner)
    hC = _initial_map_to(Lcod.cylinder)
    f_hat = Ldom.pushout.mediate(hB, hC)
    return LeibnizExterior(Ldom, Lcod, f_hat.check())


def _initial_map_to(X):
    return initial_map(X)


# -- duality ---------------------------------------------------------------------------

_SWAP = {"0": "1", "1": "0", "01": "01"}


def dual_cylinder(X):
    """``Cyl(A, B) -> Cyl(B^op, A^op)``: opposite total space, ends swapped."""
    T = opposite(X.total, name=_op_name(X.total.name))
    D1 = simplex(1)
    assign = {}
    for g, y in X.structure.assignment.items():
        assign[g] = Simplex(_SWAP[y.gen], tuple(1 - v for v in reversed(y.epi))
                            if y.gen == "01" else y.epi)
    p = SimplicialMap(T, D1, assign)
    Aop = opposite(X.B, name=_op_name(X.B.name))
    Bop = opposite(X.A, name=_op_name(X.A.name))
    incA = opposite_map(X.incB, Aop, T)
    incB = opposite_map(X.incA, Bop, T)
    return Cylinder(T, p, Aop, Bop, incA, incB).check()


def _op_name(name):
    return name[:-3] if name.endswith("^op") else name + "^op"


def cylinders_equal(X, Y):
    return (X.total == Y.total and X.structure.assignment == Y.structure.assignment
            and X.A == Y.A and X.B == Y.B and X.incA.assignment == Y.incA.assignment
            and X.incB.assignment == Y.incB.assignment)


def cylinder_isomorphism(X, Y):
    """An isomorphism of cylinders ``X -> Y`` over the same ends, or None."""
    if X.A != Y.A or X.B != Y.B:
        return None
    fixed = {}
    for inc, inc2 in ((X.incA, Y.incA), (X.incB, Y.incB)):
        for g, s in inc.assignment.items():
            t = inc2.assignment[g]
            if fixed.setdefault(s.gen, t.gen) != t.gen:
                return None
    f = find_isomorphism(X.total, Y.total, fixed)
    if f is None or not is_cylinder_map(f, X, Y):
        return None
    return f


# -- left cone --------------------------------------------------------------------------

def left_cone(M, m, B=None):
    """Pushout of ``Delta[0] * M <- M -> B``."""
    B = B or m.target
    C = join(simplex(0), M)
    po = pushout(join_right_inclusion(C), m, name=f"◁{M.name}")
    return po.obj, po


def identity_over(X):
    return (X, identity_map(X))


def split_cylinder(X, over_zero, A=None, B=None):
    """Cylinder structure on ``X`` sending the vertices ``over_zero`` to 0 and the rest to 1.

    Every nondegenerate simplex must list its vertices over 0 first.
    """
    zero = set(over_zero)
    assign = {}
    for g in X.all_generators():
        sides = tuple(0 if v in zero else 1 for v in X.vertices_of(X.nd(g)))
        if any(a > b for a, b in zip(sides, sides[1:])):
            raise CylinderError(f"simplex {g} runs from the 1-side back to the 0-side")
        if sides[0] == sides[-1]:
            assign[g] = Simplex(str(sides[0]), (0,) * len(sides))
        else:
            assign[g] = Simplex("01", sides)
    return make_cylinder(X, SimplicialMap(X, simplex(1), assign), A=A, B=B)
