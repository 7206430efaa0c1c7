"""Pushforward and pullback of cylinders along a pair of maps ``u: A -> A'``, ``v: B -> B'``."""
from __future__ import annotations

from dataclasses import dataclass

from ..limits import join, join_map, join_simplex, join_structure, pullback, pushout
from ..maps import SimplicialMap, compose, identity_map
from .core import Cylinder, initial, initial_map, is_cylinder_map


@dataclass
class Pushforward:
    cylinder: Cylinder
    inj: SimplicialMap
    pushout: object
    source: Cylinder


@dataclass
class PullbackCylinder:
    cylinder: Cylinder
    proj: SimplicialMap
    over: SimplicialMap
    pullback: object
    source: Cylinder


def sum_map(u, v, I=None, I2=None):
    """``u + v: A + B -> A' + B'`` between initial cylinders."""
    I = I or initial(u.source, v.source)
    I2 = I2 or initial(u.target, v.target)
    assign = {}
    for a, y in I.incA.assignment.items():
        assign[y.gen] = I2.incA.apply(u.assignment[a])
    for b, y in I.incB.assignment.items():
        assign[y.gen] = I2.incB.apply(v.assignment[b])
    return SimplicialMap(I.total, I2.total, assign)


def pushforward(u, v, X, name=None):
    """``(u, v)_! X``: the pushout of ``X <- A + B -> A' + B'``."""
    I2 = initial(u.target, v.target)
    uv = sum_map(u, v, initial(X.A, X.B), I2)
    po = pushout(initial_map(X), uv, name=name or f"({u.name or 'u'},{v.name or 'v'})_!{X.total.name}")
    struct = po.mediate(X.structure, I2.structure)
    cyl = Cylinder(po.obj, struct, u.target, v.target,
                   compose(po.inj_C, I2.incA), compose(po.inj_C, I2.incB)).check()
    return Pushforward(cyl, po.inj_B, po, X)


def pullback_cyl(u, v, Y, name=None):
    """``(u, v)^* Y``: the pullback of ``Y -> A' * B'`` along ``u * v``."""
    A, B = u.source, v.source
    J = join(A, B)
    uv = join_map(u, v, J, Y.join_target())
    pb = pullback(uv, Y.canonical_map(), name=name or f"({u.name or 'u'},{v.name or 'v'})^*{Y.total.name}")
    P = pb.obj
    struct = compose(join_structure(J), pb.proj_X)
    incA = SimplicialMap(A, P, {a: pb.pair(join_simplex(J, A.nd(a), None),
                                           Y.incA.apply(u.assignment[a])) for a in A.dim_of})
    incB = SimplicialMap(B, P, {b: pb.pair(join_simplex(J, None, B.nd(b)),
                                           Y.incB.apply(v.assignment[b])) for b in B.dim_of})
    cyl = Cylinder(P, struct, A, B, incA, incB).check()
    cyl._join = J
    cyl._canonical = pb.proj_X
    return PullbackCylinder(cyl, pb.proj_Y, pb.proj_X, pb, Y)


def pushforward_map(h, F1, F2):
    """``(u, v)_!`` on a cylinder map ``h: X1 -> X2``."""
    return F1.pushout.mediate(compose(F2.inj, h), F2.pushout.inj_C)


def pullback_map(k, G1, G2):
    """``(u, v)^*`` on a cylinder map ``k: Y1 -> Y2``."""
    return G2.pullback.lift(G1.over, compose(k, G1.proj))


def unit(u, v, X, F=None, GF=None):
    """``X -> (u, v)^*(u, v)_! X``."""
    F = F or pushforward(u, v, X)
    GF = GF or pullback_cyl(u, v, F.cylinder)
    return GF.pullback.lift(X.canonical_map(), F.inj), F, GF


def counit(u, v, Y, G=None, FG=None):
    """``(u, v)_!(u, v)^* Y -> Y``."""
    G = G or pullback_cyl(u, v, Y)
    FG = FG or pushforward(u, v, G.cylinder)
    return FG.pushout.mediate(G.proj, initial_map(Y)), G, FG


@dataclass
class TriangleReport:
    left_triangle: bool
    right_triangle: bool
    maps_are_cylinder_maps: bool

    @property
    def ok(self):
        return self.left_triangle and self.right_triangle and self.maps_are_cylinder_maps


def triangle_identities(u, v, X, Y):
    """``eps_{F X} . F(eta_X) = 1`` and ``G(eps_Y) . eta_{G Y} = 1``."""
    eta, F, GF = unit(u, v, X)
    FGF = pushforward(u, v, GF.cylinder)
    eps_F, _, _ = counit(u, v, F.cylinder, G=GF, FG=FGF)
    left = compose(eps_F, pushforward_map(eta, F, FGF))
    t1 = left.assignment == identity_map(F.cylinder.total).assignment
    G = pullback_cyl(u, v, Y)
    eta_G, FG, GFG = unit(u, v, G.cylinder)
    eps, _, _ = counit(u, v, Y, G=G, FG=FG)
    right = compose(pullback_map(eps, GFG, G), eta_G)
    t2 = right.assignment == identity_map(G.cylinder.total).assignment
    cyl_ok = (is_cylinder_map(eta, X, GF.cylinder) and is_cylinder_map(eps, FG.cylinder, Y)
              and is_cylinder_map(eta_G, G.cylinder, GFG.cylinder))
    return TriangleReport(t1, t2, cyl_ok)
