"""Reedy fibrancy, locality and ambifibrancy of cylinders.

Every condition is reduced to fibration verdicts on division maps
``f\\X`` (or ``X/f``) for ``f`` a boundary or final vertex inclusion of a
simplex ``(Delta[m], alpha)``.  Simplices ``alpha`` range over all simplices
of the relevant fibre, degenerate ones included, up to dimension ``dim X``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..lifting import has_rlp
from ..standard import boundary_inclusion, classifying_map, vertex_inclusion
from ..verdict import EXHAUSTED, NO, YES_CERTIFIED, Verdict, combine
from .division import DEFAULT_LEVEL_BUDGET, division_map

CONDITIONS = ("vert_left_fibrant", "horiz_right_fibrant", "vert_right_local")
_FAMILY = {"left": "left_horns", "right": "right_horns", "trivial": "boundaries"}


def index_simplices(S, top):
    return [s for n in range(top + 1) for s in S.level(n)] if S.dimension >= 0 else []


def _division_verdict(f, over, X, side, kind, max_dim, level_budget):
    DN, DM, fX = division_map(f, over, X, side, level_budget)
    if not (DN.exact and DM.exact):
        return Verdict(EXHAUSTED, note="division exceeded the level budget")
    return has_rlp(fX, _FAMILY[kind], max_dim)


def _sweep(X, side, inclusion_of, kind, max_dim, level_budget, start=0):
    S = X.A if side == "L" else X.B
    verdicts = []
    for s in index_simplices(S, X.total.dimension):
        m = s.dimension
        if m < start:
            continue
        v = _division_verdict(inclusion_of(m), classifying_map(S, s), X, side, kind,
                              max_dim, level_budget)
        v.budget_report = dict(v.budget_report, index=repr(s))
        if v.status == NO:
            v.note = f"at index simplex {s!r}: {v.note}"
            return v, verdicts
        verdicts.append(v)
    return None, verdicts


def check_reedy_local(X, which, max_dim=None, level_budget=DEFAULT_LEVEL_BUDGET):
    """Verdict for one of ``vert_left_fibrant``, ``horiz_right_fibrant``, ``vert_right_local``."""
    if which == "vert_left_fibrant":
        bad, vs = _sweep(X, "L", boundary_inclusion, "left", max_dim, level_budget)
    elif which == "horiz_right_fibrant":
        bad, vs = _sweep(X, "R", boundary_inclusion, "right", max_dim, level_budget)
    elif which == "vert_right_local":
        pre = check_reedy_local(X, "vert_left_fibrant", max_dim, level_budget)
        if pre.status == NO:
            return Verdict(EXHAUSTED, note="locality is only decided in trivial-fibration "
                           "form for vertically Reedy left fibrant cylinders")
        bad, vs = _sweep(X, "L", lambda m: vertex_inclusion(m, m), "trivial", max_dim,
                         level_budget, start=1)
    else:
        raise ValueError(f"unknown condition {which!r}")
    if bad is not None:
        return bad
    return combine(vs or [Verdict(YES_CERTIFIED)], note=f"{which}: all division maps pass")


def is_ambifibrant(X, max_dim=None):
    """Inner-fibration verdict of the canonical map ``X -> A * B``."""
    return has_rlp(X.canonical_map(), "inner_horns", max_dim)


@dataclass
class TfaeReport:
    verdicts: dict
    components: dict
    contradiction: bool
    notes: dict = field(default_factory=dict)

    def statuses(self):
        return {k: v.status for k, v in self.verdicts.items()}

    @property
    def agreement(self):
        return not self.contradiction


def verify_tfae(X, max_dim=None, level_budget=DEFAULT_LEVEL_BUDGET):
    """Run (i) ambifibrancy, (ii) both Reedy fibrancies, (iii) Reedy left fibrant and local."""
    vl = check_reedy_local(X, "vert_left_fibrant", max_dim, level_budget)
    hr = check_reedy_local(X, "horiz_right_fibrant", max_dim, level_budget)
    if vl.status == NO:
        loc = Verdict(EXHAUSTED, note="not evaluated: vertical Reedy left fibrancy fails")
    else:
        loc = check_reedy_local(X, "vert_right_local", max_dim, level_budget)
    v1 = is_ambifibrant(X, max_dim)
    v2 = combine([vl, hr], note="vertically Reedy left and horizontally Reedy right fibrant")
    v3 = combine([vl, loc], note="vertically Reedy left fibrant and vertically right local")
    verdicts = {"i": v1, "ii": v2, "iii": v3}
    decided = [v for v in verdicts.values() if v.status != EXHAUSTED]
    contradiction = len({v.is_yes for v in decided}) > 1
    comps = {"vert_left_fibrant": vl, "horiz_right_fibrant": hr, "vert_right_local": loc}
    return TfaeReport(verdicts, comps, contradiction)
