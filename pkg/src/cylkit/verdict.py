"""Four-valued verdicts."""
from __future__ import annotations

from dataclasses import dataclass, field

YES_CERTIFIED = "YES_CERTIFIED"
YES_BOUNDED = "YES_BOUNDED"
NO = "NO"
EXHAUSTED = "EXHAUSTED"
STATUSES = (YES_CERTIFIED, YES_BOUNDED, NO, EXHAUSTED)


@dataclass
class Verdict:
    """Outcome of a bounded decision procedure.

    Deliberately not usable as a boolean: callers must look at ``status``.
    """

    status: str
    cutoff: int | None = None
    witness: object = None
    budget_report: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown verdict status {self.status!r}")

    def __bool__(self):
        raise TypeError("Verdict has no truth value; inspect .status")

    @property
    def is_yes(self):
        return self.status in (YES_CERTIFIED, YES_BOUNDED)

    @property
    def is_no(self):
        return self.status == NO

    def summary(self):
        out = {"status": self.status}
        if self.cutoff is not None:
            out["cutoff"] = self.cutoff
        if self.note:
            out["note"] = self.note
        if self.budget_report:
            out["budget_report"] = dict(self.budget_report)
        return out


def combine(verdicts, note=""):
    """Conjunction: NO wins, then EXHAUSTED, then YES_BOUNDED."""
    verdicts = list(verdicts)
    for v in verdicts:
        if v.status == NO:
            return v
    for v in verdicts:
        if v.status == EXHAUSTED:
            return v
    bounded = [v for v in verdicts if v.status == YES_BOUNDED]
    if bounded:
        cut = min((v.cutoff for v in bounded if v.cutoff is not None), default=None)
        return Verdict(YES_BOUNDED, cutoff=cut, note=note or bounded[0].note)
    return Verdict(YES_CERTIFIED, note=note)


def exit_code(verdicts):
    statuses = [v.status for v in verdicts]
    if NO in statuses:
        return 1
    if EXHAUSTED in statuses:
        return 2
    return 0
