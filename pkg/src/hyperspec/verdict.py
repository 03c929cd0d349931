"""The audited-inequality record shared by the bound catalog and the curvature module."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"

MARGIN_TOL = 1e-7
STRICT_TOL = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """One inequality evaluated on one hypergraph.

    ``margin`` is oriented so that the inequality is satisfied exactly when
    ``margin >= 0`` (``> 0`` for strict relations). ``must_hold`` is False for
    catalog entries with known counterexamples that are reported for audit
    only.
    """

    bound_id: str
    relation: str
    preconditions_met: bool
    reasons: tuple[str, ...] = ()
    subject: float | None = None
    bound: float | None = None
    margin: float | None = None
    verdict: str = NOT_APPLICABLE
    must_hold: bool = True
    details: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "bound_id": self.bound_id,
            "relation": self.relation,
            "preconditions_met": self.preconditions_met,
            "reasons": list(self.reasons),
            "subject": self.subject,
            "bound": self.bound,
            "margin": self.margin,
            "verdict": self.verdict,
            "must_hold": self.must_hold,
            "details": self.details,
        }


def judge(margin: float, strict: bool = False) -> str:
    if strict:
        return HOLDS if margin > STRICT_TOL else VIOLATED
    return HOLDS if margin >= -MARGIN_TOL else VIOLATED


def oriented_margin(subject: float, bound: float, relation: str) -> float:
    """Signed slack of ``subject <relation> bound``."""
    if relation in ("<=", "<"):
        return bound - subject
    if relation in (">=", ">"):
        return subject - bound
    raise ValueError(f"unknown relation {relation!r}")


def not_applicable(bound_id: str, relation: str, reasons, must_hold: bool = True, **details) -> BoundReport:
    return BoundReport(bound_id, relation, False, tuple(reasons), must_hold=must_hold, details=details)


def evaluated(bound_id: str, relation: str, subject: float, bound: float,
              must_hold: bool = True, **details) -> BoundReport:
    subject, bound = float(subject), float(bound)
    margin = oriented_margin(subject, bound, relation)
    return BoundReport(
        bound_id, relation, True, (), subject, bound, margin,
        judge(margin, strict=relation in ("<", ">")), must_hold, details,
    )


def combined(bound_id: str, parts, must_hold: bool = True, **details) -> BoundReport:
    """Report for a chain of inequalities judged together.

    ``parts`` holds ``(label, subject, bound, relation)`` tuples. The verdict is
    ``holds`` only when every part holds; the headline subject, bound and
    margin are those of the tightest part.
    """
    rows = []
    for label, subject, bound, relation in parts:
        subject, bound = float(subject), float(bound)
        margin = oriented_margin(subject, bound, relation)
        rows.append({
            "label": label, "relation": relation, "subject": subject, "bound": bound,
            "margin": margin, "verdict": judge(margin, strict=relation in ("<", ">")),
        })
    worst = min(rows, key=lambda r: (r["verdict"] == HOLDS, r["margin"]))
    verdict = HOLDS if all(r["verdict"] == HOLDS for r in rows) else VIOLATED
    return BoundReport(
        bound_id, worst["relation"], True, (), worst["subject"], worst["bound"], worst["margin"],
        verdict, must_hold, {**details, "parts": rows},
    )
