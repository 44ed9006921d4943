"""Claim records and per-claim outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Outcome:
    """What a check function returns: ``passed`` is None when limited."""

    passed: bool
    witness: list = field(default_factory=list)
    detail: str = ""


@dataclass(frozen=True)
class Claim:
    """A named assertion and the check that decides it.

    ``fields`` says which coefficient fields the check accepts: ``exact``
    (rationals, optionally with i), ``prime`` (prime fields only), ``any``,
    ``prime-i`` (prime fields containing a square root of -1) or ``i`` (any
    field containing one).
    """

    id: str
    location: str
    description: str
    check: str  # "module:function" resolved in the worker
    args: tuple = ()
    fields: str = "exact"
    expected: str = ""
    inputs: str = ""


@dataclass
class ClaimResult:
    id: str
    location: str
    status: str  # "pass", "fail" or "resource-limited"
    field: str
    ms: float = None
    witness: list = field(default_factory=list)
    detail: str = ""

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "paper_location": self.location,
            "status": self.status,
            "field": self.field,
            "ms": round(self.ms, 1) if timings and self.ms is not None else None,
        }
        if self.witness:
            out["witness"] = list(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out
