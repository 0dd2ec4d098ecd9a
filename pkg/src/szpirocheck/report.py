"""Pass/fail records shared by the check suites."""

from __future__ import annotations

from dataclasses import dataclass

#: slack below which a nonnegative margin is still accepted (float noise)
MARGIN_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Verdict:
    """Outcome of one inequality or identity check.

    `margin` is the log-space slack RHS - LHS where that makes sense;
    pass iff margin >= -MARGIN_TOLERANCE.  Inapplicable checks carry
    status 'skip' with the reason in `notes`.
    """

    name: str
    status: str  # 'pass' | 'fail' | 'skip'
    margin: float = 0.0
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @staticmethod
    def from_margin(name: str, margin: float, notes: str = "") -> "Verdict":
        status = "pass" if margin >= -MARGIN_TOLERANCE else "fail"
        return Verdict(name, status, float(margin), notes)

    @staticmethod
    def skipped(name: str, reason: str) -> "Verdict":
        return Verdict(name, "skip", 0.0, reason)
