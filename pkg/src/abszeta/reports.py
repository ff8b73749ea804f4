"""Small result records shared by the verification commands."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a numeric or symbolic verification.

    ``value`` is what was computed, ``expected`` what the identity predicts,
    and ``passed`` records whether |value - expected| met ``tolerance``
    (symbolic checks use value/expected 1.0/0.0 as a boolean flag).
    """

    name: str
    passed: bool
    value: float
    expected: float
    tolerance: float
    detail: str = ""

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = (f"{self.name}: {verdict} (value={self.value!r}, "
                f"expected={self.expected!r}, tol={self.tolerance!r})")
        if self.detail:
            line += f" -- {self.detail}"
        return line
