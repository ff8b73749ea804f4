"""Adaptive quadrature (Gauss-Kronrod via scipy's QUADPACK binding) mapped
into this package's error taxonomy.

Callers pass plain callables and finite panels; endpoint singularities are
handled upstream by explicit substitutions, so the wrapper only needs to
enforce the error budget and turn QUADPACK trouble into ConvergenceError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import quad

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class QuadSettings:
    """Error budget and subdivision limit for one integration task.

    ``truncation_T`` optionally pins the upper cutoff of infinite-range
    integrands; when None the caller derives a cutoff from its own tail
    bound.
    """

    tol: float = 1e-10
    max_subdivisions: int = 200
    truncation_T: float | None = None

    def __post_init__(self):
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise DomainError(f"tolerance must be positive and finite, got {self.tol}")
        if self.max_subdivisions < 1:
            raise DomainError(f"need at least one subdivision, got {self.max_subdivisions}")
        if self.truncation_T is not None and not (
                self.truncation_T > 0.0 and math.isfinite(self.truncation_T)):
            raise DomainError(
                f"truncation cutoff must be positive and finite, got {self.truncation_T}")


def integrate(f: Callable[[float], float], a: float, b: float,
              epsabs: float, max_subdivisions: int = 200) -> float:
    """Integrate f over [a, b] to absolute accuracy epsabs.

    Raises :class:`ConvergenceError` if QUADPACK reports an error estimate
    above the budget or flags the computation as unreliable.
    """
    if not a < b:
        raise DomainError(f"empty or reversed integration panel [{a}, {b}]")
    result = quad(f, a, b, epsabs=epsabs, epsrel=0.0,
                  limit=max_subdivisions, full_output=1)
    value, abserr = result[0], result[1]
    message = result[3] if len(result) > 3 else ""
    if message:
        raise ConvergenceError(
            f"quadrature on [{a}, {b}] unreliable (est. error {abserr:.2e}): {message}")
    if not abserr <= epsabs * 1.01 + 1e-300:
        raise ConvergenceError(
            f"quadrature on [{a}, {b}] reached error {abserr:.2e} > budget {epsabs:.2e}")
    return value


def exp_tail_cutoff(rate: float, scale: float, tol: float) -> float:
    """Upper cutoff T with scale * exp(-rate * T) / rate < tol / 10.

    Conservative bound for integrands dominated by scale * exp(-rate * t);
    the dropped tail is then below a tenth of the error budget.
    """
    if rate <= 0.0:
        raise DomainError(f"tail cutoff needs a positive decay rate, got {rate}")
    if scale <= 0.0:
        scale = 1.0
    return max(1.0, math.log(10.0 * scale / (rate * tol)) / rate)
