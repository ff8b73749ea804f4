"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: usage errors exit 1, parse errors 2,
domain errors (including poles and violated preconditions) 3, and
convergence failures 4.
"""

from __future__ import annotations


class AbsZetaError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AbsZetaError):
    """Rejected input text.  `offset` is the character position of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.reason = message
        self.offset = offset


class UnknownSchemeError(ParseError):
    """Scheme name not recognized by the catalog."""


class DomainError(AbsZetaError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation point coincides with a pole of the function."""


class PreconditionError(DomainError):
    """A structural precondition of an operation does not hold."""


class ParameterRangeError(DomainError):
    """Structural parameter out of its admissible range (e.g. rank too small)."""


class NoFunctionalEquationError(DomainError):
    """No functional equation is on record for the requested object."""


class ConvergenceError(AbsZetaError):
    """A series or quadrature could not meet the requested tolerance."""


class BranchCutWarning(UserWarning):
    """A non-integer power was evaluated on the negative real axis."""
