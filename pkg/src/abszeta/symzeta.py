"""Symbolic zeta layer: Hurwitz-type forms, factored power products, and
exact functional-equation checks.

For a finite counting function N(u) = sum m(a) u^a the associated
Hurwitz-type form is Z(w; s) = sum m(a) (s - a)^(-w), and the absolute
zeta function it regularizes is the finite power product
zeta(s) = prod (s - a)^(-m(a)), obtained by exponentiating the
w-derivative of Z at w = 0.  Because every object here is a finite sum
or product with rational data, functional equations can be decided
exactly by comparing factor maps -- no floating point is involved.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .counting import CountingFunction
from .errors import BranchCutWarning, DomainError, PoleError, PreconditionError
from .rationals import as_rational, qstr

ShiftPair = Tuple[Fraction, Fraction]
FactorPair = Tuple[Fraction, Fraction]


def _paren(variable: str, root: Fraction) -> str:
    """Render the linear factor (variable - root) canonically."""
    if root == 0:
        return variable
    if root > 0:
        return f"({variable}-{qstr(root)})"
    return f"({variable}+{qstr(-root)})"


@dataclass(frozen=True)
class HurwitzForm:
    """Finite sum of shifted inverse powers: sum coeff * (variable - shift)^(-w).

    Terms are kept shift-descending with nonzero coefficients; ``variable``
    names the evaluation variable in printed output (``s`` for zeta-side
    objects, ``x`` for gamma-side ones).
    """

    terms: tuple[ShiftPair, ...]
    variable: str = "s"

    def as_dict(self) -> dict[Fraction, Fraction]:
        return dict(self.terms)

    def shifts(self) -> tuple[Fraction, ...]:
        return tuple(a for a, _ in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for i, (a, m) in enumerate(self.terms):
            base = f"{_paren(self.variable, a)}^-w"
            body = base if abs(m) == 1 else f"{qstr(abs(m))}*{base}"
            if i == 0:
                pieces.append(body if m > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if m > 0 else f"- {body}")
        return " ".join(pieces)


@dataclass(frozen=True)
class PowerProduct:
    """Finite product of rational powers of linear factors.

    ``factors`` maps roots to exponents, root-ascending with nonzero
    exponents; the empty product is the constant 1.
    """

    factors: tuple[FactorPair, ...]
    variable: str = "s"

    def factor_map(self) -> dict[Fraction, Fraction]:
        return dict(self.factors)

    def is_one(self) -> bool:
        return not self.factors

    def roots(self) -> tuple[Fraction, ...]:
        return tuple(r for r, _ in self.factors)

    def exponent_sum(self) -> Fraction:
        return sum((e for _, e in self.factors), Fraction(0))

    def inverse(self) -> "PowerProduct":
        return PowerProduct(tuple((r, -e) for r, e in self.factors), self.variable)

    def pow_int(self, k: int) -> "PowerProduct":
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("integer power expected")
        if k == 0:
            return PowerProduct((), self.variable)
        return normalize_power_product(((r, k * e) for r, e in self.factors), self.variable)

    def times(self, other: "PowerProduct") -> "PowerProduct":
        return normalize_power_product(list(self.factors) + list(other.factors), self.variable)

    def shifted(self, d, variable: str | None = None) -> "PowerProduct":
        """Substitute variable -> variable - d, i.e. move every root up by d."""
        d = as_rational(d)
        return normalize_power_product(((r + d, e) for r, e in self.factors),
                                       variable if variable is not None else self.variable)

    def in_variable(self, variable: str) -> "PowerProduct":
        return PowerProduct(self.factors, variable)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{_paren(self.variable, r)}^{qstr(e)}" for r, e in self.factors)


@dataclass(frozen=True)
class FEParams:
    """Functional-equation data: expected center c and sign eps = +-1."""

    center: Fraction
    sign: int

    def __post_init__(self):
        object.__setattr__(self, "center", as_rational(self.center))
        if self.sign not in (1, -1):
            raise DomainError(f"functional-equation sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class FEReport:
    """Outcome of an exact functional-equation check.

    ``holds`` is True when the reflected factor map reproduces the original
    one and the exponent sum is even (so the reflection carries no stray
    global sign).  ``mismatches`` lists (root, exponent, reflected exponent)
    triples where the two maps differ.
    """

    holds: bool
    center: Fraction
    sign: int
    parity_sum: int
    mismatches: tuple[tuple[Fraction, Fraction, Fraction], ...]


def normalize_hurwitz(pairs: Iterable[tuple[object, object]], variable: str = "s") -> HurwitzForm:
    """Canonicalize (shift, coeff) pairs: merge, drop zeros, sort descending."""
    acc: dict[Fraction, Fraction] = {}
    for a, m in pairs:
        a = as_rational(a)
        m = as_rational(m)
        acc[a] = acc.get(a, Fraction(0)) + m
    ordered = tuple(sorted(((a, m) for a, m in acc.items() if m != 0),
                           key=lambda p: p[0], reverse=True))
    return HurwitzForm(ordered, variable)


def normalize_power_product(pairs: Iterable[tuple[object, object]], variable: str = "s") -> PowerProduct:
    """Canonicalize (root, exponent) pairs: merge, drop zeros, sort ascending."""
    acc: dict[Fraction, Fraction] = {}
    for r, e in pairs:
        r = as_rational(r)
        e = as_rational(e)
        acc[r] = acc.get(r, Fraction(0)) + e
    ordered = tuple(sorted(((r, e) for r, e in acc.items() if e != 0),
                           key=lambda p: p[0]))
    return PowerProduct(ordered, variable)


def hurwitz_of(n: CountingFunction, variable: str = "s") -> HurwitzForm:
    """Hurwitz-type form of a counting function: shift a gets coefficient m(a)."""
    return normalize_hurwitz(n.terms, variable)


def zeta_of(n: CountingFunction, variable: str = "s") -> PowerProduct:
    """Absolute zeta of a counting function: root a gets exponent -m(a)."""
    return normalize_power_product(((a, -m) for a, m in n.terms), variable)


def counting_of_product(p: PowerProduct) -> CountingFunction:
    """Inverse of :func:`zeta_of`: recover the counting function from a product."""
    from .counting import normalize as _normalize_counting

    return _normalize_counting((r, -e) for r, e in p.factors)


def _finite_complex(value, what: str) -> complex:
    z = complex(value)
    if not (cmath.isfinite(z)):
        raise DomainError(f"{what} must be finite, got {z}")
    return z


def eval_hurwitz(z: HurwitzForm, w: complex, s: complex) -> complex:
    """Evaluate sum m * (s - shift)^(-w) with principal branches."""
    w = _finite_complex(w, "order w")
    s = _finite_complex(s, "argument s")
    total = 0j
    for a, m in z.terms:
        d = s - complex(float(a))
        if d == 0:
            raise PoleError(f"evaluation point {s} coincides with shift {qstr(a)}")
        total += float(m) * cmath.exp(-w * cmath.log(d))
    return total


def eval_hurwitz_exact(z: HurwitzForm, w: int, x) -> Fraction:
    """Exact rational evaluation of sum m * (x - shift)^(-w) for integer w.

    For w <= 0 the powers are polynomials, so any rational x is fine; for
    w > 0 the point must avoid every shift.
    """
    if not isinstance(w, int) or isinstance(w, bool):
        raise DomainError(f"exact evaluation needs an integer order, got {w!r}")
    x = as_rational(x)
    total = Fraction(0)
    for a, m in z.terms:
        d = x - a
        if d == 0 and w > 0:
            raise PoleError(f"evaluation point {qstr(x)} coincides with shift {qstr(a)}")
        total += m * d ** (-w)
    return total


def eval_power_product(p: PowerProduct, s: complex) -> complex:
    """Evaluate prod (s - root)^exp with principal branches.

    Raises :class:`PoleError` when s hits a root with negative exponent;
    returns 0 when it hits a root with positive exponent.  Emits
    :class:`BranchCutWarning` when a non-integer power is taken of a
    negative real number (the principal branch is used regardless).
    """
    s = _finite_complex(s, "argument s")
    zero_hit = False
    log_sum = 0j
    for r, e in p.factors:
        d = s - complex(float(r))
        if d == 0:
            if e < 0:
                raise PoleError(f"evaluation point {s} is a pole at root {qstr(r)}")
            zero_hit = True
            continue
        if e.denominator != 1 and d.imag == 0 and d.real < 0:
            warnings.warn(
                f"non-integer power {qstr(e)} of negative real value {d.real}; "
                "using the principal branch", BranchCutWarning, stacklevel=2)
        log_sum += float(e) * cmath.log(d)
    if zero_hit:
        return 0j
    return cmath.exp(log_sum)


def log_derivative_at_zero(z: HurwitzForm, s: complex) -> complex:
    """d/dw at w = 0 of the Hurwitz-type form: -sum m * log(s - shift).

    This is the principal logarithm of the associated power product, so
    exp of it recovers the absolute zeta value.
    """
    s = _finite_complex(s, "argument s")
    total = 0j
    for a, m in z.terms:
        d = s - complex(float(a))
        if d == 0:
            raise PoleError(f"evaluation point {s} coincides with shift {qstr(a)}")
        total += -float(m) * cmath.log(d)
    return total


def reflected(p: PowerProduct, center) -> tuple[PowerProduct, int]:
    """Rewrite P(center - s) as sign * Q(s) with Q a power product in s.

    Each factor (center - s - root)^e contributes (-1)^e times
    (s - (center - root))^e, so all exponents must be integers; the
    returned sign is (-1) to the exponent sum.
    """
    center = as_rational(center)
    for r, e in p.factors:
        if e.denominator != 1:
            raise PreconditionError(
                f"reflection needs integer exponents, found {qstr(e)} at root {qstr(r)}")
    q = normalize_power_product(((center - r, e) for r, e in p.factors), p.variable)
    sign = -1 if p.exponent_sum() % 2 else 1
    return q, sign


def check_functional_equation(p: PowerProduct, fe: FEParams) -> FEReport:
    """Decide exactly whether P(s) = P(center - s)^sign holds identically.

    The equation holds iff the map
    {center - root -> sign * exponent} equals the original factor map and
    the exponent sum is even (an odd sum would flip the overall sign of
    the reflected product).  Requires integer exponents.
    """
    for r, e in p.factors:
        if e.denominator != 1:
            raise PreconditionError(
                f"functional-equation check needs integer exponents, found {qstr(e)} at root {qstr(r)}")
    original = p.factor_map()
    transformed = {fe.center - r: fe.sign * e for r, e in p.factors}
    mismatches = []
    for root in sorted(set(original) | set(transformed)):
        oe = original.get(root, Fraction(0))
        te = transformed.get(root, Fraction(0))
        if oe != te:
            mismatches.append((root, oe, te))
    parity = int(p.exponent_sum())
    holds = not mismatches and parity % 2 == 0
    return FEReport(holds=holds, center=fe.center, sign=fe.sign,
                    parity_sum=parity, mismatches=tuple(mismatches))
