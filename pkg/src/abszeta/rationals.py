"""Exact rational scalars and their canonical string form.

All symbolic data in this package (exponents, multiplicities, roots,
shifts) is kept as `fractions.Fraction` so algebraic identities hold
exactly.  Floats are deliberately rejected by the coercion helper:
converting a float silently would smuggle rounding error into the exact
layer.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or string like ``"-3/2"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"expected int, str, or Fraction, got {type(value).__name__}")


def qstr(value: int | str | Fraction) -> str:
    """Canonical rational string: ``"p"`` when the denominator is 1, else ``"p/q"``."""
    q = as_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
