"""Numerical engine for Hurwitz-type series of negative order, their gamma
functions, integral representations, and classical cross-checks.

The central object is the series

    zeta_r(w; x) = sum_{n >= 0} C(n + r - 1, n) * (n + x)^(-w)

for real order r and x > 0.  For integer r <= 0 the generalized binomial
coefficients vanish beyond n = |r|, so the sum is finite and can be taken
exactly.  For non-integer r the terms decay like n^(r - 1 - Re w): raw
summation converges far too slowly for tight tolerances (reaching 1e-6
absolute accuracy at r = -1/2 would need on the order of 1e12 terms), so
partial sums are taken at geometrically spaced checkpoints N, 2N, 4N, ...
and the power-law tail c * N^(r - w) * (1 + a1/N + a2/N^2 + ...) is
removed by repeated Richardson-style elimination.  The log-weighted sums
behind the gamma function have tails of the form N^r * (a log N + b) per
power of 1/N, which the same scheme handles by eliminating each power
twice.  Every accelerated value carries an internal error estimate
(obtained by re-running the elimination without the finest checkpoint)
and a ConvergenceError is raised when the estimate misses the requested
tolerance.

Independent integral representations (log Gamma as a Frullani-type
integral, the Euler integral for monomials, the log of the zeta product
as an integral of a difference kernel) are evaluated by adaptive
quadrature with explicit substitutions at the singular endpoint, so the
series and quadrature routes verify one another.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import CountingFunction
from .errors import (ConvergenceError, DomainError, ParameterRangeError, PoleError,
                     PreconditionError)
from .quadrature import QuadSettings, exp_tail_cutoff, integrate
from .rationals import as_rational
from .special import BERNOULLI_EVEN, gamma as _gamma

_FACTORIALS = {k: math.factorial(k) for k in range(13)}


@dataclass(frozen=True)
class SeriesSettings:
    """Error budget and term cap for the series engine."""

    tol: float = 1e-9
    max_terms: int = 300_000

    def __post_init__(self):
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise DomainError(f"tolerance must be positive and finite, got {self.tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_SERIES = SeriesSettings()
DEFAULT_QUAD = QuadSettings()


def _integer_order(r) -> int | None:
    """Return r as an int when it is integral (int, integral Fraction/float)."""
    if isinstance(r, bool):
        return None
    if isinstance(r, int):
        return r
    if isinstance(r, Fraction):
        return r.numerator if r.denominator == 1 else None
    if isinstance(r, float) and r.is_integer():
        return int(r)
    return None


def gen_binom(r, n: int):
    """Generalized binomial coefficient C(r + n - 1, n).

    This is the coefficient of the n-th series term at order r, computed
    by the recurrence H_0 = 1, H_n = H_{n-1} * (r + n - 1) / n.  Exact
    (Fraction) for int/Fraction r, floating point for float r.
    """
    if n < 0:
        raise DomainError(f"term index must be >= 0, got {n}")
    if isinstance(r, float):
        h = 1.0
        for k in range(1, n + 1):
            h *= (r + k - 1.0) / k
        return h
    r = as_rational(r)
    h = Fraction(1)
    for k in range(1, n + 1):
        h *= Fraction(r + k - 1, k)
    return h


def _checkpoints(max_terms: int) -> list[int]:
    """Geometric checkpoints 64, 128, ... capped by max_terms."""
    base = 64
    if max_terms < 2 * base:
        return [max_terms]
    cps = []
    n = base
    while n <= max_terms:
        cps.append(n)
        n *= 2
    return cps


def _accelerate(partials, theta, log_tail: bool = False):
    """Richardson-style tail elimination on doubling checkpoints.

    partials[j] is the partial sum at N_j = N_0 * 2^j and behaves like
    S - N_j^(-theta) * (c_0 + c_1/N_j + ...), each coefficient optionally
    multiplied by an affine function of log N_j.  One pass with factor
    f = 2^(theta + i) cancels the pure power N^(-theta - i); a log factor
    needs the same pass twice.
    """
    values = list(partials)
    stage = 0
    uses_at_stage = 0
    per_stage = 2 if log_tail else 1
    while len(values) > 1:
        f = 2.0 ** (theta + stage)
        values = [(f * values[j + 1] - values[j]) / (f - 1.0)
                  for j in range(len(values) - 1)]
        uses_at_stage += 1
        if uses_at_stage == per_stage:
            stage += 1
            uses_at_stage = 0
    return values[0]


def _accelerated_limit(partials, theta, tol: float, log_tail: bool = False,
                       what: str = "series"):
    """Accelerate and attach an error estimate; enforce the tolerance."""
    if len(partials) < 2:
        raise ConvergenceError(
            f"{what}: too few terms allowed for tail elimination; raise max_terms")
    full = _accelerate(partials, theta, log_tail)
    drop = _accelerate(partials[:-1], theta, log_tail)
    floor = 1e-13 * (1.0 + max(abs(p) for p in partials))
    est = 4.0 * abs(full - drop) + floor
    if not est <= tol:
        raise ConvergenceError(
            f"{what}: estimated error {est:.2e} exceeds tolerance {tol:.2e}; "
            "raise max_terms or loosen the tolerance")
    return full


def _coefficient_array(r: float, count: int) -> np.ndarray:
    """C(r + n - 1, n) for n = 0 .. count-1 via a cumulative product."""
    idx = np.arange(count, dtype=float)
    out = np.empty(count, dtype=float)
    out[0] = 1.0
    if count > 1:
        out[1:] = np.cumprod((r + idx[1:] - 1.0) / idx[1:])
    return out


def zeta_series(r, w, x: float, cfg: SeriesSettings = DEFAULT_SERIES) -> complex:
    """zeta_r(w; x) = sum C(n + r - 1, n) (n + x)^(-w) for x > 0.

    Integer order r <= 0 uses the terminating sum (any w).  Otherwise the
    series requires Re(w) > r and is summed with tail elimination; a
    ConvergenceError reports an unmet tolerance.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"series needs x > 0, got x={x}")
    w = complex(w)
    k = _integer_order(r)
    if k is not None and k <= 0:
        total = 0j
        h = 1.0
        for n in range(-k + 1):
            total += h * cmath.exp(-w * math.log(n + x))
            h *= (k + n) / (n + 1)  # next coefficient: H_{n+1} = H_n (r + n)/(n + 1)
        return total
    rf = float(r)
    theta = w - rf
    if not theta.real > 0.0:
        raise DomainError(
            f"series of order {rf} diverges when Re(w) <= {rf}, got w={w}")
    cps = _checkpoints(cfg.max_terms)
    coeffs = _coefficient_array(rf, cps[-1])
    logs = np.log(np.arange(cps[-1], dtype=float) + x)
    terms = coeffs * np.exp(-w * logs)
    csum = np.cumsum(terms)
    partials = [complex(csum[c - 1]) for c in cps]
    value = _accelerated_limit(partials, theta, cfg.tol,
                               what=f"series of order {rf} at w={w}, x={x}")
    return complex(value)


def zeta_series_exact(r: int, w: int, x) -> Fraction:
    """Terminating series in exact rational arithmetic (integer order r <= 0)."""
    k = _integer_order(r)
    if k is None or k > 0:
        raise DomainError(f"exact summation needs an integer order <= 0, got {r!r}")
    if _integer_order(w) is None:
        raise DomainError(f"exact summation needs an integer w, got {w!r}")
    w = _integer_order(w)
    x = as_rational(x)
    if not x > 0:
        raise DomainError(f"series needs x > 0, got x={x}")
    total = Fraction(0)
    for n in range(-k + 1):
        total += gen_binom(Fraction(k), n) * (n + x) ** (-w)
    return total


def raw_tail_bound(r, w_re: float, x: float, n_terms: int) -> float:
    """Upper bound on |sum_{n >= N} C(n + r - 1, n) (n + x)^(-w)| at N = n_terms.

    Uses the coefficient envelope |C(n + r - 1, n)| <= K * n^(r - 1) (K
    taken as a maximum over an initial range with a safety factor) and an
    integral comparison for the remaining power sum; valid for x > 0 and
    Re(w) = w_re > r.  Integer orders r <= 0 have no tail at all once
    N > |r|.
    """
    w_re = float(w_re)
    x = float(x)
    if n_terms < 2:
        raise DomainError(f"tail bound needs N >= 2, got {n_terms}")
    k = _integer_order(r)
    if k is not None and k <= 0:
        if n_terms > -k:
            return 0.0
        r = float(k)
    rf = float(r)
    if not w_re > rf:
        raise DomainError(f"tail bound needs Re(w) > {rf}, got {w_re}")
    envelope = max(abs(gen_binom(rf, n)) * n ** (1.0 - rf) for n in range(1, 65))
    shift_factor = max(1.0, (1.0 + x) ** (-w_re))
    return 1.05 * envelope * shift_factor * (n_terms - 1.0) ** (rf - w_re) / (w_re - rf)


def gamma_series(r, x: float, cfg: SeriesSettings = DEFAULT_SERIES) -> float:
    """Gamma function of order r < 0 at x > 0 from the log-weighted series.

    log Gamma_r(x) = -sum C(n + r - 1, n) log(n + x): a finite sum for
    integer order, otherwise accelerated like the zeta series but with a
    log-carrying tail (each tail power is eliminated twice).  The
    tolerance applies to the log value.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"gamma series needs x > 0, got x={x}")
    k = _integer_order(r)
    if k is not None:
        if k >= 0:
            raise DomainError(f"order must be negative, got {r!r}")
        log_value = 0.0
        h = 1.0
        for n in range(-k + 1):
            log_value -= h * math.log(n + x)
            h *= (k + n) / (n + 1)
        return math.exp(log_value)
    rf = float(r)
    if not rf < 0.0:
        raise DomainError(f"order must be negative, got {r!r}")
    cps = _checkpoints(cfg.max_terms)
    coeffs = _coefficient_array(rf, cps[-1])
    logs = np.log(np.arange(cps[-1], dtype=float) + x)
    csum = np.cumsum(coeffs * logs)
    partials = [float(csum[c - 1]) for c in cps]
    weighted = _accelerated_limit(partials, -rf, cfg.tol, log_tail=True,
                                  what=f"gamma series of order {rf} at x={x}")
    return math.exp(-weighted)


def gamma_integral(r, x: float, cfg: QuadSettings = DEFAULT_QUAD) -> float:
    """Gamma function of order r < 0 at x > 0 from its integral representation.

    log Gamma_r(x) = integral over t in (0, inf) of
    (1 - e^(-t))^(-r) e^(-x t) / t.  The integrand behaves like t^(-r-1)
    at 0: for -r < 1 the substitution t = tau^(1/(-r)) flattens the
    singular endpoint; the infinite range is cut at T with the dropped
    tail below a tenth of the budget.
    """
    rf = float(r)
    x = float(x)
    if not rf < 0.0:
        raise DomainError(f"order must be negative, got {r!r}")
    if not x > 0.0:
        raise DomainError(f"gamma integral needs x > 0, got x={x}")
    a = -rf
    tol = cfg.tol
    T = cfg.truncation_T if cfg.truncation_T is not None else exp_tail_cutoff(x, 1.0, tol)
    T = max(T, 2.0)

    def direct(t: float) -> float:
        if t <= 0.0:
            return 1.0 if a == 1.0 else 0.0
        return (-math.expm1(-t)) ** a * math.exp(-x * t) / t

    def flattened(tau: float) -> float:
        # t = tau^(1/a); integrand times dt/dtau equals ((1-e^-t)/t)^a e^(-xt)/a.
        if tau <= 0.0:
            return 1.0 / a
        t = tau ** (1.0 / a)
        return ((-math.expm1(-t)) / t) ** a * math.exp(-x * t) / a

    head = flattened if a < 1.0 else direct
    log_value = integrate(head, 0.0, 1.0, tol / 4.0, cfg.max_subdivisions)
    log_value += integrate(direct, 1.0, T, tol / 4.0, cfg.max_subdivisions)
    return math.exp(log_value)


def monomial_kernel_check(alpha, s: float, w: float,
                          cfg: QuadSettings = DEFAULT_QUAD) -> float:
    """Evaluate Gamma(w)^(-1) * integral of e^(-(s - alpha) t) t^(w - 1) dt.

    The result must equal (s - alpha)^(-w); requires s > alpha and w > 0.
    For w < 1 the singular endpoint is flattened by t = tau^(1/w).
    """
    a = float(s) - float(alpha)
    w = float(w)
    if not a > 0.0:
        raise DomainError(f"kernel integral needs s > alpha, got s - alpha = {a}")
    if not w > 0.0:
        raise DomainError(f"kernel integral needs w > 0, got w={w}")
    gw = _gamma(w)
    budget = cfg.tol * gw

    def direct(t: float) -> float:
        if t <= 0.0:
            return 1.0 if w == 1.0 else 0.0
        return math.exp(-a * t) * t ** (w - 1.0)

    def flattened(tau: float) -> float:
        # t = tau^(1/w); e^(-a t) t^(w-1) dt becomes e^(-a tau^(1/w)) dtau / w.
        if tau <= 0.0:
            return 1.0 / w
        return math.exp(-a * tau ** (1.0 / w)) / w

    T = max(2.0, cfg.truncation_T if cfg.truncation_T is not None
            else exp_tail_cutoff(a, 1.0, budget))
    if w > 1.0:
        T = max(T, 4.0 * (w - 1.0) / a)
    # Tail of the Euler integral: below 2 T^(w-1) e^(-aT)/a once aT >= 2(w-1).
    while 2.0 * T ** max(w - 1.0, 0.0) * math.exp(-a * T) / a > budget / 10.0:
        T *= 1.5
    head = flattened if w < 1.0 else direct
    total = integrate(head, 0.0, 1.0, budget / 4.0, cfg.max_subdivisions)
    total += integrate(direct, 1.0, T, budget / 4.0, cfg.max_subdivisions)
    return total / gw


def log_zeta_integral(n: CountingFunction, s: float,
                      cfg: QuadSettings = DEFAULT_QUAD) -> float:
    """log of the absolute zeta of n at real s via the difference kernel.

    For a counting function with multiplicity sum zero,
    log zeta(s) = integral over t in (0, inf) of
    (sum_a m(a) e^(-(s - a) t)) / t, a Frullani-type integral; the
    integrand extends continuously to t = 0.  Requires s above every
    exponent.
    """
    s = float(s)
    if n.multiplicity_sum() != 0:
        raise PreconditionError(
            "the difference-kernel integral needs multiplicities summing to zero")
    if n.is_zero():
        return 0.0
    amax = float(n.max_exponent())
    if not s > amax:
        raise DomainError(f"needs s above the top exponent {amax}, got s={s}")
    pairs = [(float(a), float(m)) for a, m in n.terms]
    # Taylor moments of sum m e^(a t) for the t -> 0 limit of the kernel.
    moments = [sum(m * a ** k for a, m in pairs) / _FACTORIALS[k] for k in range(1, 6)]

    def kernel(t: float) -> float:
        if t < 1e-4:
            poly = 0.0
            for mu in reversed(moments):
                poly = poly * t + mu
            return poly * math.exp(-s * t)
        return sum(m * math.exp(-(s - a) * t) for a, m in pairs) / t

    scale = sum(abs(m) for _, m in pairs)
    T = max(2.0, cfg.truncation_T if cfg.truncation_T is not None
            else exp_tail_cutoff(s - amax, scale, cfg.tol))
    total = integrate(kernel, 0.0, 1.0, cfg.tol / 4.0, cfg.max_subdivisions)
    total += integrate(kernel, 1.0, T, cfg.tol / 4.0, cfg.max_subdivisions)
    return total


def vanishing_check(r, m: int, x: float, cfg: SeriesSettings = DEFAULT_SERIES) -> float:
    """|zeta_r(m; x)| for non-integer order r < 0 and integer m in (r, 0].

    The series vanishes identically at those integer arguments, so the
    returned magnitude is the numerical defect of that identity.
    """
    rf = float(r)
    if _integer_order(r) is not None or not rf < 0.0:
        raise DomainError(f"order must be a negative non-integer, got {r!r}")
    mi = _integer_order(m)
    if mi is None or not (rf < mi <= 0):
        raise ParameterRangeError(
            f"m must be an integer in ({rf}, 0], got {m!r}")
    return abs(zeta_series(rf, complex(mi), x, cfg))


def binomial_identity_sum(cfg: SeriesSettings = DEFAULT_SERIES,
                          tail_correction: bool = True) -> float:
    """Partial sum of sum_{n >= 1} C(2n, n) / ((2n - 1) 4^n), plus a tail estimate.

    The exact sum is 1.  Terms decay like n^(-3/2) / (2 sqrt(pi)), so the
    truncated tail is close to 1 / sqrt(pi N); adding that correction
    leaves a residual of order N^(-3/2).
    """
    n_terms = min(cfg.max_terms, 20_000)
    total = 0.0
    a = 0.5  # C(2,1) / (1 * 4)
    for n in range(1, n_terms + 1):
        total += a
        a *= (2.0 * n - 1.0) / (2.0 * n + 2.0)
    if tail_correction:
        total += 1.0 / math.sqrt(math.pi * n_terms)
    return total


def _bernoulli_number(j: int) -> Fraction:
    if j == 0:
        return Fraction(1)
    if j == 1:
        return Fraction(-1, 2)
    if j % 2 == 1:
        return Fraction(0)
    if j not in BERNOULLI_EVEN:
        raise DomainError(f"Bernoulli number B_{j} not tabulated")
    return BERNOULLI_EVEN[j]


def _bernoulli_poly(n: int, x: float) -> float:
    """Bernoulli polynomial B_n(x) from the tabulated numbers."""
    return sum(math.comb(n, j) * float(_bernoulli_number(j)) * x ** (n - j)
               for j in range(n + 1))


def _pochhammer(w: float, j: int) -> float:
    out = 1.0
    for i in range(j):
        out *= w + i
    return out


def classical_hurwitz(w: float, x: float) -> float:
    """Classical Hurwitz zeta sum_{n >= 0} (n + x)^(-w), continued in w.

    Euler-Maclaurin with exact Bernoulli coefficients B_2..B_10 and the
    B_12 term as the truncation bound; integer w <= 0 instead uses the
    exact polynomial value -B_{1-w}(x) / (1 - w).  Defined for x > 0, and
    for -1 < x < 0 with integer w through one step of the shift
    recurrence zeta(w, x) = x^(-w) + zeta(w, x + 1).
    """
    w = float(w)
    x = float(x)
    if w == 1.0:
        raise PoleError("the classical zeta has its pole at w = 1")
    if x <= 0.0:
        if x == math.floor(x):
            raise DomainError(f"undefined at non-positive integer x = {x}")
        if not -1.0 < x < 0.0:
            raise DomainError(f"x must be positive (or in (-1, 0) for integer w), got {x}")
        if not w.is_integer():
            raise DomainError(
                f"negative x needs integer w for a real power x^(-w), got w={w}")
        return x ** (-w) + classical_hurwitz(w, x + 1.0)
    if w.is_integer() and w <= 0.0 and 1 - int(w) <= 12:
        n = 1 - int(w)
        return -_bernoulli_poly(n, x) / n
    n_start = 8
    n_sum = n_start
    while True:
        y = n_sum + x
        omitted = abs(float(BERNOULLI_EVEN[12]) / _FACTORIALS[12]
                      * _pochhammer(w, 11)) * y ** (-w - 11.0)
        if omitted < 1e-12:
            break
        if n_sum > 10_000_000:
            raise ConvergenceError(
                f"Euler-Maclaurin truncation bound stuck at {omitted:.2e} for w={w}, x={x}")
        n_sum *= 2
    y = n_sum + x
    total = sum((i + x) ** (-w) for i in range(n_sum))
    total += y ** (1.0 - w) / (w - 1.0) + 0.5 * y ** (-w)
    for k in range(1, 6):
        total += (float(BERNOULLI_EVEN[2 * k]) / _FACTORIALS[2 * k]
                  * _pochhammer(w, 2 * k - 1) * y ** (-w - 2 * k + 1.0))
    return total


def log_gamma_one(x: float) -> float:
    """log Gamma(x) - (1/2) log(2 pi) for x > 0.

    This is the w-derivative at w = 0 of the classical Hurwitz zeta,
    computed by the differentiated Euler-Maclaurin expansion; it is the
    order +1 analogue of the negative-order gamma logs, used by the
    reflection cross-check.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log_gamma_one needs x > 0, got {x}")
    n_sum = 8
    while True:
        y = n_sum + x
        omitted = abs(float(BERNOULLI_EVEN[12])) / (12 * 11) * y ** (-11.0)
        if omitted < 1e-15:
            break
        n_sum *= 2
    y = n_sum + x
    total = -sum(math.log(i + x) for i in range(n_sum))
    total += y * math.log(y) - y - 0.5 * math.log(y)
    for k in range(1, 6):
        total += float(BERNOULLI_EVEN[2 * k]) / ((2 * k) * (2 * k - 1)) * y ** (1.0 - 2 * k)
    return total


def _log_gamma_one_analytic(x: float) -> complex:
    """Continuation of log_gamma_one to negative non-integer x.

    Repeated use of the recurrence lg(x) = -Log(x) + lg(x + 1) with the
    principal complex logarithm; each negative step contributes -i pi.
    """
    if x > 0.0:
        return complex(log_gamma_one(x))
    if x == math.floor(x):
        raise DomainError(f"pole of the gamma function at x = {x}")
    return -cmath.log(complex(x)) + _log_gamma_one_analytic(x + 1.0)


def euler_reflection_check(s: float) -> tuple[float, float]:
    """Both sides of Gamma_1(s + 1) * Gamma_1(-s) = -1 / (2 sin(pi s)).

    Gamma_1 here is the normalized classical gamma exp(log_gamma_one),
    continued through negative arguments with principal logarithms; the
    imaginary parts of the two log terms cancel, leaving a real value to
    compare with the sine side.  Integer s sits on a pole.
    """
    s = float(s)
    if s == math.floor(s):
        raise DomainError(f"reflection identity has poles at integers, got s = {s}")
    left_log = _log_gamma_one_analytic(s + 1.0) + _log_gamma_one_analytic(-s)
    left_c = cmath.exp(left_log)
    if abs(left_c.imag) > 1e-8 * (1.0 + abs(left_c)):
        raise ConvergenceError(
            f"reflection product unexpectedly non-real at s={s}: {left_c}")
    right = -1.0 / (2.0 * math.sin(math.pi * s))
    return left_c.real, right


def lgamma_classical(x: float) -> float:
    """Classical log Gamma for x > 0, derived from :func:`log_gamma_one`."""
    return log_gamma_one(x) + 0.5 * math.log(2.0 * math.pi)


__all__ = [
    "SeriesSettings", "QuadSettings", "gen_binom", "zeta_series",
    "zeta_series_exact", "raw_tail_bound", "gamma_series", "gamma_integral",
    "monomial_kernel_check", "log_zeta_integral", "vanishing_check",
    "binomial_identity_sum", "classical_hurwitz", "log_gamma_one",
    "euler_reflection_check", "lgamma_classical",
]
