"""Catalog of schemes with known counting functions and functional equations.

Supported kinds:

* ``SpecF1``   -- the one-point scheme, N(u) = 1;
* ``Gm``       -- the multiplicative group, N(u) = u - 1;
* ``Gm^r``     -- its r-fold tensor power, N(u) = (u - 1)^r;
* ``SL(r)``    -- N(u) = u^(r^2-1) * prod_{j=2..r} (1 - u^-j);
* ``GL(r)``    -- N(u) = u^(r^2) * prod_{j=1..r} (1 - u^-j);
* ``Custom``   -- any counting function supplied by the caller.

Every named scheme other than SpecF1 has dimension d and a period vector
w, and its absolute zeta equals the multi-period gamma function of the
periods evaluated at s - d.  ``zeta_of_scheme`` recomputes the zeta both
ways (directly from the counting function and through the gamma product)
and insists the two factorizations agree before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import counting as cf
from .counting import CountingFunction
from .errors import NoFunctionalEquationError, ParameterRangeError
from .gammasine import MultiGammaSpec, PeriodVector, multiperiod_gamma
from .symzeta import FEParams, PowerProduct, zeta_of

SPEC_F1 = "SpecF1"
GM = "Gm"
GM_TENSOR = "GmTensor"
SL = "SL"
GL = "GL"
CUSTOM = "Custom"


@dataclass(frozen=True)
class SchemeSpec:
    """A scheme the package knows how to count.

    ``r`` is the rank parameter for the parametric kinds (tensor power or
    matrix-group size); ``custom_counting`` carries the user-supplied
    counting function for kind ``Custom``.
    """

    kind: str
    r: int | None = None
    custom_counting: CountingFunction | None = None

    @property
    def name(self) -> str:
        if self.kind == SPEC_F1:
            return "SpecF1"
        if self.kind == GM:
            return "Gm"
        if self.kind == GM_TENSOR:
            return f"Gm^{self.r}"
        if self.kind == SL:
            return f"SL({self.r})"
        if self.kind == GL:
            return f"GL({self.r})"
        return "Custom"

    @property
    def dimension(self) -> int | None:
        """Dimension d (the top exponent of the counting function)."""
        if self.kind == SPEC_F1:
            return 0
        if self.kind == GM:
            return 1
        if self.kind == GM_TENSOR:
            return self.r
        if self.kind == SL:
            return self.r * self.r - 1
        if self.kind == GL:
            return self.r * self.r
        return None

    @property
    def rank(self) -> int | None:
        """Number of periods (the order magnitude of the gamma factor)."""
        if self.kind == SPEC_F1:
            return 0
        if self.kind == GM:
            return 1
        if self.kind == GM_TENSOR:
            return self.r
        if self.kind == SL:
            return self.r - 1
        if self.kind == GL:
            return self.r
        return None

    @property
    def periods(self) -> PeriodVector | None:
        if self.kind == GM:
            return PeriodVector((Fraction(1),))
        if self.kind == GM_TENSOR:
            return PeriodVector((Fraction(1),) * self.r)
        if self.kind == SL:
            return PeriodVector(tuple(Fraction(j) for j in range(2, self.r + 1)))
        if self.kind == GL:
            return PeriodVector(tuple(Fraction(j) for j in range(1, self.r + 1)))
        return None


def spec_f1() -> SchemeSpec:
    return SchemeSpec(SPEC_F1)


def gm() -> SchemeSpec:
    return SchemeSpec(GM)


def gm_tensor(r: int) -> SchemeSpec:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ParameterRangeError(f"Gm^r needs an integer r >= 1, got {r!r}")
    return SchemeSpec(GM_TENSOR, r=r)


def sl(r: int) -> SchemeSpec:
    if not isinstance(r, int) or isinstance(r, bool) or r < 2:
        raise ParameterRangeError(f"SL(r) needs an integer r >= 2, got {r!r}")
    return SchemeSpec(SL, r=r)


def gl(r: int) -> SchemeSpec:
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ParameterRangeError(f"GL(r) needs an integer r >= 1, got {r!r}")
    return SchemeSpec(GL, r=r)


def custom(n: CountingFunction) -> SchemeSpec:
    return SchemeSpec(CUSTOM, custom_counting=n)


def counting_of(spec: SchemeSpec) -> CountingFunction:
    """Counting function of a scheme from the catalog."""
    if spec.kind == SPEC_F1:
        return cf.ONE
    if spec.kind == GM:
        return cf.U_MINUS_ONE
    if spec.kind == GM_TENSOR:
        return cf.tensor_power(cf.U_MINUS_ONE, spec.r)
    if spec.kind in (SL, GL):
        d = spec.dimension
        start = 1 if spec.kind == GL else 2
        n = cf.normalize([(d, 1)])
        for j in range(start, spec.r + 1):
            n = cf.otimes(n, cf.normalize([(0, 1), (-j, -1)]))
        return n
    if spec.kind == CUSTOM:
        return spec.custom_counting
    raise ParameterRangeError(f"unknown scheme kind {spec.kind!r}")


def zeta_of_scheme(spec: SchemeSpec) -> PowerProduct:
    """Absolute zeta of a scheme, cross-checked through its gamma factorization.

    For schemes with a period vector the result must coincide with the
    multi-period gamma of the periods shifted by the dimension; a mismatch
    would mean the counting and gamma routes disagree, so it is treated as
    an internal error rather than a recoverable condition.
    """
    product = zeta_of(counting_of(spec))
    periods = spec.periods
    if periods is not None:
        g = multiperiod_gamma(MultiGammaSpec(order=-len(periods), periods=periods))
        via_gamma = g.shifted(spec.dimension, variable="s")
        if via_gamma.factors != product.factors:
            raise AssertionError(
                f"internal cross-check failed for {spec.name}: "
                f"counting route gives {product}, gamma route gives {via_gamma}")
    return product


def fe_params_of(spec: SchemeSpec) -> FEParams:
    """Functional-equation center and sign for schemes that have one.

    The center is 2d - |w| (dimension d, total period |w|) and the sign is
    (-1)^rank; SpecF1 and Custom schemes have no equation on record.
    """
    if spec.kind in (SPEC_F1, CUSTOM):
        raise NoFunctionalEquationError(f"no functional equation on record for {spec.name}")
    d = spec.dimension
    total = spec.periods.total()
    center = Fraction(2 * d) - total
    sign = -1 if spec.rank % 2 else 1
    return FEParams(center=center, sign=sign)


def catalog_entries() -> tuple[SchemeSpec, ...]:
    """Representative schemes shown by the CLI catalog listing."""
    return (
        spec_f1(),
        gm(),
        gm_tensor(2),
        gm_tensor(3),
        sl(2),
        sl(3),
        sl(4),
        gl(1),
        gl(2),
        gl(3),
    )
