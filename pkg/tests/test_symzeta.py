"""Symbolic shifted-power products and functional-equation checks.

Claims covered:
- zeta_of maps exponent alpha with multiplicity m to a factor (s-alpha)^-m,
  counting_of_product inverts it;
- canonical printing is root-ascending with "s^e" for root zero;
- products multiply/invert/shift consistently (numeric cross-check);
- numerical evaluation agrees with direct complex arithmetic, raises at
  poles/zeros, and warns on branch-cut evaluation;
- reflection across a center produces the factor map of P(c-s) and the
  functional-equation verdict matches a brute-force factor comparison.
"""

from __future__ import annotations

import cmath
import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import abszeta.counting as cf
from abszeta.errors import BranchCutWarning, DomainError, PoleError, PreconditionError
from abszeta.symzeta import (
    FEParams,
    HurwitzForm,
    PowerProduct,
    check_functional_equation,
    counting_of_product,
    eval_hurwitz,
    eval_hurwitz_exact,
    eval_power_product,
    hurwitz_of,
    log_derivative_at_zero,
    normalize_power_product,
    reflected,
    zeta_of,
)

SL2 = cf.normalize([(3, 1), (1, -1)])

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)
int_exps = st.integers(min_value=-4, max_value=4)
products = st.lists(st.tuples(rationals, int_exps), max_size=4).map(normalize_power_product)


# ---------------------------------------------------------------------------
# structure builders

def test_zeta_of_negates_multiplicities():
    z = zeta_of(SL2)
    assert z.factor_map() == {F(3): F(-1), F(1): F(1)}
    assert str(z) == "(s-1)^1 * (s-3)^-1"


def test_hurwitz_of_preserves_multiplicities():
    h = hurwitz_of(SL2)
    assert h.terms == ((F(3), F(1)), (F(1), F(-1)))
    assert str(h) == "(s-3)^-w - (s-1)^-w"
    assert str(hurwitz_of(cf.U, variable="x")) == "(x-1)^-w"


def test_counting_of_product_inverts_zeta_of():
    assert counting_of_product(zeta_of(SL2)) == SL2
    assert counting_of_product(PowerProduct(())) == cf.ZERO


def test_spec_f1_prints_bare_variable():
    z = zeta_of(cf.ONE)
    assert str(z) == "s^-1"
    assert str(zeta_of(cf.ONE, variable="w")) == "w^-1"


def test_print_order_is_root_ascending():
    p = normalize_power_product([(2, 1), (-1, 3), (F(1, 2), -2)])
    assert str(p) == "(s+1)^3 * (s-1/2)^-2 * (s-2)^1"
    assert str(PowerProduct(())) == "1"


def test_normalization_merges_and_drops():
    p = normalize_power_product([(1, 2), (1, -2), (0, 1)])
    assert p.factor_map() == {F(0): F(1)}
    assert normalize_power_product([(5, 3), (5, -3)]).is_one()


def test_product_operations():
    z = zeta_of(SL2)
    assert z.times(z.inverse()).is_one()
    assert z.pow_int(2).factor_map() == {F(3): F(-2), F(1): F(2)}
    assert z.pow_int(0).is_one()
    assert z.pow_int(-1) == z.inverse()
    assert z.exponent_sum() == 0
    assert z.roots() == (F(1), F(3))


def test_shift_moves_roots():
    p = normalize_power_product([(0, -1), (-1, 2)])
    q = p.shifted(3)
    assert q.factor_map() == {F(3): F(-1), F(2): F(2)}
    assert p.shifted(0) == p
    assert p.in_variable("t").variable == "t"


# ---------------------------------------------------------------------------
# evaluation

def test_eval_power_product_matches_direct_arithmetic():
    z = zeta_of(SL2)
    for s in (5.0, 2.0 + 1.0j, -4.0, 0.5j):
        direct = (s - 1) / (s - 3)
        assert eval_power_product(z, s) == pytest.approx(direct, rel=1e-13)


def test_eval_power_product_pole_and_zero():
    z = zeta_of(SL2)
    with pytest.raises(PoleError):
        eval_power_product(z, 3.0)
    assert eval_power_product(z, 1.0) == 0


def test_eval_power_product_branch_cut_warns():
    p = normalize_power_product([(F(0), F(1, 2))])  # s^(1/2)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        with pytest.raises(BranchCutWarning):
            eval_power_product(p, -4.0)
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        val = eval_power_product(p, -4.0)
    assert [w for w in rec if issubclass(w.category, BranchCutWarning)]
    assert val == pytest.approx(2.0j, rel=1e-13)


def test_eval_hurwitz_values():
    h = hurwitz_of(SL2)
    w, s = 2.0, 5.0
    expected = (s - 3) ** -w - (s - 1) ** -w
    assert eval_hurwitz(h, w, s) == pytest.approx(expected, rel=1e-13)
    with pytest.raises(PoleError):
        eval_hurwitz(h, 2.0, 3.0)


def test_eval_hurwitz_exact():
    h = hurwitz_of(SL2)
    assert eval_hurwitz_exact(h, 2, F(5)) == F(1, 4) - F(1, 16)
    assert eval_hurwitz_exact(h, -1, F(3)) == F(0) - F(2)
    assert eval_hurwitz_exact(h, 0, F(3)) == F(1) - F(1)
    with pytest.raises(PoleError):
        eval_hurwitz_exact(h, 2, F(3))


def test_log_derivative_at_zero_matches_log_of_product():
    z = zeta_of(SL2)
    s = 6.0
    val = log_derivative_at_zero(hurwitz_of(SL2), s)
    assert cmath.exp(val) == pytest.approx(eval_power_product(z, s), rel=1e-12)


@settings(max_examples=60)
@given(products, products)
def test_times_is_pointwise_multiplication_numerically(p, q):
    s = 7.3  # larger than any root produced by the strategy
    lhs = eval_power_product(p.times(q), s)
    rhs = eval_power_product(p, s) * eval_power_product(q, s)
    assert lhs == pytest.approx(rhs, rel=1e-10)


# ---------------------------------------------------------------------------
# reflection / functional equation

def test_reflected_matches_substitution():
    z = zeta_of(SL2)
    q, sign = reflected(z, F(4))
    s = 2.0 + 0.7j
    direct = eval_power_product(z, 4 - s)
    assert sign * eval_power_product(q, s) == pytest.approx(direct, rel=1e-12)


def test_reflected_rejects_fractional_exponents():
    p = normalize_power_product([(0, F(1, 2))])
    with pytest.raises(PreconditionError):
        reflected(p, F(1))


def brute_force_fe(p: PowerProduct, center: F, sign: int) -> bool:
    refl, refl_sign = reflected(p, center)
    target = refl if sign == 1 else refl.inverse()
    return target.factor_map() == p.factor_map() and refl_sign == 1


def test_check_fe_sl2():
    rep = check_functional_equation(zeta_of(SL2), FEParams(F(4), -1))
    assert rep.holds and rep.parity_sum % 2 == 0 and not rep.mismatches


def test_check_fe_negative_control():
    rep = check_functional_equation(zeta_of(cf.ONE), FEParams(F(1), 1))
    assert not rep.holds
    assert rep.mismatches


def test_check_fe_reports_mismatch_roots():
    p = normalize_power_product([(0, -1), (2, -2)])
    rep = check_functional_equation(p, FEParams(F(2), 1))
    assert not rep.holds
    assert any(root in (F(0), F(2)) for root, *_ in rep.mismatches)


@settings(max_examples=80)
@given(products, st.fractions(min_value=-3, max_value=3, max_denominator=2),
       st.sampled_from([1, -1]))
def test_check_fe_agrees_with_brute_force(p, center, sign):
    rep = check_functional_equation(p, FEParams(center, sign))
    assert rep.holds == brute_force_fe(p, center, sign)


@settings(max_examples=40)
@given(products, st.sampled_from([1, -1]))
def test_symmetrized_product_always_satisfies_fe(p, sign):
    """p(s) * p(c-s)^sign satisfies the equation with that center and sign.

    The symmetrization doubles (sign +1) or cancels (sign -1) the exponent
    sum, so the parity condition holds automatically as well.
    """
    center = F(5)
    refl, _ = reflected(p, center)
    sym = p.times(refl if sign == 1 else refl.inverse())
    rep = check_functional_equation(sym, FEParams(center, sign))
    assert rep.holds
    assert not rep.mismatches


def test_fe_params_validation():
    with pytest.raises(DomainError):
        FEParams(F(1), 2)
