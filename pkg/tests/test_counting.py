"""Counting-function algebra.

Claims covered:
- normalization merges equal exponents, drops zeros, sorts descending;
- direct sum is pointwise addition, tensor product convolves exponents
  (oracle: independent dict convolution, sympy expansion, and numeric
  evaluation homomorphisms);
- tensor powers expand (u-1)^r correctly;
- evaluation at real u > 1 and exact rational evaluation behave and
  reject out-of-domain points;
- the operations form a commutative semiring (hypothesis property suite).
"""

from __future__ import annotations

import math
from fractions import Fraction as F
from itertools import product as iproduct

import pytest
import sympy
from hypothesis import given, settings, strategies as st

import abszeta.counting as cf
from abszeta.errors import DomainError, ParameterRangeError

# ---------------------------------------------------------------------------
# oracles

def oracle_otimes(t1, t2):
    """Independent tensor-product reference: plain dict convolution."""
    acc = {}
    for (a1, m1), (a2, m2) in iproduct(t1, t2):
        acc[a1 + a2] = acc.get(a1 + a2, F(0)) + m1 * m2
    return {a: m for a, m in acc.items() if m != 0}


def to_sympy(n, u):
    return sum(sympy.Rational(m) * u ** sympy.Rational(a) for a, m in n.terms)


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
counting_fns = st.lists(st.tuples(rationals, rationals), max_size=5).map(cf.normalize)


# ---------------------------------------------------------------------------
# normalization and representation

def test_normalize_canonical_order_and_merge():
    n = cf.normalize([(1, 2), (3, 1), (1, -1), (0, 5), (2, 0)])
    assert n.terms == ((F(3), F(1)), (F(1), F(1)), (F(0), F(5)))


def test_normalize_drops_cancelling_terms():
    assert cf.normalize([(1, 1), (1, -1)]) == cf.ZERO
    assert cf.normalize([]).is_zero()


def test_sl2_term_map():
    n = cf.normalize([(3, 1), (1, -1)])
    assert n.as_dict() == {F(3): F(1), F(1): F(-1)}
    assert str(n) == "u^3 - u"


def test_string_forms():
    assert str(cf.ZERO) == "0"
    assert str(cf.ONE) == "1"
    assert str(cf.normalize([(0, -2)])) == "-2"
    assert str(cf.normalize([(F(1, 2), 1), (0, 1)])) == "u^(1/2) + 1"
    assert str(cf.normalize([(2, F(3, 2))])) == "3/2*u^2"
    assert str(cf.normalize([(-2, 1), (1, -1)])) == "-u + u^-2"


def test_accessors():
    n = cf.normalize([(3, 1), (1, -1)])
    assert n.exponents() == (F(3), F(1))
    assert n.multiplicity(3) == 1
    assert n.multiplicity(2) == 0
    assert n.multiplicity_sum() == 0
    assert n.weighted_multiplicity_sum() == 2
    assert n.max_exponent() == 3
    assert cf.ZERO.max_exponent() is None


# ---------------------------------------------------------------------------
# direct sum and tensor product

def test_oplus_is_pointwise_addition():
    gm = cf.U_MINUS_ONE
    assert cf.oplus(gm, gm).as_dict() == {F(1): F(2), F(0): F(-2)}
    assert cf.oplus(gm, cf.ZERO) == gm


def test_otimes_square_of_gm():
    sq = cf.otimes(cf.U_MINUS_ONE, cf.U_MINUS_ONE)
    assert sq.as_dict() == {F(2): F(1), F(1): F(-2), F(0): F(1)}


def test_otimes_rational_exponents():
    half = cf.normalize([(F(1, 2), 1)])
    assert cf.otimes(half, half) == cf.U
    mixed = cf.otimes(cf.normalize([(F(1, 2), 2), (0, 1)]),
                      cf.normalize([(F(-1, 2), 1)]))
    assert mixed.as_dict() == {F(0): F(2), F(-1, 2): F(1)}


def test_tensor_power_expands_binomially():
    cube = cf.tensor_power(cf.U_MINUS_ONE, 3)
    expected = {F(k): F((-1) ** (3 - k) * math.comb(3, k)) for k in range(4)}
    assert cube.as_dict() == expected


@pytest.mark.parametrize("bad", [0, -1, 2.0, F(3, 2)])
def test_tensor_power_rejects_bad_exponent(bad):
    with pytest.raises(ParameterRangeError):
        cf.tensor_power(cf.U, bad)


def test_operator_sugar():
    gm = cf.U_MINUS_ONE
    assert gm + gm == cf.oplus(gm, gm)
    assert gm * gm == cf.otimes(gm, gm)
    assert gm ** 3 == cf.tensor_power(gm, 3)


@settings(max_examples=120)
@given(counting_fns, counting_fns)
def test_otimes_matches_dict_convolution_oracle(n1, n2):
    assert cf.otimes(n1, n2).as_dict() == oracle_otimes(n1.terms, n2.terms)


@settings(max_examples=60)
@given(counting_fns, counting_fns)
def test_algebra_matches_sympy(n1, n2):
    u = sympy.Symbol("u", positive=True)
    assert sympy.expand(to_sympy(cf.oplus(n1, n2), u)
                        - to_sympy(n1, u) - to_sympy(n2, u)) == 0
    assert sympy.expand(to_sympy(cf.otimes(n1, n2), u)
                        - sympy.expand(to_sympy(n1, u) * to_sympy(n2, u))) == 0


# ---------------------------------------------------------------------------
# semiring properties

@settings(max_examples=80)
@given(counting_fns, counting_fns)
def test_commutativity(n1, n2):
    assert cf.oplus(n1, n2) == cf.oplus(n2, n1)
    assert cf.otimes(n1, n2) == cf.otimes(n2, n1)


@settings(max_examples=50)
@given(counting_fns, counting_fns, counting_fns)
def test_associativity_and_distributivity(n1, n2, n3):
    assert cf.oplus(cf.oplus(n1, n2), n3) == cf.oplus(n1, cf.oplus(n2, n3))
    assert cf.otimes(cf.otimes(n1, n2), n3) == cf.otimes(n1, cf.otimes(n2, n3))
    assert (cf.otimes(n1, cf.oplus(n2, n3))
            == cf.oplus(cf.otimes(n1, n2), cf.otimes(n1, n3)))


@settings(max_examples=50)
@given(counting_fns)
def test_units(n):
    assert cf.oplus(n, cf.ZERO) == n
    assert cf.otimes(n, cf.ONE) == n
    assert cf.otimes(n, cf.ZERO) == cf.ZERO


# ---------------------------------------------------------------------------
# evaluation

def test_eval_at_known_values():
    n = cf.normalize([(3, 1), (1, -1)])
    assert cf.eval_at(n, 4.0) == pytest.approx(60.0, abs=1e-12)
    assert cf.eval_at(cf.ONE, 17.3) == pytest.approx(1.0)
    half = cf.normalize([(F(1, 2), 1)])
    assert cf.eval_at(half, 9.0) == pytest.approx(3.0, rel=1e-14)


@pytest.mark.parametrize("u", [1.0, 0.5, -3.0, float("nan"), float("inf")])
def test_eval_at_domain(u):
    with pytest.raises(DomainError):
        cf.eval_at(cf.U, u)


@settings(max_examples=60)
@given(counting_fns, counting_fns)
def test_eval_is_a_homomorphism(n1, n2):
    u = 1.7
    s = cf.eval_at(cf.oplus(n1, n2), u)
    p = cf.eval_at(cf.otimes(n1, n2), u)
    assert s == pytest.approx(cf.eval_at(n1, u) + cf.eval_at(n2, u), abs=1e-9)
    assert p == pytest.approx(cf.eval_at(n1, u) * cf.eval_at(n2, u), abs=1e-9)


def test_eval_rational_exact():
    n = cf.normalize([(3, 1), (1, -1)])
    assert cf.eval_rational(n, F(1, 2)) == F(1, 8) - F(1, 2)
    neg = cf.normalize([(-2, 3)])
    assert cf.eval_rational(neg, F(2, 3)) == F(27, 4)
    with pytest.raises(DomainError):
        cf.eval_rational(cf.normalize([(F(1, 2), 1)]), 2)
    with pytest.raises(DomainError):
        cf.eval_rational(neg, 0)
