import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyatrace.poly import MultiPoly
from polyatrace.series import TruncatedSeries

from conftest import VARS, polys, rationals

N = 6
Q = ("q",)
q = MultiPoly.var("q", Q)


def naive_exp(a: TruncatedSeries) -> TruncatedSeries:
    """sum_k a^k / k!, the textbook definition (a has no constant term)."""
    total = TruncatedSeries.zero(a.order, a.variables)
    power = TruncatedSeries.one(a.order, a.variables)
    for k in range(a.order + 1):
        total = total + power * Fraction(1, math.factorial(k))
        power = power * a
    return total


def test_geometric_times_one_minus_t():
    geo = TruncatedSeries([1] * (N + 1), N)
    assert geo * TruncatedSeries([1, -1], N) == TruncatedSeries.one(N)


def test_identity_laws():
    a = TruncatedSeries([3, -1, Fraction(1, 2)], N)
    assert a * TruncatedSeries.one(N) == a
    assert TruncatedSeries.one(N).inverse() == TruncatedSeries.one(N)


def test_binomial_square():
    a = TruncatedSeries([1, q], N)
    assert a * a == TruncatedSeries([1, 2 * q, q ** 2], N)


def test_inverse_of_one_minus_t():
    assert TruncatedSeries([1, -1], N).inverse() == TruncatedSeries([1] * (N + 1), N)


def test_inverse_of_one_minus_qt():
    inv = TruncatedSeries([1, -q], N).inverse()
    assert all(inv[n] == q ** n for n in range(N + 1))
    assert inv * TruncatedSeries([1, -q], N) == TruncatedSeries.one(N, Q)


def test_exp_of_zero():
    assert TruncatedSeries.zero(N).exp() == TruncatedSeries.one(N)


def test_exp_of_power_sums_is_geometric():
    inner = TruncatedSeries([0] + [q ** r * Fraction(1, r) for r in range(1, N + 1)], N, Q)
    assert inner.exp() == TruncatedSeries([1, -q], N).inverse()


def test_exp_of_linear_term():
    x = MultiPoly.var("x_1", ("x_1",))
    e = TruncatedSeries([0, x], N).exp()
    assert all(e[n] == x ** n / math.factorial(n) for n in range(N + 1))


def test_guards():
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([0, 1], N).inverse()
    with pytest.raises(ValueError):
        TruncatedSeries([1, 1], N).exp()
    with pytest.raises(ValueError):
        TruncatedSeries([1], 3) * TruncatedSeries([1], 4)
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([q, 1], N, Q).inverse()


def test_truncation_never_reads_past_order():
    a = TruncatedSeries([1, 2, 3, 4, 5], 2)
    assert len(a) == 3 and a[2] == 3


@st.composite
def invertible(draw, variables=VARS):
    c0 = draw(rationals.filter(bool))
    rest = [draw(polys(variables, max_terms=2, max_exp=2)) for _ in range(N)]
    return TruncatedSeries([MultiPoly.constant(c0, variables)] + rest, N, variables)


@st.composite
def zero_constant(draw, variables=VARS):
    rest = [draw(polys(variables, max_terms=2, max_exp=1)) for _ in range(N)]
    return TruncatedSeries([MultiPoly.zero(variables)] + rest, N, variables)


@settings(max_examples=100, deadline=None)
@given(invertible())
def test_inverse_property(a):
    assert a.inverse() * a == TruncatedSeries.one(N, VARS)


@settings(max_examples=40, deadline=None)
@given(zero_constant())
def test_exp_of_negation_is_inverse(a):
    assert a.exp() * (-a).exp() == TruncatedSeries.one(N, VARS)


@settings(max_examples=25, deadline=None)
@given(zero_constant())
def test_exp_matches_factorial_definition(a):
    assert a.exp() == naive_exp(a)


@settings(max_examples=25, deadline=None)
@given(zero_constant())
def test_log_inverts_exp(a):
    assert a.exp().log() == a


@settings(max_examples=40, deadline=None)
@given(invertible(("q",)), st.integers(-3, 3))
def test_integer_powers(a, k):
    expected = TruncatedSeries.one(N, ("q",))
    base = a if k >= 0 else a.inverse()
    for _ in range(abs(k)):
        expected = expected * base
    assert a ** k == expected


@settings(max_examples=30, deadline=None)
@given(invertible(("q",)))
def test_scale_t_substitutes_minus_t(a):
    flipped = a.scale_t(-1)
    assert all(flipped[n] == a[n] * (-1) ** n for n in range(N + 1))
