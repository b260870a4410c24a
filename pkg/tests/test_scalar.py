# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from weylbench.algebra import LaurentScalar
from weylbench.algebra import Q
from weylbench.algebra import V
from weylbench.algebra import exact_divide
from weylbench.algebra import qpow
from weylbench.algebra import specialize
from weylbench.algebra.scalar import ZERO
from weylbench.algebra.scalar import rational_sqrt
from weylbench.algebra.scalar import render_scalar
from weylbench.common.errors import NotDivisible


@pytest.mark.parametrize(
    ("exponent", "v_exponent"),
    [
        (1, 2),
        ("1/2", 1),
        ("-1/2", -1),
        (Fraction(-3, 2), -3),
        (0, 0),
    ],
)
def test_qpow_half_integers(exponent, v_exponent):
    assert qpow(exponent) == LaurentScalar.v_power(v_exponent)


def test_qpow_rejects_quarter_powers():
    with pytest.raises(ValueError):
        qpow("1/4")


def test_zero_coefficients_are_dropped():
    assert LaurentScalar({ 3: 0, 0: 1 }) == LaurentScalar.const(1)
    assert LaurentScalar({ 1: 0 }).is_zero()


def test_units():
    assert Q.is_unit()
    assert LaurentScalar.v_power(-3, Fraction(2, 5)).is_unit()
    assert not (Q - 1).is_unit()
    assert not ZERO.is_unit()
    assert Q.inverse() == qpow(-1)
    assert (V * 2).inverse() == LaurentScalar.v_power(-1, Fraction(1, 2))


def test_arithmetic_with_plain_numbers():
    assert 1 - Q == -(Q - 1)
    assert 2 * Q == Q + Q
    assert (1 + Q) ** 2 == Q * Q + 2 * Q + 1
    assert Q ** -2 == qpow(-2)


@pytest.mark.parametrize(
    ("f", "g", "quotient"),
    [
        (Q * Q - 1, Q - 1, Q + 1),
        (Q ** 3 - 1, Q - 1, Q * Q + Q + 1),
        (1 - Q, V, V.inverse() - V),
        ((Q - 1) * qpow(-3), 1 - Q, -qpow(-3)),
        (ZERO, Q + 1, ZERO),
    ],
)
def test_exact_divide(f, g, quotient):
    assert exact_divide(f, g) == quotient


def test_exact_divide_not_divisible():
    with pytest.raises(NotDivisible):
        exact_divide(Q, Q - 1)
    with pytest.raises(NotDivisible):
        exact_divide(Q * Q + 1, Q - 1)


def test_exact_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_divide(1, 0)


def test_specialize():
    assert specialize(Q - 1, 1) == 0
    assert specialize(Q + 1, 2) == 5
    assert specialize(V.inverse() * 3, Fraction(1, 2)) == 6
    assert (Q * Q - Q).specialize(-1) == 0


def test_specialize_at_zero():
    with pytest.raises(ValueError):
        specialize(Q, 0)


@pytest.mark.parametrize(
    ("value", "root"),
    [
        (Fraction(9, 4), Fraction(3, 2)),
        (Fraction(1), Fraction(1)),
        (Fraction(2), None),
        (Fraction(-4), None),
        (Fraction(1, 3), None),
    ],
)
def test_rational_sqrt(value, root):
    assert rational_sqrt(value) == root


def test_render_scalar():
    assert render_scalar(ZERO) == "0"
    assert render_scalar(Q - 1) == "v^2 - 1"
    assert render_scalar(1 - V + qpow(-1) * Fraction(3, 2)) == "-v + 1 + 3/2*v^-2"
    assert render_scalar(V ** 3) == "v^3"


def test_json_keeps_rationals_exact():
    value = qpow(-1) * Fraction(3, 2) - V
    assert LaurentScalar.from_json(value.to_json()) == value
