# -*- coding: utf-8 -*-

import numpy as np
import pytest

from weylbench.algebra import Q
from weylbench.algebra import QuantumTorus
from weylbench.algebra import SkewMatrix
from weylbench.algebra import V
from weylbench.algebra import left_divide
from weylbench.algebra import normalized_monomial
from weylbench.algebra import right_divide
from weylbench.algebra import torus_mul
from weylbench.algebra.qtorus import quasi_commutation_skew
from weylbench.algebra.qtorus import scale_generators
from weylbench.common.errors import NotDivisible


@pytest.fixture
def plane():
    """ x1 x2 = q x2 x1. """
    return QuantumTorus(SkewMatrix.from_upper(2, { (0, 1): 1 }))


def test_skew_matrix_validation():
    with pytest.raises(ValueError):
        SkewMatrix([ [ 0, 1 ], [ 1, 0 ] ])
    with pytest.raises(ValueError):
        SkewMatrix([ [ 0, 1, 2 ] ])


def test_skew_matrix_is_read_only():
    skew = SkewMatrix.from_upper(2, { (0, 1): 3 })
    assert skew[1, 0] == -3
    with pytest.raises(ValueError):
        skew.array[0, 1] = 1


def test_quasi_commutation(plane):
    x1, x2 = plane.gens()
    assert x1 * x2 == (x2 * x1).scale(Q)
    assert x1 * x2 != x2 * x1


def test_torus_product_twist(plane):
    x1, x2 = plane.gens()
    assert torus_mul(plane.skew, x1, x2) == plane.monomial((1, 1))
    assert torus_mul(plane.skew, x2, x1) == plane.monomial((1, 1), Q.inverse())


def test_torus_product_dimension_mismatch(plane):
    x1, _ = plane.gens()
    with pytest.raises(ValueError):
        torus_mul(SkewMatrix([ [ 0 ] ]), x1, x1)


def test_monomial_inverse(plane):
    x1, x2 = plane.gens()
    f = (x1 * x2 * x2).scale(3)
    assert f.inverse() * f == plane.one()
    assert f * f.inverse() == plane.one()
    assert x1 ** -2 * x1 ** 2 == plane.one()


def test_sums_are_not_invertible(plane):
    x1, x2 = plane.gens()
    with pytest.raises(NotDivisible):
        (x1 + x2).inverse()


def test_normalized_monomials_multiply_by_the_pairing(plane):
    a, b = (1, 0), (0, 1)
    product = normalized_monomial(plane, a) * normalized_monomial(plane, b)
    pairing = plane.skew.pairing(a, b)
    assert product == normalized_monomial(plane, (1, 1)).scale(V ** pairing)


def test_left_and_right_division(plane):
    x1, x2 = plane.gens()
    g = x1 + x2
    h = x2 - 1
    assert left_divide(g, g * h) == h
    assert right_divide(h * g, g) == h
    assert left_divide(x1, x1 * h) == h


def test_division_failure(plane):
    x1, x2 = plane.gens()
    with pytest.raises(NotDivisible):
        left_divide(x1 + x2, x1)
    with pytest.raises(ZeroDivisionError):
        left_divide(plane.zero(), x1)


def test_scale_generators(plane):
    x1, x2 = plane.gens()
    image = scale_generators(x1 * x2 + x2, [ Q, Q.inverse() ])
    assert image == x1 * x2 + x2.scale(Q.inverse())


def test_quasi_commutation_skew():
    skew = quasi_commutation_skew(4)
    expected = np.array([
        [ 0, 1, 0, 1 ],
        [ -1, 0, 0, 0 ],
        [ 0, 0, 0, 1 ],
        [ -1, 0, -1, 0 ],
    ])
    assert np.array_equal(skew.array, expected)
