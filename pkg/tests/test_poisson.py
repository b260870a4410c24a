# -*- coding: utf-8 -*-

import random

import pytest

from weylbench.algebra import BracketTable
from weylbench.algebra import CRing
from weylbench.algebra import bracket
from weylbench.algebra import jacobi_check
from weylbench.algebra import kernel_matches_oracle
from weylbench.algebra import lambda_kernel
from weylbench.algebra import preset_bracket
from weylbench.algebra import preset_cyclic
from weylbench.algebra import preset_linear
from weylbench.algebra import principal_membership
from weylbench.algebra import principal_membership_oracle
from weylbench.algebra import semiclassical_limit
from weylbench.algebra import SkewMatrix
from weylbench.algebra import z_element
from weylbench.algebra.poisson import LAURENT
from weylbench.algebra.poisson import cdivide
from weylbench.algebra.poisson import cgcd
from weylbench.algebra.poisson import commutative_w
from weylbench.algebra.poisson import commutative_z
from weylbench.algebra.poisson import divided_commutator
from weylbench.algebra.poisson import jacobi_defects
from weylbench.algebra.poisson import jacobi_sum
from weylbench.algebra.poisson import omega_commutative
from weylbench.algebra.poisson import parity_skew
from weylbench.algebra.poisson import preset_FC
from weylbench.algebra.poisson import preset_FL
from weylbench.algebra.poisson import preset_R
from weylbench.algebra.poisson import specialize_nc
from weylbench.algebra.poisson import theta
from weylbench.common.errors import NotDivisible


@pytest.fixture
def ring3():
    return CRing(3)


# --- Polynomials ---


def test_derivative(ring3):
    x1, x2, x3 = ring3.gens()
    f = x1 * x1 * x2 - x3 + 4
    assert f.diff(0) == (x1 * x2).scale(2)
    assert f.diff(2) == -1
    assert f.degree_in(0) == 2


def test_exact_division():
    ring = CRing(2, ambient=LAURENT)
    x1, x2 = ring.gens()
    g = x1 + x2
    assert cdivide(g, g * (x1 - 1)) == x1 - 1
    assert cdivide(x1, x2) == x1.inverse() * x2
    with pytest.raises(NotDivisible):
        cdivide(g, x1 * x2 + 1)


def test_cyclic_shift(ring3):
    x1, x2, x3 = ring3.gens()
    assert theta(x1) == x2
    assert theta(x3) == x1
    assert theta(x1 * x3, times=2) == x3 * x2


def test_z_recursion(ring3):
    x1, x2, x3 = ring3.gens()
    assert commutative_z(ring3, -1).is_zero()
    assert commutative_z(ring3, 2) == x1 * x2 - 1
    assert commutative_z(ring3, 2, shift=1) == x2 * x3 - 1
    assert commutative_z(ring3, 2, shift=2, cyclic=True) == x3 * x1 - 1


# --- Brackets ---


def test_linear_bracket_table():
    table = preset_FL(4)
    x1, x2, x3, x4 = table.ring.gens()
    assert bracket(table, x1, x2) == x1 * x2 - 1
    assert bracket(table, x1, x4) == x1 * x4
    assert bracket(table, x1, x3) == -(x1 * x3)
    assert bracket(table, x2, x1) == 1 - x1 * x2


def test_cyclic_wrap_entry():
    table = preset_FC(3)
    x1, _, x3 = table.ring.gens()
    assert bracket(table, x1, x3) == 1 - x1 * x3


def test_bracket_is_a_biderivation():
    table = preset_FL(3)
    x1, x2, x3 = table.ring.gens()
    assert bracket(table, x1 * x3, x2) == bracket(table, x1, x2) * x3 + x1 * bracket(table, x3, x2)


def test_bracket_rejects_laurent_operands_on_polynomials():
    table = preset_FL(2)
    x1, x2 = table.ring.gens()
    with pytest.raises(ValueError):
        bracket(table, x1.inverse(), x2)
    with pytest.raises(ValueError):
        bracket(table, CRing(3).gen(1), x2)


def test_log_canonical_preset():
    table = preset_R(3)
    w0, w1, w2, w3 = table.ring.gens()
    assert bracket(table, w0, w1) == w0 * w1
    assert bracket(table, w0, w2).is_zero()
    assert bracket(table, w0.inverse(), w1) == -(w0.inverse() * w1)


def test_unknown_preset():
    with pytest.raises(ValueError):
        preset_bracket("X", 3)


@pytest.mark.parametrize("name,n", [ ("FL", 4), ("FL", 5), ("FC", 3), ("FC", 5), ("R", 3), ("R", 5) ])
def test_jacobi_identity_holds(name, n):
    table = preset_bracket(name, n)
    assert jacobi_defects(table) == [ ]
    assert jacobi_check(table).passed


def test_jacobi_identity_negative_control(ring3):
    x1, _, x3 = ring3.gens()
    table = BracketTable(ring3, { (0, 1): x3, (0, 2): x1 })
    assert jacobi_sum(table, 0, 1, 2) == -x3
    report = jacobi_check(table)
    assert not report.passed
    assert report.failures()[0].witness == "-x3"


# --- Limits ---


@pytest.mark.parametrize("n", [ 2, 3, 4, 5 ])
def test_semiclassical_limit_of_linear(n):
    assert semiclassical_limit(preset_linear(n)) == preset_FL(n)


@pytest.mark.parametrize("n", [ 3, 5 ])
def test_semiclassical_limit_of_cyclic(n):
    assert semiclassical_limit(preset_cyclic(n)) == preset_FC(n)


def test_specialization_of_z(linear3):
    ring = CRing(3)
    assert specialize_nc(z_element(linear3, 3), ring) == commutative_z(ring, 3)


def test_divided_commutator(linear3):
    x1, x2, _ = linear3.gens()
    ring = CRing(3)
    assert divided_commutator(linear3, x1, x2, ring) == ring.gen(1) * ring.gen(2) - 1


@pytest.mark.parametrize("n", [ 3, 5 ])
def test_commutative_omega_is_central(n):
    table = preset_FC(n)
    central = omega_commutative(table.ring)
    for x in table.ring.gens():
        assert bracket(table, central, x).is_zero()


def test_commutative_exchange_relation():
    w = commutative_w(3, -1, 4)
    assert w[4] * w[0] == 1 + w[1] * w[3]
    assert w[-1] * w[3] == 1 + w[0] * w[2]


# --- Ideals and kernels ---


def _membership_cases():
    ring = CRing(3)
    x1, x2, x3 = ring.gens()
    z2 = commutative_z(ring, 2)
    z3 = commutative_z(ring, 3)
    return [
        ((z2 - 1) * (x3 + x1), 2, 1, True),
        ((z2 + 2) * x2 * x2, 2, -2, True),
        (z2 + x3, 2, 1, False),
        (x1, 2, 0, False),
        ((z3 - 1) * x1 - (z3 - 1) * x2, 3, 1, True),
        (z3, 3, 1, False),
        ((x1 - 3) * x3, 1, 3, True),
        (x2, 2, -1, False),
        (x1, 2, -1, False),
        (x1 * x2 * (x3 + 1), 2, -1, True),
        (x1 * x2 + x2, 2, -1, False),
    ]


@pytest.mark.parametrize(("f", "k", "lam", "member"), _membership_cases())
def test_principal_membership(f, k, lam, member):
    assert principal_membership(f, k, lam) == member
    assert principal_membership_oracle(f, k, lam) == member


def _random_poly(ring, rng, terms: int):
    result = ring.zero()
    for _ in range(terms):
        exponent = [ rng.randint(0, 2) for _ in range(ring.m) ]
        result = result + ring.monomial(exponent, rng.randint(-2, 2))
    return result


@pytest.mark.parametrize("m", [ 2, 3 ])
def test_membership_agrees_with_sympy_on_random_input(m):
    rng = random.Random(m)
    ring = CRing(m)
    for k in range(1, m + 1):
        for lam in range(-2, 3):
            generator = commutative_z(ring, k) - lam
            for _ in range(6):
                f = generator * _random_poly(ring, rng, 2) + _random_poly(ring, rng, rng.randint(0, 1))
                if f.is_zero():
                    continue
                assert principal_membership(f, k, lam) == principal_membership_oracle(f, k, lam), (str(f), k, lam)


def test_gcd_through_sympy(ring3):
    x1, x2, x3 = ring3.gens()
    assert cgcd(x1 * x2, x1 * (x3 + 1)) == x1
    assert cgcd(x1 + 1, x2).is_constant()


def test_membership_index_out_of_range(ring3):
    with pytest.raises(IndexError):
        principal_membership(ring3.gen(1), 4, 1)


def test_parity_kernel():
    assert lambda_kernel(parity_skew(3)) == [ (1, 0, 1) ]
    assert lambda_kernel(parity_skew(4)) == [ ]


@pytest.mark.parametrize("m", range(2, 8))
def test_parity_kernel_matches_sympy(m):
    assert kernel_matches_oracle(parity_skew(m))


def test_kernel_of_a_skewed_matrix():
    skew = SkewMatrix.from_upper(4, { (0, 1): 2, (0, 2): -4, (1, 3): 6, (2, 3): 3 })
    basis = lambda_kernel(skew)
    for vector in basis:
        assert all(x == 0 for x in skew.array.T @ vector)
    assert kernel_matches_oracle(skew)
