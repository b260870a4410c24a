# -*- coding: utf-8 -*-

import random
from fractions import Fraction

import pytest

from weylbench.algebra import LaurentScalar
from weylbench.algebra import Q
from weylbench.algebra import QuantumTorus
from weylbench.algebra import SkewMatrix
from weylbench.algebra import V
from weylbench.algebra import omega
from weylbench.algebra import parse_expression
from weylbench.algebra import parse_scalar
from weylbench.algebra import pbw_namespace
from weylbench.algebra import poisson_namespace
from weylbench.algebra import torus_namespace
from weylbench.algebra import z_element
from weylbench.algebra.parser import TORUS
from weylbench.algebra.parser import parse
from weylbench.algebra.poisson import preset_D
from weylbench.algebra.poisson import preset_FL
from weylbench.common.errors import ParseError


@pytest.fixture
def plane():
    return QuantumTorus(SkewMatrix.from_upper(2, { (0, 1): 1 }))


@pytest.mark.parametrize(("source", "expected"), [
    ("q^(1/2)", V),
    ("q^-1", Q.inverse()),
    ("1 - q", 1 - Q),
    ("3/2*v", V * Fraction(3, 2)),
    ("2^-1", Fraction(1, 2)),
    ("-q^2", -(Q * Q)),
    ("(1 - q)*(1 + q)", 1 - Q * Q),
])
def test_parse_scalar(source, expected):
    assert parse_scalar(source) == expected


def test_precedence_in_tree():
    assert str(parse("x1 + x2*x3^2")) == "(x1 + (x2 * x3^(2)))"
    assert str(parse("-x1^2")) == "(-x1^(2))"


def test_pbw_expression(linear2):
    namespace = pbw_namespace(linear2)
    assert str(parse_expression("x2*x1", namespace)) == "v^-2*x1*x2 + 1 - v^-2"
    assert parse_expression("x2*x1 - q^-1*x1*x2", namespace) == 1 - Q.inverse()
    assert parse_expression("x1/q", namespace) == linear2.gen(1).scale(Q.inverse())


def test_pbw_named_elements(linear3, cyclic3):
    assert parse_expression("z2", pbw_namespace(linear3)) == z_element(linear3, 2)
    assert parse_expression("Omega", pbw_namespace(cyclic3)) == omega(cyclic3)


def test_torus_expression(plane):
    namespace = torus_namespace(plane)
    assert parse_expression("x1^-1*x1", namespace) == plane.one()
    assert parse_expression("x1*x2 - q*x2*x1", namespace).is_zero()


def test_poisson_expression():
    table = preset_FL(3)
    x1, x2, x3 = table.ring.gens()
    assert parse_expression("z2 + 1/2", poisson_namespace(table)) == x1 * x2 - Fraction(1, 2)
    W = preset_D(3).ring.gens()
    assert parse_expression("Delta", poisson_namespace(preset_D(3))) == W[0] * W[4] - W[1] * W[3] - 1


@pytest.mark.parametrize(("source", "code", "position"), [
    ("x1 x2", "unexpected-token", 3),
    ("x1 (x2)", "unexpected-token", 3),
    ("x1 +", "unexpected-end", 4),
    ("", "unexpected-end", 0),
    ("(x1 + x2", "unexpected-end", 8),
    ("x1 $ x2", "unknown-symbol", 3),
    ("x1^-1", "negative-exponent", 2),
    ("x1^(1/2)", "fractional-exponent", 2),
    ("x9", "unknown-identifier", 0),
    ("x1/x2", "non-scalar-divisor", 2),
    ("x1/(q - q)", "division-by-zero", 2),
    ("x1/(q - 1)", "not-divisible", 2),
])
def test_pbw_errors(linear2, source, code, position):
    with pytest.raises(ParseError) as info:
        parse_expression(source, pbw_namespace(linear2))
    assert info.value.code == code
    assert info.value.position == position


def test_sum_is_not_invertible_in_a_torus(plane):
    with pytest.raises(ParseError) as info:
        parse_expression("(x1 + x2)^-1", torus_namespace(plane))
    assert info.value.code == "not-invertible"
    assert info.value.position == 9


def test_negative_powers_parse_in_a_torus():
    assert str(parse("x1^-2", TORUS)) == "x1^(-2)"


def test_scalar_rejects_generators():
    with pytest.raises(ParseError) as info:
        parse_scalar("x1")
    assert info.value.code == "unknown-identifier"


@pytest.mark.parametrize(("source", "position"), [ ("q*x1", 1), ("x1 + v", 3), ("q", 0), ("x1/q", 2) ])
def test_poisson_rejects_q(source, position):
    with pytest.raises(ParseError) as info:
        parse_expression(source, poisson_namespace(preset_FL(2)))
    assert info.value.code == "not-rational"
    assert info.value.position == position


def test_poisson_accepts_rational_scalars():
    ring = preset_FL(2).ring
    assert parse_expression("q - q + x1", poisson_namespace(ring)) == ring.gen(1)
    assert parse_expression("q^0*x2", poisson_namespace(ring)) == ring.gen(2)


def test_fractional_power_of_a_sum():
    with pytest.raises(ParseError) as info:
        parse_scalar("(1 + q)^(1/2)")
    assert info.value.code == "fractional-exponent"


# --- Rendering round trips ---


def _random_scalar(rng) -> LaurentScalar:
    result = LaurentScalar()
    for _ in range(rng.randint(1, 3)):
        result = result + LaurentScalar.v_power(rng.randint(-3, 3), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    return result


def _random_word_poly(presentation, rng):
    result = presentation.scalar(0)
    for _ in range(rng.randint(1, 3)):
        term = presentation.scalar(_random_scalar(rng))
        for _ in range(rng.randint(0, 3)):
            term = term * presentation.gen(rng.randint(1, presentation.n))
        result = result + term
    return result


@pytest.mark.parametrize("seed", range(40))
def test_pbw_rendering_parses_back(linear3, seed):
    f = _random_word_poly(linear3, random.Random(seed))
    assert parse_expression(str(f), pbw_namespace(linear3)) == f


@pytest.mark.parametrize("seed", range(40))
def test_torus_rendering_parses_back(seed):
    rng = random.Random(1000 + seed)
    torus = QuantumTorus(SkewMatrix.from_upper(3, { (0, 1): 1, (0, 2): -2, (1, 2): 1 }))
    f = torus.zero()
    for _ in range(rng.randint(1, 4)):
        exponent = [ rng.randint(-2, 2) for _ in range(3) ]
        f = f + torus.monomial(exponent, _random_scalar(rng))
    assert parse_expression(str(f), torus_namespace(torus)) == f


@pytest.mark.parametrize("seed", range(40))
def test_poisson_rendering_parses_back(seed):
    rng = random.Random(2000 + seed)
    ring = preset_FL(3).ring
    f = ring.zero()
    for _ in range(rng.randint(1, 4)):
        exponent = [ rng.randint(0, 3) for _ in range(3) ]
        f = f + ring.monomial(exponent, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    assert parse_expression(str(f), poisson_namespace(ring)) == f
