# -*- coding: utf-8 -*-

import random
from fractions import Fraction

import pytest

from weylbench.algebra import LaurentScalar
from weylbench.algebra import Presentation
from weylbench.algebra import Q
from weylbench.algebra import V
from weylbench.algebra import check_hom
from weylbench.algebra import classify
from weylbench.algebra import preset_cyclic
from weylbench.algebra import preset_linear
from weylbench.algebra.classify import CYCLIC
from weylbench.algebra.classify import LINEAR
from weylbench.algebra.classify import relabel
from weylbench.common.errors import DegreeExceeded
from weylbench.common.errors import NonPBW
from weylbench.common.errors import NotConnected
from weylbench.common.errors import NotRescalable


def test_scrambled_linear(scrambled_linear4):
    result = classify(scrambled_linear4)
    assert result.shape == LINEAR
    assert result.parameter == Q
    assert result.order == (2, 4, 1, 3)
    assert result.apply(scrambled_linear4) == preset_linear(4)
    assert check_hom(result.as_hom(scrambled_linear4))


def test_inverse_parameter_reverses_the_path():
    result = classify(preset_linear(3, Q.inverse()))
    assert result.shape == LINEAR
    assert result.parameter == Q
    assert result.order == (3, 2, 1)


def test_rotated_cycle():
    rotated = relabel(preset_cyclic(3), (2, 3, 1), (1, 1, 1))
    result = classify(rotated)
    assert result.shape == CYCLIC
    assert result.cyclic_obstruction is None
    assert result.apply(rotated) == preset_cyclic(3)


def test_rescaled_cycle():
    rescaled = relabel(preset_cyclic(5), (1, 2, 3, 4, 5), (1, V, 1, Q, 1))
    result = classify(rescaled)
    assert result.shape == CYCLIC
    assert result.cyclic_obstruction is None
    assert check_hom(result.as_hom(rescaled))


def test_cycle_without_square_root():
    P = preset_cyclic(3).with_relation(3, 1, Q, 2 * (1 - Q))
    result = classify(P)
    assert result.shape == CYCLIC
    assert result.cyclic_obstruction == LaurentScalar.const(2)
    assert "square root" in str(result)


def test_non_pbw_is_rejected():
    with pytest.raises(NonPBW):
        classify(preset_linear(3).with_relation(1, 3, Q, 1 - Q))


@pytest.mark.parametrize("r", [ (1 - Q) * (1 + Q), LaurentScalar.const(1), 1 + Q ],
                         ids=[ "multiple", "divisor", "other" ])
def test_constant_outside_the_unit_class_is_rejected(r):
    P = Presentation.from_upper(2, { (1, 2): Q }, { (1, 2): r })
    assert P.is_pbw()
    with pytest.raises(NotRescalable):
        classify(P)


def test_disconnected_is_rejected():
    q = { (1, 2): Q, (1, 3): Q, (1, 4): Q.inverse(), (2, 3): Q.inverse(), (2, 4): Q, (3, 4): Q }
    P = Presentation.from_upper(4, q, { (1, 2): 1 - Q, (3, 4): 1 - Q })
    assert P.is_pbw()
    with pytest.raises(NotConnected):
        classify(P)


def test_star_is_rejected():
    # x1 is joined to x2, x3 and x4, PBW forces q = 1 on a star
    q = { (i, j): 1 for i in range(1, 5) for j in range(i + 1, 5) }
    P = Presentation.from_upper(4, q, { (1, 2): 1, (1, 3): 1, (1, 4): 1 })
    with pytest.raises(DegreeExceeded):
        classify(P)


def test_result_as_dict(scrambled_linear4):
    data = classify(scrambled_linear4).to_dict()
    assert data["shape"] == LINEAR
    assert data["order"] == [ 2, 4, 1, 3 ]
    assert data["parameter"] == Q.to_json()
    assert data["cyclic_obstruction"] is None


def _scramble(seed: int):
    rng = random.Random(seed)
    cyclic = rng.random() < 0.5
    n = rng.choice([ 3, 5, 7 ]) if cyclic else rng.randint(2, 7)
    P = preset_cyclic(n) if cyclic else preset_linear(n)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    units = [ LaurentScalar.const(1), LaurentScalar.const(-1), V, Q.inverse(), LaurentScalar.v_power(3, Fraction(1, 2)) ]
    rescale = [ rng.choice(units) for _ in range(n) ]
    return CYCLIC if cyclic else LINEAR, relabel(P, order, rescale)


@pytest.mark.parametrize("seed", range(50))
def test_random_scrambles(seed):
    shape, P = _scramble(seed)
    result = classify(P)
    assert result.shape == shape
    assert result.cyclic_obstruction is None
    assert result.parameter == Q
    assert result.apply(P) == result.target()
    assert check_hom(result.as_hom(P))
