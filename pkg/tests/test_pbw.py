# -*- coding: utf-8 -*-

import itertools
from fractions import Fraction

import pytest

from weylbench.algebra import HomSpec
from weylbench.algebra import LaurentScalar
from weylbench.algebra import Presentation
from weylbench.algebra import Q
from weylbench.algebra import check_hom
from weylbench.algebra import commutator
from weylbench.algebra import diamond_oracle
from weylbench.algebra import normal_form
from weylbench.algebra import omega
from weylbench.algebra import pbw_check
from weylbench.algebra import preset_cyclic
from weylbench.algebra import preset_linear
from weylbench.algebra import single_parameter
from weylbench.algebra import z_element
from weylbench.algebra.pbw import compose_homs
from weylbench.algebra.pbw import free_reduce
from weylbench.algebra.pbw import hom_defects
from weylbench.algebra.pbw import hom_order
from weylbench.algebra.pbw import hom_power
from weylbench.algebra.pbw import iota_cyclic
from weylbench.algebra.pbw import iota_nu
from weylbench.algebra.pbw import is_identity
from weylbench.algebra.pbw import reversal
from weylbench.algebra.pbw import theta_cyclic
from weylbench.algebra.pbw import theta_linear
from weylbench.algebra.scalar import ONE
from weylbench.common.errors import NotConnected
from weylbench.common.errors import NotSingleParameter
from weylbench.config.static import WeylBenchConfig


# --- Presentations ---


def test_from_upper_fills_lower_half(linear2):
    assert linear2.q(2, 1) == Q.inverse()
    assert linear2.r(2, 1) == 1 - Q.inverse()
    assert linear2.is_consistent()


def test_from_upper_missing_entry():
    with pytest.raises(ValueError):
        Presentation.from_upper(3, { (1, 2): Q, (2, 3): Q })


def test_from_upper_non_unit():
    with pytest.raises(ValueError):
        Presentation.from_upper(2, { (1, 2): Q - 1 })


def test_preset_parity_pattern():
    P = preset_linear(5)
    assert P.q(1, 2) == Q
    assert P.q(1, 3) == Q.inverse()
    assert P.q(1, 4) == Q
    assert P.q(2, 5) == Q
    assert P.r(1, 3).is_zero()


def test_cyclic_preset_wraps():
    P = preset_cyclic(5)
    assert P.q(5, 1) == Q
    assert P.r(5, 1) == 1 - Q
    assert P.graph().is_cycle()
    assert preset_linear(5).graph().is_path()


def test_cyclic_preset_needs_odd_size():
    with pytest.raises(ValueError):
        preset_cyclic(4)


# --- Normal forms ---


def test_normal_form_of_adjacent_descent(linear2):
    expected = linear2.monomial((1, 1), Q.inverse()) + linear2.scalar(1 - Q.inverse())
    assert normal_form(linear2, [ 2, 1 ]) == expected
    assert normal_form(linear2, [ 1, 2 ]) == linear2.monomial((1, 1))


def test_normal_form_of_distant_descent(linear3):
    assert normal_form(linear3, [ 3, 1 ]) == linear3.monomial((1, 0, 1), Q)


def test_normal_form_is_associative(linear3):
    x1, x2, x3 = linear3.gens()
    assert (x3 * x2) * x1 == x3 * (x2 * x1)
    assert normal_form(linear3, [ 3, 2, 1 ], 2) == (x3 * x2 * x1).scale(2)


def _monomials_by_degree(n: int, top: int):
    result = { d: [ ] for d in range(top + 1) }
    for exponent in itertools.product(range(top + 1), repeat=n):
        if sum(exponent) <= top:
            result[sum(exponent)].append(exponent)
    return result


def _word(exponent) -> tuple:
    return tuple(i + 1 for i, e in enumerate(exponent) for _ in range(e))


@pytest.mark.parametrize("presentation", [
    preset_linear(2), preset_linear(3), preset_linear(4), preset_linear(5), preset_cyclic(3), preset_cyclic(5),
], ids=[ "L2", "L3", "L4", "L5", "C3", "C5" ])
def test_products_of_low_degree_triples(presentation):
    top = 4
    n = presentation.n
    by_degree = _monomials_by_degree(n, top)
    monomials = { e: presentation.monomial(e) for group in by_degree.values() for e in group }
    for da, db, dc in itertools.product(range(top + 1), repeat=3):
        if da + db + dc > top:
            continue
        for a, b, c in itertools.product(by_degree[da], by_degree[db], by_degree[dc]):
            left = (monomials[a] * monomials[b]) * monomials[c]
            assert left == monomials[a] * (monomials[b] * monomials[c]), (a, b, c)
            reduced = free_reduce(presentation, { _word(a) + _word(b) + _word(c): ONE })
            expected = { tuple(word.count(i) for i in range(1, n + 1)): coefficient
                         for word, coefficient in reduced.items() }
            assert left.terms == expected, (a, b, c)


def test_clear_caches():
    P = preset_linear(3)
    x1, x2, x3 = P.gens()
    product = x3 * x2 * x1
    z_element(P, 3)
    assert P.cache_size() > 0
    P.clear_caches()
    assert P.cache_size() == 0
    assert x3 * x2 * x1 == product


def test_product_tables_are_bounded(monkeypatch):
    monkeypatch.setattr(WeylBenchConfig, "PRODUCT_CACHE_LIMIT", 4)
    P = preset_cyclic(5)
    x = P.gens()
    product = x[4] * x[3] * x[2] * x[1] * x[0]
    assert len(P._gen_cache) <= 4
    assert len(P._mono_cache) <= 4
    P.clear_caches()
    monkeypatch.setattr(WeylBenchConfig, "PRODUCT_CACHE_LIMIT", 10 ** 6)
    assert x[4] * x[3] * x[2] * x[1] * x[0] == product


def test_rendering(linear2):
    assert str(normal_form(linear2, [ 2, 1 ])) == "v^-2*x1*x2 + 1 - v^-2"


# --- PBW criterion ---


@pytest.mark.parametrize("seed", range(25))
def test_pbw_criterion_matches_overlap_resolution(random_presentation, seed):
    P = random_presentation(4, seed)
    assert pbw_check(P) == diamond_oracle(P)


@pytest.mark.parametrize("n", [ 2, 3, 4, 5 ])
def test_presets_are_pbw(n):
    assert pbw_check(preset_linear(n))
    if n % 2 == 1 and n >= 3:
        assert pbw_check(preset_cyclic(n))
        assert diamond_oracle(preset_cyclic(n))


def test_extra_constant_breaks_pbw(linear3):
    broken = linear3.with_relation(1, 3, Q, 1 - Q)
    assert not pbw_check(broken)
    assert not diamond_oracle(broken)


# --- Single parameter ---


def test_single_parameter_prefers_positive_degree():
    assert single_parameter(preset_linear(3, Q.inverse())) == Q
    assert single_parameter(preset_linear(3, Fraction(1, 2))) == LaurentScalar.const(2)


def test_single_parameter_disconnected():
    P = Presentation.from_upper(3, { (1, 2): Q, (1, 3): Q, (2, 3): Q }, { (1, 2): 1 - Q })
    with pytest.raises(NotConnected):
        single_parameter(P)


def test_single_parameter_two_parameters():
    P = Presentation.from_upper(3, { (1, 2): Q, (1, 3): Q * Q, (2, 3): Q },
                                { (1, 2): 1 - Q, (2, 3): 1 - Q })
    with pytest.raises(NotSingleParameter):
        single_parameter(P)


# --- Distinguished elements ---


def test_z_recursion(linear3):
    x1, x2, x3 = linear3.gens()
    assert z_element(linear3, -1).is_zero()
    assert z_element(linear3, 0) == linear3.one()
    assert z_element(linear3, 2) == x1 * x2 - 1
    assert z_element(linear3, 3) == z_element(linear3, 2) * x3 - x1


def test_z_index_out_of_range(linear3):
    with pytest.raises(IndexError):
        z_element(linear3, 4)


@pytest.mark.parametrize("n", [ 3, 5 ])
def test_omega_is_central(n):
    P = preset_cyclic(n)
    central = omega(P)
    for x in P.gens():
        assert commutator(P, central, x).is_zero()


def test_omega_needs_cyclic(linear3):
    with pytest.raises(ValueError):
        omega(linear3)


# --- Homomorphisms ---


def test_standard_maps_respect_relations(linear3, cyclic3):
    assert check_hom(iota_nu(linear3))
    assert check_hom(iota_cyclic(cyclic3))
    assert check_hom(theta_linear(4))
    assert check_hom(theta_cyclic(cyclic3))
    assert check_hom(reversal(linear3))
    assert check_hom(reversal(preset_cyclic(5)))


def test_iota_rejects_non_units(linear3):
    with pytest.raises(ValueError):
        iota_nu(linear3, Q - 1)


def test_orders_of_cyclic_maps():
    P = preset_cyclic(5)
    assert hom_order(theta_cyclic(P), 10) == 5
    assert hom_order(iota_cyclic(P), 4) == 2
    assert is_identity(hom_power(theta_cyclic(P), 5))
    assert not is_identity(hom_power(theta_cyclic(P), 2))


def test_composition_of_scalings(linear3):
    composed = compose_homs(iota_nu(linear3, Q), iota_nu(linear3, Q.inverse()))
    assert is_identity(composed)


def test_defects_name_the_broken_relation(linear3):
    assert not hom_defects(theta_linear(3))
    swapped = HomSpec(linear3, linear3, [ linear3.gen(2), linear3.gen(1), linear3.gen(3) ])
    pairs = [ pair for pair, _ in hom_defects(swapped) ]
    assert (1, 2) in pairs


def test_pbw_criterion_on_many_small_presentations(random_presentation):
    for seed in range(200):
        P = random_presentation(3, 1000 + seed)
        assert pbw_check(P) == diamond_oracle(P), seed
