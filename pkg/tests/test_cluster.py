# -*- coding: utf-8 -*-

import numpy as np
import pytest

from weylbench.algebra import ExchangeMatrix
from weylbench.algebra import QuantumSeed
from weylbench.algebra import QuantumTorus
from weylbench.algebra import SkewMatrix
from weylbench.algebra import generate_w
from weylbench.algebra import mutate_matrix
from weylbench.algebra import mutate_seed
from weylbench.algebra import mutate_walk
from weylbench.algebra import preset_dynkinA
from weylbench.algebra import preset_P
from weylbench.algebra import rotation_check
from weylbench.algebra.cluster import compatibility_walk_defects
from weylbench.algebra.cluster import mutate_matrices
from weylbench.algebra.cluster import preset_P_matrices
from weylbench.algebra.cluster import w_family
from weylbench.common.errors import IncompatibleSeed
from weylbench.suites.cluster import dynkin_difference


def test_matrix_mutation_is_an_involution():
    B, _ = preset_P_matrices(5)
    for k in range(B.m):
        assert mutate_matrix(mutate_matrix(B, k), k) == B


def test_matrix_mutation_of_a_path():
    B = ExchangeMatrix.from_upper(3, { (0, 1): 1, (1, 2): 1 })
    mutated = mutate_matrix(B, 1)
    assert mutated.arrows() == [ (0, 2), (1, 0), (2, 1) ]


def test_matrix_mutation_vertex_out_of_range():
    B, _ = preset_P_matrices(3)
    with pytest.raises(IndexError):
        mutate_matrix(B, 4)


@pytest.mark.parametrize("n", [ 3, 5, 7 ])
def test_presets_are_compatible(n):
    assert preset_P(n).is_compatible()
    assert preset_P(n).d == 2
    assert preset_dynkinA(n).is_compatible()
    assert preset_dynkinA(n).d == 1


def test_incompatible_seed_is_rejected():
    B, _ = preset_P_matrices(3)
    zero = SkewMatrix(np.zeros((4, 4), dtype=np.int64))
    with pytest.raises(IncompatibleSeed):
        QuantumSeed(B, zero, QuantumTorus(zero, "w", 0).gens(), d=2)


@pytest.mark.parametrize("n", [ 3, 5, 7 ])
def test_rotation(n):
    assert rotation_check(n)


def test_seed_mutation_is_an_involution():
    seed = preset_P(3)
    for k in range(seed.m):
        assert mutate_seed(mutate_seed(seed, k), k) == seed


@pytest.mark.parametrize("walk", [ (0,), (1, 3), (0, 2, 4), (0, 1, 2, 3) ])
def test_walks_keep_quasi_commutation(walk):
    seed = mutate_walk(preset_P(5), walk)
    assert seed.is_compatible()
    assert seed.quasi_commutation_defects() == [ ]


@pytest.mark.parametrize("k", range(4))
def test_walking_around_the_quiver_generates_w(k):
    n = 3
    family = w_family(n, 0, 2 * n + 1)
    assert mutate_walk(preset_P(n), range(k + 1)).var(k) == family[n + 1 + k]


def test_window_of_initial_variables():
    assert generate_w(3, 0, 3) == list(preset_P(3).variables)


def test_window_must_contain_the_seed():
    with pytest.raises(ValueError):
        generate_w(3, 1, 5)


@pytest.mark.parametrize("k", range(1, 4))
def test_type_a_exchange_relations(k):
    assert dynkin_difference(preset_dynkinA(5), k).is_zero()


def test_type_a_needs_odd_size():
    with pytest.raises(ValueError):
        preset_dynkinA(4)


@pytest.mark.parametrize("preset", [ preset_P, preset_dynkinA ])
def test_matrix_walks_stay_compatible(preset):
    seed = preset(5)
    assert compatibility_walk_defects(seed.B, seed.skew, seed.d, 6) == [ ]


def test_matrix_walks_report_a_wrong_constant():
    seed = preset_P(5)
    defects = compatibility_walk_defects(seed.B, seed.skew, 3, 1)
    assert defects == [ (k,) for k in range(seed.m) ]


def test_matrix_mutation_agrees_with_seed_mutation():
    seed = preset_P(5)
    B, skew = mutate_matrices(seed.B, seed.skew, 2)
    mutated = mutate_seed(seed, 2)
    assert (B, skew) == (mutated.B, mutated.skew)


@pytest.mark.parametrize("preset", [ preset_P, preset_dynkinA ])
def test_every_seed_walk_up_to_length_four(preset):
    root = preset(5)
    length = 4
    stack = [ (root, ()) ]
    visited = 0
    while stack:
        seed, walk = stack.pop()
        if len(walk) == length:
            continue
        for k in range(seed.m):
            if walk and walk[-1] == k:
                continue
            child = mutate_seed(seed, k)
            assert child.is_compatible(), walk + (k,)
            assert child.d == root.d
            assert mutate_seed(child, k) == seed, walk + (k,)
            stack.append((child, walk + (k,)))
            visited += 1
    m = root.m
    assert visited == sum(m * (m - 1) ** (size - 1) for size in range(1, length + 1))
