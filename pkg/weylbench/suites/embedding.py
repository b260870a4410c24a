# -*- coding: utf-8 -*-

"""
Embedding of L_n into the quantum torus of z_1 .. z_n by
x_i -> v_i = z_{i-1}^-1 (z_i + z_{i-2}), and the splitting
identity of the one-variable Laurent ring used for C_n.
"""

from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from weylbench.algebra.parser import parse_scalar
from weylbench.algebra.pbw import NCPoly
from weylbench.algebra.pbw import preset_linear
from weylbench.algebra.pbw import z_element
from weylbench.algebra.qtorus import QuantumTorus
from weylbench.algebra.qtorus import SkewMatrix
from weylbench.algebra.qtorus import TorusElement
from weylbench.algebra.qtorus import left_divide
from weylbench.algebra.qtorus import quasi_commutation_skew
from weylbench.algebra.qtorus import scale_generators
from weylbench.algebra.qtorus import substitute
from weylbench.algebra.report import Report
from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import Q
from weylbench.algebra.scalar import ScalarLike
from weylbench.config import WeylBenchConfig
from weylbench.suites.runner import CheckTask
from weylbench.suites.runner import SuiteRunner
from weylbench.suites.runner import candidates
from weylbench.suites.runner import difference
from weylbench.suites.runner import run_tasks


class VEmbedding(object):
    """
    The images v_i and w_i = z_{i-1}^-1 z_i in the torus T_n
    on z_1 .. z_n, where z_i z_j = q z_j z_i for i < j with i odd
    and j even.

    :param n: Size, n >= 2.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"The embedding of L_n needs n >= 2, got {n}!")
        self.n = n
        self.presentation = preset_linear(n)
        self.torus = QuantumTorus(quasi_commutation_skew(n), generator="z", offset=1)
        self.v = [ left_divide(self.z(i - 1), self.z(i) + self.z(i - 2)) for i in range(1, n + 1) ]
        self.w = [ self.z(i - 1).inverse() * self.z(i) for i in range(1, n + 1) ]

    def z(self, i: int) -> TorusElement:
        """ Torus generator z_i, with z_0 = 1 and z_-1 = 0. """
        if i == -1:
            return self.torus.zero()
        if i == 0:
            return self.torus.one()
        return self.torus.gen(i)

    def psi(self, f: NCPoly) -> TorusElement:
        """ Image of f under x_i -> v_i. """
        return substitute(f.terms, self.v, self.torus)


def relation_difference(embedding: VEmbedding, i: int, j: int) -> TorusElement:
    """ v_i v_j - q_ij v_j v_i - r_ij. """
    P = embedding.presentation
    vi, vj = embedding.v[i - 1], embedding.v[j - 1]
    return vi * vj - (vj * vi).scale(P.q(i, j)) - P.r(i, j)


def adjacent_readings(embedding: VEmbedding, i: int) -> Dict[str, TorusElement]:
    """ The two orderings of the adjacent relation between v_i and v_(i+1). """

    q = embedding.presentation.parameter
    vi, vn = embedding.v[i - 1], embedding.v[i]
    return {
        f"v{i + 1}*v{i} = q*v{i}*v{i + 1} + 1 - q": vn * vi - (vi * vn).scale(q) - (1 - q),
        f"v{i}*v{i + 1} = q*v{i + 1}*v{i} + 1 - q": vi * vn - (vn * vi).scale(q) - (1 - q),
    }


def z_image_difference(embedding: VEmbedding, i: int) -> TorusElement:
    """ psi(z_i) - z_i. """
    return embedding.psi(z_element(embedding.presentation, i)) - embedding.z(i)


def w_twist(i: int, j: int) -> int:
    """ Exponent e with w_i w_j = q^e w_j w_i for i < j. """
    return -1 if (j - i) % 2 == 0 else 1


def w_twist_readings(embedding: VEmbedding, i: int, j: int) -> Dict[str, TorusElement]:
    """ The rule w_j w_i = q^e w_i w_j against its transpose w_i w_j = q^e w_j w_i. """

    factor = Q ** w_twist(i, j)
    wi, wj = embedding.w[i - 1], embedding.w[j - 1]
    power = f"q^{w_twist(i, j)}"
    return {
        f"w{j}*w{i} = {power}*w{i}*w{j}": wj * wi - (wi * wj).scale(factor),
        f"w{i}*w{j} = {power}*w{j}*w{i}": wi * wj - (wj * wi).scale(factor),
    }


def multiplicativity_difference(embedding: VEmbedding, a: Sequence[int], b: Sequence[int]) -> TorusElement:
    """ psi(x^a) psi(x^b) - psi(x^a x^b). """
    P = embedding.presentation
    f, g = P.monomial(a), P.monomial(b)
    return embedding.psi(f) * embedding.psi(g) - embedding.psi(f * g)


def random_exponent_pairs(n: int, count: int, seed: int,
                          high: int = 2) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """ Random pairs of exponent vectors with entries below high. """
    rng = np.random.default_rng(seed)
    return [ (tuple(int(e) for e in rng.integers(0, high, size=n)),
              tuple(int(e) for e in rng.integers(0, high, size=n)))
             for _ in range(count) ]


def embedding_tasks(n: int, samples: Optional[int] = None, seed: Optional[int] = None) -> List[CheckTask]:
    """ Checks that x_i -> v_i is an algebra map L_n -> T_n fixing every z_i. """

    embedding = VEmbedding(n)
    P = embedding.presentation
    tasks = [ ]

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            tasks.append(difference(f"v{i}*v{j} = ({P.q(i, j)})*v{j}*v{i} + ({P.r(i, j)})", "v-relation",
                                    partial(relation_difference, embedding, i, j)))

    for i in range(1, n):
        tasks.append(candidates(f"order of the v{i}, v{i + 1} relation", "v-relation-reading",
                                partial(adjacent_readings, embedding, i)))

    for i in range(1, n + 1):
        tasks.append(difference(f"psi(z{i}) = z{i}", "z-image", partial(z_image_difference, embedding, i)))

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            tasks.append(candidates(f"twist of w{i}, w{j}", "w-twist",
                                    partial(w_twist_readings, embedding, i, j)))

    samples = WeylBenchConfig.MULTIPLICATIVITY_SAMPLES if samples is None else samples
    seed = WeylBenchConfig.RANDOM_SEED if seed is None else seed
    for a, b in random_exponent_pairs(n, samples, seed):
        tasks.append(difference(f"psi(x^{list(a)} x^{list(b)})", "multiplicative",
                                partial(multiplicativity_difference, embedding, a, b)))
    return tasks


def check_v_embedding(n: int, runner: Optional[SuiteRunner] = None) -> Report:
    """
    Verify every relation of L_n on the images v_i.

    :raises ValueError: Raised for n < 2.
    """
    return run_tasks("embedding", { "n": n }, embedding_tasks(n), runner)


def splitting_torus(n: int) -> QuantumTorus:
    """ Laurent ring of the single variable z_(n-2). """
    return QuantumTorus(SkewMatrix([ [ 0 ] ]), generator="z", offset=n - 2)


def splitting_difference(n: int, lam: ScalarLike) -> TorusElement:
    """
    u - alpha(u) - (1 - q)(q^((n-3)/2) z^-1 - z) for
    u = q^((n-3)/2) z^-1 + lam + q z and alpha(z) = q^-1 z.

    :raises ValueError: Raised unless n is odd and n >= 3.
    """

    if n < 3 or n % 2 == 0:
        raise ValueError(f"The splitting identity is stated for odd n >= 3, got {n}!")
    torus = splitting_torus(n)
    z = torus.gen(n - 2)
    c = Q ** ((n - 3) // 2)
    u = z.inverse().scale(c) + LaurentScalar.coerce(lam) + z.scale(Q)
    alpha_u = scale_generators(u, [ Q.inverse() ])
    v = (z.inverse().scale(c) - z).scale(1 - Q)
    return u - alpha_u - v


def check_splitting(n: int, lam: ScalarLike) -> bool:
    """ Is u - alpha(u) equal to (1 - q)(q^((n-3)/2) z^-1 - z)? """
    return splitting_difference(n, lam).is_zero()


def splitting_tasks(n: int, constants: Optional[Sequence[str]] = None) -> List[CheckTask]:
    constants = WeylBenchConfig.SPLITTING_CONSTANTS if constants is None else constants
    return [
        difference(f"u - alpha(u) = (1 - q)*(q^{(n - 3) // 2}*z{n - 2}^-1 - z{n - 2}), lambda = {text}",
                   "splitting", partial(splitting_difference, n, parse_scalar(text)))
        for text in constants
    ]


def suite_embedding(n: int, constants: Optional[Sequence[str]] = None,
                    runner: Optional[SuiteRunner] = None) -> Report:
    """
    The embedding checks at n, followed by the splitting identity
    for every constant when n is odd.
    """

    tasks = embedding_tasks(n)
    if n >= 3 and n % 2 == 1:
        tasks += splitting_tasks(n, constants)
    params = { "n": n }
    if constants is not None:
        params["lam"] = list(constants)
    return run_tasks("embedding", params, tasks, runner)
