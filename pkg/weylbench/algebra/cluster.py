# -*- coding: utf-8 -*-

"""
Quantum seed mutation for skew-symmetric exchange matrices
and the two seeds of interest: the affine quiver P on vertices
0 .. n and the type A path on vertices 1 .. n-1.
"""

from typing import Dict, List, Sequence, Tuple

import numpy as np

from weylbench.algebra.qtorus import QuantumTorus
from weylbench.algebra.qtorus import SkewMatrix
from weylbench.algebra.qtorus import TorusElement
from weylbench.algebra.qtorus import left_divide
from weylbench.algebra.qtorus import normalized_exponent
from weylbench.algebra.qtorus import quasi_commutation_skew
from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import qpow
from weylbench.common.errors import IncompatibleSeed
from weylbench.common.util import unit_vector
from weylbench.common.util import vector_add


class ExchangeMatrix(SkewMatrix):
    """
    Skew-symmetric exchange matrix B of a simply-laced quiver,
    b_ij = 1 for an arrow i -> j.
    """

    def arrows(self) -> List[Tuple[int, int]]:
        """ Pairs (i, j) with a positive entry, one per arrow. """
        return [ (i, j) for i in range(self.m) for j in range(self.m) if self[i, j] > 0 ]


def mutate_matrix(matrix, k: int) -> ExchangeMatrix:
    """
    Mutate at vertex k: row and column k change sign, otherwise
    b'_ij = b_ij + [b_ik]_+ [b_kj]_+ - [-b_ik]_+ [-b_kj]_+.

    :raises ValueError: Raised for a non-square matrix.
    :raises IndexError: Raised when k is not a vertex.
    """

    B = np.array(matrix.array if isinstance(matrix, SkewMatrix) else matrix, dtype=np.int64)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ValueError("Exchange matrix must be a square 2D array!")
    m = B.shape[0]
    if not 0 <= k < m:
        raise IndexError(f"Mutation vertex {k} out of bounds for size {m}!")

    column = B[:, k]
    row = B[k, :]
    mutated = B + np.outer(np.maximum(column, 0), np.maximum(row, 0)) \
        - np.outer(np.maximum(-column, 0), np.maximum(-row, 0))
    mutated[k, :] = -B[k, :]
    mutated[:, k] = -B[:, k]
    return ExchangeMatrix(mutated)


class MutationStep(object):
    """
    Exchange data of one mutation: the vertex and the exponent
    vectors of the two exchange monomials, both -1 at the vertex.
    """

    def __init__(self, k: int, a_plus: Sequence[int], a_minus: Sequence[int]):
        self._k = k
        self._a_plus = tuple(a_plus)
        self._a_minus = tuple(a_minus)

    @property
    def k(self) -> int:
        return self._k

    @property
    def a_plus(self) -> Tuple[int, ...]:
        return self._a_plus

    @property
    def a_minus(self) -> Tuple[int, ...]:
        return self._a_minus

    @classmethod
    def from_matrix(cls, B: SkewMatrix, k: int) -> "MutationStep":
        m = B.m
        if not 0 <= k < m:
            raise IndexError(f"Mutation vertex {k} out of bounds for size {m}!")
        a_plus = [ max(B[i, k], 0) for i in range(m) ]
        a_minus = [ max(-B[i, k], 0) for i in range(m) ]
        a_plus[k] = a_minus[k] = -1
        return cls(k, a_plus, a_minus)


class QuantumSeed(object):
    """
    Quantum seed (vars, B, Lambda) with B^T Lambda = d I.

    :param B: Exchange matrix.
    :param skew: Quasi-commutation matrix Lambda of the cluster.
    :param variables: Current cluster, one torus element per vertex.
    :param d: Compatibility constant.
    :param offset: Printed label of vertex 0.

    :raises IncompatibleSeed: Raised when B and Lambda are not compatible.
    """

    def __init__(self, B: ExchangeMatrix, skew: SkewMatrix,
                 variables: Sequence[TorusElement], d: int, offset: int = 0):
        if B.m != skew.m or len(variables) != B.m:
            raise ValueError(f"Seed sizes disagree: B {B.m}, Lambda {skew.m}, {len(variables)} variables!")
        self._B = B
        self._skew = skew
        self._variables = tuple(variables)
        self._d = d
        self._offset = offset

        if not self.is_compatible():
            raise IncompatibleSeed(f"B^T Lambda is not {d} I:\n{self.compatibility_product()}")

    @property
    def B(self) -> ExchangeMatrix:
        return self._B

    @property
    def skew(self) -> SkewMatrix:
        return self._skew

    @property
    def variables(self) -> Tuple[TorusElement, ...]:
        return self._variables

    @property
    def d(self) -> int:
        return self._d

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def m(self) -> int:
        return self._B.m

    @property
    def torus(self) -> QuantumTorus:
        return self._variables[0].torus

    def var(self, label: int) -> TorusElement:
        """ Cluster variable at the printed vertex label. """
        return self._variables[label - self._offset]

    def compatibility_product(self) -> np.ndarray:
        return self._B.array.T @ self._skew.array

    def is_compatible(self) -> bool:
        return np.array_equal(self.compatibility_product(), self._d * np.eye(self.m, dtype=np.int64))

    def quasi_commutation_defects(self) -> List[Tuple[int, int]]:
        """ Pairs with vars_i vars_j != q^lambda_ij vars_j vars_i. """

        defects = [ ]
        for i in range(self.m):
            for j in range(i + 1, self.m):
                xi, xj = self._variables[i], self._variables[j]
                if xi * xj != (xj * xi).scale(qpow(self._skew[i, j])):
                    defects.append((i + self._offset, j + self._offset))
        return defects

    def cluster_monomial(self, c: Sequence[int]) -> TorusElement:
        """
        Normalized monomial X^c of the current cluster, the ordered
        product of vars_i^c_i times q^(1/2 sum_{i<j} c_i c_j lambda_ji).
        """

        torus = self.torus
        result = torus.scalar(LaurentScalar.v_power(normalized_exponent(self._skew, c)))
        for variable, e in zip(self._variables, c):
            if e:
                result = result * (variable ** e)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumSeed):
            return NotImplemented
        return self._B == other._B and self._skew == other._skew and \
            self._d == other._d and self._variables == other._variables

    def __hash__(self) -> int:
        return hash((self._B, self._skew, self._d))

    def __str__(self) -> str:
        lines = [ f"Quantum seed on {self.m} vertices, d = {self._d}", "B =", str(self._B), "Lambda =", str(self._skew) ]
        lines += [ f"\tvar {i + self._offset}: {variable}" for i, variable in enumerate(self._variables) ]
        return "\n".join(lines)


def mutate_matrices(B: ExchangeMatrix, skew: SkewMatrix, k: int) -> Tuple[ExchangeMatrix, SkewMatrix]:
    """
    Mutate the pair (B, Lambda) at vertex k. Row k of the new Lambda
    is Lambda(a+, e_j), every other entry is kept.

    :raises IncompatibleSeed: Raised when Lambda(a+, e_j) and
        Lambda(a-, e_j) differ for some j != k.
    """

    step = MutationStep.from_matrix(B, k)
    m = B.m
    new_skew = skew.array.copy()
    for j in range(m):
        if j == k:
            continue
        e_j = unit_vector(m, j)
        value = skew.pairing(step.a_plus, e_j)
        if value != skew.pairing(step.a_minus, e_j):
            raise IncompatibleSeed(f"Exchange monomials at vertex {k} disagree against vertex {j}!")
        new_skew[k, j] = value
        new_skew[j, k] = -value
    return mutate_matrix(B, k), SkewMatrix(new_skew)


def compatibility_walk_defects(B: ExchangeMatrix, skew: SkewMatrix, d: int,
                               length: int) -> List[Tuple[int, ...]]:
    """
    Walks of up to the given length, without immediate repetition,
    after which B^T Lambda != d I or the exchange is ill defined.
    """

    target = d * np.eye(B.m, dtype=np.int64)
    defects = [ ]

    def visit(B: ExchangeMatrix, skew: SkewMatrix, walk: Tuple[int, ...]):
        if walk and not np.array_equal(B.array.T @ skew.array, target):
            defects.append(walk)
            return
        if len(walk) == length:
            return
        for k in range(B.m):
            if walk and walk[-1] == k:
                continue
            try:
                mutated, mutated_skew = mutate_matrices(B, skew, k)
            except IncompatibleSeed:
                defects.append(walk + (k,))
                continue
            visit(mutated, mutated_skew, walk + (k,))

    visit(B, skew, ())
    return defects


def mutate_seed(seed: QuantumSeed, k: int) -> QuantumSeed:
    """
    Mutate at vertex k (zero based). The new variable solves
    vars_k X'_k = q^(Lambda(e_k,c+)/2) X^c+ + q^(Lambda(e_k,c-)/2) X^c-
    with c+- = a+- + e_k, which is X^a+ + X^a- for the normalized
    exchange monomials.

    :raises IncompatibleSeed: Raised when Lambda(a+, e_j) and
        Lambda(a-, e_j) differ for some j != k.
    """

    B, new_skew = mutate_matrices(seed.B, seed.skew, k)
    step = MutationStep.from_matrix(seed.B, k)
    skew = seed.skew
    e_k = unit_vector(seed.m, k)
    numerator = seed.torus.zero()
    for a in (step.a_plus, step.a_minus):
        c = vector_add(a, e_k)
        numerator = numerator + seed.cluster_monomial(c).scale(LaurentScalar.v_power(skew.pairing(e_k, c)))
    new_variable = left_divide(seed.variables[k], numerator)

    variables = list(seed.variables)
    variables[k] = new_variable
    return QuantumSeed(B, new_skew, variables, seed.d, seed.offset)


def mutate_walk(seed: QuantumSeed, walk: Sequence[int]) -> QuantumSeed:
    """ Mutate along the given zero based vertices in order. """
    for k in walk:
        seed = mutate_seed(seed, k)
    return seed


def preset_P_matrices(n: int) -> Tuple[ExchangeMatrix, SkewMatrix]:
    """ B and Lambda of the quiver P on vertices 0 .. n. """

    if n < 3 or n % 2 == 0:
        raise ValueError(f"Quiver P is used for odd n >= 3, got {n}!")

    m = n + 1
    upper_b = { (i, i + 1): 1 for i in range(n) }
    upper_b[(0, n)] = 1
    B = ExchangeMatrix.from_upper(m, upper_b)
    skew = SkewMatrix.from_upper(m, {
        (i, j): 1 for i in range(m) for j in range(i + 1, m) if (i + j) % 2 == 1
    })
    return B, skew


def preset_P(n: int) -> QuantumSeed:
    """ Seed of the quiver P with the torus generators w_0 .. w_n, d = 2. """

    B, skew = preset_P_matrices(n)
    torus = QuantumTorus(skew, generator="w", offset=0)
    return QuantumSeed(B, skew, torus.gens(), d=2, offset=0)


def dynkin_scaling(i: int) -> LaurentScalar:
    """ q^((1-i)/4) for odd i, q^(-i/4) for even i. """
    return LaurentScalar.v_power(((1 - i) if i % 2 == 1 else -i) // 2)


def preset_dynkinA(n: int) -> QuantumSeed:
    """
    Seed of the type A path on vertices 1 .. n-1, d = 1, with the
    rescaled torus generators y_i = q^((1-i)/4) z_i (i odd) and
    y_i = q^(-i/4) z_i (i even).
    """

    if n < 3 or n % 2 == 0:
        raise ValueError(f"Type A seed is used for odd n >= 3, got {n}!")

    m = n - 1
    B = ExchangeMatrix.from_upper(m, { (i, i + 1): 1 for i in range(m - 1) })
    skew = quasi_commutation_skew(m)
    torus = QuantumTorus(skew, generator="z", offset=1)
    variables = [ torus.gen(i).scale(dynkin_scaling(i)) for i in range(1, m + 1) ]
    return QuantumSeed(B, skew, variables, d=1, offset=1)


def generate_w(n: int, lo: int, hi: int) -> List[TorusElement]:
    """
    The family w_lo .. w_hi in the torus of w_0 .. w_n, extended by
    w_i = w_{i-n-1}^-1 (1 + q w_{i-n} w_{i-1}) upwards and
    w_i = w_{i+n+1}^-1 (1 + q^-1 w_{i+1} w_{i+n}) downwards.
    """

    family = w_family(n, lo, hi)
    return [ family[i] for i in range(lo, hi + 1) ]


def w_family(n: int, lo: int, hi: int) -> Dict[int, TorusElement]:
    """ Same as generate_w, keyed by the index. """

    if lo > 0 or hi < n:
        raise ValueError(f"Window [{lo}, {hi}] must contain 0 .. {n}!")

    torus = preset_P(n).torus
    q = qpow(1)
    family = { i: torus.gen(i) for i in range(n + 1) }
    for i in range(n + 1, hi + 1):
        family[i] = left_divide(family[i - n - 1],
                                torus.one() + (family[i - n] * family[i - 1]).scale(q))
    for i in range(-1, lo - 1, -1):
        family[i] = left_divide(family[i + n + 1],
                                torus.one() + (family[i + 1] * family[i + n]).scale(q.inverse()))
    return family


def x_family(n: int, w: Dict[int, TorusElement], lo: int, hi: int) -> Dict[int, TorusElement]:
    """
    x_i = w_i^-1 (q^-1/2 w_{i-1} + q^1/2 w_{i+1}) for lo <= i <= hi,
    needs w on [lo - 1, hi + 1].
    """

    return {
        i: left_divide(w[i], w[i - 1].scale(qpow("-1/2")) + w[i + 1].scale(qpow("1/2")))
        for i in range(lo, hi + 1)
    }


def rotation_permutation(n: int) -> np.ndarray:
    """ Permutation matrix of the relabeling i -> i + 1 mod n + 1. """
    m = n + 1
    P = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        P[(i + 1) % m, i] = 1
    return P


def rotation_check(n: int) -> bool:
    """ Mutating P at its source 0 rotates the quiver so that the source is at 1. """

    B, _ = preset_P_matrices(n)
    P = rotation_permutation(n)
    return np.array_equal(mutate_matrix(B, 0).array, P @ B.array @ P.T)
