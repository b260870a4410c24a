# -*- coding: utf-8 -*-

"""
Quantum tori: Laurent polynomials in x_1 .. x_m with
x_i x_j = q^lambda_ij x_j x_i for a skew-symmetric integer
matrix Lambda. Coefficients attach to ordered monomials.
"""

from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import ONE
from weylbench.algebra.scalar import ZERO
from weylbench.algebra.scalar import ScalarLike
from weylbench.algebra.scalar import exact_divide
from weylbench.common.errors import NotDivisible
from weylbench.common.util import unit_vector
from weylbench.common.util import vector_add
from weylbench.common.util import vector_sub

Exponent = Tuple[int, ...]


class SkewMatrix(object):
    """
    Integer skew-symmetric matrix with zero diagonal.

    :param entries: Square integer matrix, anything numpy
        accepts as a 2d array.
    """

    def __init__(self, entries):
        array = np.array(entries, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"Skew matrix must be square, got shape {array.shape}!")
        if not np.array_equal(array, -array.T):
            raise ValueError("Matrix is not skew-symmetric!")
        array.setflags(write=False)
        self._array = array
        self._rows = tuple(tuple(int(x) for x in row) for row in array)

    @classmethod
    def from_upper(cls, m: int, upper: Dict[Tuple[int, int], int]) -> "SkewMatrix":
        """ Build from entries (i, j), i < j, zero based. """
        array = np.zeros((m, m), dtype=np.int64)
        for (i, j), value in upper.items():
            array[i, j] = value
            array[j, i] = -value
        return cls(array)

    @property
    def m(self) -> int:
        return len(self._rows)

    @property
    def array(self) -> np.ndarray:
        """ Read-only numpy view of the entries. """
        return self._array

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self._rows[i][j]

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """ Lambda(a, b) = sum a_i lambda_ij b_j. """
        return int(np.asarray(a, dtype=np.int64) @ self._array @ np.asarray(b, dtype=np.int64))

    def twist(self, a: Sequence[int], b: Sequence[int]) -> int:
        """ s(a, b) = sum over i > j of a_i b_j lambda_ij, the q-power of x^a x^b. """
        total = 0
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(i):
                if b[j]:
                    total += ai * b[j] * self._rows[i][j]
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def to_list(self) -> List[List[int]]:
        return [ list(row) for row in self._rows ]

    def __str__(self) -> str:
        return str(self._array)


class QuantumTorus(object):
    """
    Quantum torus on m generators.

    :param skew: The matrix Lambda.
    :param generator: Name used when rendering generators.
    :param offset: Index of the first generator, 0 for w_0 ... .
    """

    def __init__(self, skew: SkewMatrix, generator: str = "x", offset: int = 1):
        self._skew = skew
        self._generator = generator
        self._offset = offset

    @property
    def skew(self) -> SkewMatrix:
        return self._skew

    @property
    def m(self) -> int:
        return self._skew.m

    @property
    def generator(self) -> str:
        return self._generator

    @property
    def offset(self) -> int:
        return self._offset

    def gen(self, i: int) -> "TorusElement":
        """ Generator with its printed index i. """
        idx = i - self._offset
        if not 0 <= idx < self.m:
            raise IndexError(f"Generator {self._generator}{i} does not exist!")
        return TorusElement(self, { unit_vector(self.m, idx): ONE })

    def gens(self) -> List["TorusElement"]:
        return [ self.gen(i + self._offset) for i in range(self.m) ]

    def monomial(self, exponent: Sequence[int], coefficient: ScalarLike = 1) -> "TorusElement":
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != self.m:
            raise ValueError(f"Exponent {exponent} has wrong dimension, expected {self.m}!")
        return TorusElement(self, { exponent: LaurentScalar.coerce(coefficient) })

    def scalar(self, value: ScalarLike) -> "TorusElement":
        return self.monomial((0,) * self.m, value)

    def one(self) -> "TorusElement":
        return self.scalar(ONE)

    def zero(self) -> "TorusElement":
        return TorusElement(self, { })

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumTorus):
            return NotImplemented
        return self._skew == other._skew

    def __hash__(self) -> int:
        return hash(self._skew)


class TorusElement(object):
    """
    Sparse element of a quantum torus.

    :param torus: The ambient torus.
    :param terms: Exponent vector to coefficient mapping.
    """

    __slots__ = ("_torus", "_terms")

    def __init__(self, torus: QuantumTorus, terms: Optional[Dict[Exponent, LaurentScalar]] = None):
        self._torus = torus
        self._terms = { tuple(a): c for a, c in (terms or { }).items() if not c.is_zero() }

    @property
    def torus(self) -> QuantumTorus:
        return self._torus

    @property
    def terms(self) -> Dict[Exponent, LaurentScalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading(self) -> Tuple[Exponent, LaurentScalar]:
        """ Lexicographically largest term. """
        exponent = max(self._terms)
        return exponent, self._terms[exponent]

    def coefficient(self, exponent: Sequence[int]) -> LaurentScalar:
        return self._terms.get(tuple(exponent), ZERO)

    def _coerce(self, other) -> "TorusElement":
        if isinstance(other, TorusElement):
            if other._torus is not self._torus and other._torus != self._torus:
                raise ValueError("Operands live in different quantum tori!")
            return other
        return self._torus.scalar(other)

    def __add__(self, other) -> "TorusElement":
        other = self._coerce(other)
        result = dict(self._terms)
        for a, c in other._terms.items():
            result[a] = result.get(a, ZERO) + c
        return TorusElement(self._torus, result)

    __radd__ = __add__

    def __neg__(self) -> "TorusElement":
        return TorusElement(self._torus, { a: -c for a, c in self._terms.items() })

    def __sub__(self, other) -> "TorusElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TorusElement":
        return self._coerce(other) - self

    def scale(self, factor: ScalarLike) -> "TorusElement":
        factor = LaurentScalar.coerce(factor)
        return TorusElement(self._torus, { a: c * factor for a, c in self._terms.items() })

    def __mul__(self, other) -> "TorusElement":
        if isinstance(other, TorusElement):
            return torus_mul(self._torus.skew, self, self._coerce(other))
        return self.scale(other)

    def __rmul__(self, other) -> "TorusElement":
        return self.scale(other)

    def inverse(self) -> "TorusElement":
        """
        Inverse of a monomial c x^a: x^a x^-a = q^s(a,-a), so the
        inverse is c^-1 q^-s(a,-a) x^-a.

        :raises NotDivisible: Raised for non-monomials.
        """

        if not self.is_monomial():
            raise NotDivisible(f"Only monomials are invertible, got {self}!")
        (a, c), = self._terms.items()
        minus = tuple(-e for e in a)
        s = self._torus.skew.twist(a, minus)
        return TorusElement(self._torus, { minus: c.inverse().shift(-2 * s) })

    def __pow__(self, power: int) -> "TorusElement":
        base = self if power >= 0 else self.inverse()
        result = self._torus.one()
        for _ in range(abs(power)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, TorusElement):
            return self._terms == other._terms
        try:
            return self._terms == self._torus.scalar(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"TorusElement({self})"

    def __str__(self) -> str:
        from weylbench.algebra.pbw import render_terms
        return render_terms(self._terms, generator=self._torus.generator, offset=self._torus.offset)


def torus_mul(skew: SkewMatrix, f: TorusElement, g: TorusElement) -> TorusElement:
    """
    Product with x^a x^b = q^s(a,b) x^(a+b).

    :raises ValueError: Raised on dimension mismatch.
    """

    if f.torus.m != skew.m or g.torus.m != skew.m:
        raise ValueError(f"Dimension mismatch: {f.torus.m}, {g.torus.m} against {skew.m}!")

    result = { }
    for a, c in f.items():
        for b, d in g.items():
            key = vector_add(a, b)
            result[key] = result.get(key, ZERO) + (c * d).shift(2 * skew.twist(a, b))
    return TorusElement(f.torus, result)


def normalized_exponent(skew: SkewMatrix, a: Sequence[int]) -> int:
    """ v-power of the normalization, sum over i < j of a_i a_j lambda_ji. """
    total = 0
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            total += a[i] * a[j] * skew[j, i]
    return total


def normalized_monomial(torus: Union[QuantumTorus, SkewMatrix], a: Sequence[int]) -> TorusElement:
    """
    X^a = q^(1/2 sum_{i<j} a_i a_j lambda_ji) x^a, which satisfies
    X^a X^b = q^(Lambda(a,b)/2) X^(a+b).
    """

    if isinstance(torus, SkewMatrix):
        torus = QuantumTorus(torus)
    return torus.monomial(a, LaurentScalar.v_power(normalized_exponent(torus.skew, a)))


def left_divide(g: TorusElement, f: TorusElement) -> TorusElement:
    """
    Solve g h = f for h, cancelling lexicographic leading terms.
    Every exponent of h lies in the box between min f - min g and
    max f - max g coordinate-wise.

    :raises ZeroDivisionError: Raised for g = 0.
    :raises NotDivisible: Raised when no such h exists.
    """

    if g.is_zero():
        raise ZeroDivisionError("Division by the zero torus element!")
    if f.is_zero():
        return g.torus.zero()
    if g.is_monomial():
        return g.inverse() * f

    skew = g.torus.skew
    m = skew.m
    low = [ min(a[i] for a in f.terms) - min(a[i] for a in g.terms) for i in range(m) ]
    high = [ max(a[i] for a in f.terms) - max(a[i] for a in g.terms) for i in range(m) ]

    g_lead, g_coefficient = g.leading()
    remainder = f
    quotient = { }
    while not remainder.is_zero():
        r_lead, r_coefficient = remainder.leading()
        exponent = vector_sub(r_lead, g_lead)
        if any(not low[i] <= exponent[i] <= high[i] for i in range(m)):
            raise NotDivisible(f"Torus element {g} does not left-divide {f}!")
        coefficient = exact_divide(r_coefficient, g_coefficient.shift(2 * skew.twist(g_lead, exponent)))
        quotient[exponent] = coefficient
        remainder = remainder - g * g.torus.monomial(exponent, coefficient)

    return TorusElement(g.torus, quotient)


def right_divide(f: TorusElement, g: TorusElement) -> TorusElement:
    """ Solve h g = f for h, mirroring left_divide. """

    if g.is_zero():
        raise ZeroDivisionError("Division by the zero torus element!")
    if f.is_zero():
        return g.torus.zero()
    if g.is_monomial():
        return f * g.inverse()

    skew = g.torus.skew
    m = skew.m
    low = [ min(a[i] for a in f.terms) - min(a[i] for a in g.terms) for i in range(m) ]
    high = [ max(a[i] for a in f.terms) - max(a[i] for a in g.terms) for i in range(m) ]

    g_lead, g_coefficient = g.leading()
    remainder = f
    quotient = { }
    while not remainder.is_zero():
        r_lead, r_coefficient = remainder.leading()
        exponent = vector_sub(r_lead, g_lead)
        if any(not low[i] <= exponent[i] <= high[i] for i in range(m)):
            raise NotDivisible(f"Torus element {g} does not right-divide {f}!")
        coefficient = exact_divide(r_coefficient, g_coefficient.shift(2 * skew.twist(exponent, g_lead)))
        quotient[exponent] = coefficient
        remainder = remainder - g.torus.monomial(exponent, coefficient) * g

    return TorusElement(g.torus, quotient)


def scale_generators(f: TorusElement, factors: Sequence[LaurentScalar]) -> TorusElement:
    """ Image of f under the automorphism x_i -> factors[i] x_i. """

    result = { }
    for a, c in f.items():
        factor = ONE
        for e, unit in zip(a, factors):
            factor = factor * (LaurentScalar.coerce(unit) ** e)
        result[a] = c * factor
    return TorusElement(f.torus, result)


def substitute(terms: Dict[Exponent, LaurentScalar], images: Sequence[TorusElement],
               torus: QuantumTorus) -> TorusElement:
    """
    Evaluate an ordered-monomial table at the given images,
    factors taken in ascending index order.
    """

    result = torus.zero()
    for a, c in terms.items():
        term = torus.scalar(c)
        for idx, e in enumerate(a):
            if e:
                term = term * (images[idx] ** e)
        result = result + term
    return result


def quasi_commutation_skew(n: int) -> SkewMatrix:
    """
    Lambda of the torus on z_1 .. z_n in which z_i z_j = q z_j z_i
    for i < j exactly when i is odd and j is even, the z_i commuting
    otherwise.
    """

    return SkewMatrix.from_upper(n, {
        (i - 1, j - 1): 1 for i in range(1, n + 1) for j in range(i + 1, n + 1)
        if i % 2 == 1 and j % 2 == 0
    })
