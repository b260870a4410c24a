# -*- coding: utf-8 -*-

"""
Commutative Poisson algebras over Q: (Laurent) polynomials,
brackets extended from generator tables by the Leibniz rule,
semiclassical limits of q-presentations and integer kernels
of log-canonical matrices.
"""

import itertools
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from weylbench.algebra.pbw import NCPoly
from weylbench.algebra.pbw import Presentation
from weylbench.algebra.pbw import multiply
from weylbench.algebra.pbw import render_terms
from weylbench.algebra.qtorus import SkewMatrix
from weylbench.algebra.qtorus import TorusElement
from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import Q
from weylbench.algebra.scalar import exact_divide
from weylbench.algebra.scalar import specialize
from weylbench.common.errors import NotCommutativeAtOne
from weylbench.common.errors import NotDivisible
from weylbench.common.util import unit_vector
from weylbench.common.util import vector_add
from weylbench.common.util import vector_sub

Exponent = Tuple[int, ...]
Number = Union[int, Fraction]

POLYNOMIAL = "polynomial"
LAURENT = "laurent"


class CRing(object):
    """
    Commutative (Laurent) polynomial ring over Q.

    :param m: Number of generators.
    :param generator: Name used when rendering generators.
    :param offset: Index of the first generator.
    :param ambient: POLYNOMIAL or LAURENT.
    """

    def __init__(self, m: int, generator: str = "x", offset: int = 1, ambient: str = POLYNOMIAL):
        if ambient not in (POLYNOMIAL, LAURENT):
            raise ValueError(f"Unknown ambient \"{ambient}\"!")
        self._m = m
        self._generator = generator
        self._offset = offset
        self._ambient = ambient

    @property
    def m(self) -> int:
        return self._m

    @property
    def generator(self) -> str:
        return self._generator

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def ambient(self) -> str:
        return self._ambient

    def gen(self, i: int) -> "CPoly":
        """ Generator with its printed index i. """
        idx = i - self._offset
        if not 0 <= idx < self._m:
            raise IndexError(f"Generator {self._generator}{i} does not exist!")
        return CPoly(self, { unit_vector(self._m, idx): Fraction(1) })

    def gens(self) -> List["CPoly"]:
        return [ self.gen(i + self._offset) for i in range(self._m) ]

    def monomial(self, exponent: Sequence[int], coefficient: Number = 1) -> "CPoly":
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != self._m:
            raise ValueError(f"Exponent {exponent} has wrong dimension, expected {self._m}!")
        return CPoly(self, { exponent: Fraction(coefficient) })

    def const(self, value: Number) -> "CPoly":
        return self.monomial((0,) * self._m, value)

    def one(self) -> "CPoly":
        return self.const(1)

    def zero(self) -> "CPoly":
        return CPoly(self, { })

    def __eq__(self, other) -> bool:
        if not isinstance(other, CRing):
            return NotImplemented
        return (self._m, self._generator, self._offset) == (other._m, other._generator, other._offset)

    def __hash__(self) -> int:
        return hash((self._m, self._generator, self._offset))

    def __str__(self) -> str:
        names = ", ".join(f"{self._generator}{i + self._offset}" for i in range(self._m))
        return f"Q[{names}]" if self._ambient == POLYNOMIAL else f"Q[{names}]^(+-1)"


class CPoly(object):
    """
    Sparse commutative (Laurent) polynomial with rational coefficients.

    :param ring: The ambient ring.
    :param terms: Exponent vector to coefficient mapping.
    """

    __slots__ = ("_ring", "_terms")

    def __init__(self, ring: CRing, terms: Optional[Dict[Exponent, Number]] = None):
        self._ring = ring
        self._terms = { tuple(a): Fraction(c) for a, c in (terms or { }).items() if c != 0 }

    @property
    def ring(self) -> CRing:
        return self._ring

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(a) for a in self._terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def degree_in(self, i: int) -> int:
        """ Largest exponent of the zero based variable i, 0 for zero. """
        return max((a[i] for a in self._terms), default=0)

    def leading(self) -> Tuple[Exponent, Fraction]:
        """ Lexicographically largest term. """
        exponent = max(self._terms)
        return exponent, self._terms[exponent]

    def _coerce(self, other) -> "CPoly":
        if isinstance(other, CPoly):
            if other._ring.m != self._ring.m:
                raise ValueError(f"Dimension mismatch: {self._ring.m} against {other._ring.m}!")
            return other
        return self._ring.const(other)

    def __add__(self, other) -> "CPoly":
        other = self._coerce(other)
        result = dict(self._terms)
        for a, c in other._terms.items():
            result[a] = result.get(a, 0) + c
        return CPoly(self._ring, result)

    __radd__ = __add__

    def __neg__(self) -> "CPoly":
        return CPoly(self._ring, { a: -c for a, c in self._terms.items() })

    def __sub__(self, other) -> "CPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CPoly":
        return self._coerce(other) - self

    def scale(self, factor: Number) -> "CPoly":
        factor = Fraction(factor)
        return CPoly(self._ring, { a: c * factor for a, c in self._terms.items() })

    def __mul__(self, other) -> "CPoly":
        if not isinstance(other, CPoly):
            return self.scale(other)
        other = self._coerce(other)
        result = { }
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                key = vector_add(a, b)
                result[key] = result.get(key, 0) + c * d
        return CPoly(self._ring, result)

    def __rmul__(self, other) -> "CPoly":
        return self.scale(other)

    def inverse(self) -> "CPoly":
        """
        :raises NotDivisible: Raised for non-monomials.
        """
        if not self.is_monomial():
            raise NotDivisible(f"Only monomials are invertible, got {self}!")
        (a, c), = self._terms.items()
        return CPoly(self._ring, { tuple(-e for e in a): 1 / c })

    def __pow__(self, power: int) -> "CPoly":
        base = self if power >= 0 else self.inverse()
        result = self._ring.one()
        for _ in range(abs(power)):
            result = result * base
        return result

    def diff(self, i: int) -> "CPoly":
        """ Partial derivative along the zero based variable i. """
        result = { }
        for a, c in self._terms.items():
            if a[i]:
                result[vector_sub(a, unit_vector(len(a), i))] = c * a[i]
        return CPoly(self._ring, result)

    def substitute(self, images: Sequence["CPoly"], ring: Optional[CRing] = None) -> "CPoly":
        """ Evaluate at the given images, one per generator. """

        ring = ring or (images[0].ring if images else self._ring)
        result = ring.zero()
        powers = { }
        for a, c in self._terms.items():
            term = ring.const(c)
            for idx, e in enumerate(a):
                if e:
                    key = (idx, e)
                    if key not in powers:
                        powers[key] = images[idx] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self._ring.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"CPoly({self})"

    def __str__(self) -> str:
        return render_terms({ a: LaurentScalar.const(c) for a, c in self._terms.items() },
                            generator=self._ring.generator, offset=self._ring.offset)


def cdivide(g: CPoly, f: CPoly) -> CPoly:
    """
    Exact quotient f / g in the Laurent ring, by cancelling
    lexicographic leading terms inside the exponent box
    [min f - min g, max f - max g].

    :raises ZeroDivisionError: Raised for g = 0.
    :raises NotDivisible: Raised when g does not divide f.
    """

    if g.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial!")
    if f.is_zero():
        return g.ring.zero()
    if g.is_monomial():
        return g.inverse() * f

    m = g.ring.m
    low = [ min(a[i] for a in f.terms) - min(a[i] for a in g.terms) for i in range(m) ]
    high = [ max(a[i] for a in f.terms) - max(a[i] for a in g.terms) for i in range(m) ]

    g_lead, g_coefficient = g.leading()
    remainder = f
    quotient = { }
    while not remainder.is_zero():
        r_lead, r_coefficient = remainder.leading()
        exponent = vector_sub(r_lead, g_lead)
        if any(not low[i] <= exponent[i] <= high[i] for i in range(m)):
            raise NotDivisible(f"Polynomial {g} does not divide {f}!")
        coefficient = r_coefficient / g_coefficient
        quotient[exponent] = coefficient
        remainder = remainder - g * g.ring.monomial(exponent, coefficient)

    return CPoly(g.ring, quotient)


def polynomial_divides(g: CPoly, f: CPoly) -> bool:
    """ Is f = g h for a polynomial h, both f and g polynomials. """
    try:
        quotient = cdivide(g, f)
    except NotDivisible:
        return False
    return all(e >= 0 for a in quotient.terms for e in a)


class BracketTable(object):
    """
    Brackets {x_i, x_j} of the generators for i < j (zero based),
    missing entries are zero and {x_j, x_i} = -{x_i, x_j}.

    :param ring: The ambient ring.
    :param entries: Mapping (i, j) to the bracket, i < j.
    :param name: Preset name, if any.
    """

    def __init__(self, ring: CRing, entries: Dict[Tuple[int, int], CPoly], name: Optional[str] = None):
        self._ring = ring
        self._entries = { }
        for (i, j), value in entries.items():
            if not (0 <= i < ring.m and 0 <= j < ring.m) or i == j:
                raise IndexError(f"Bracket entry ({i}, {j}) out of range for {ring.m} generators!")
            if value.is_zero():
                continue
            if i < j:
                self._entries[(i, j)] = value
            else:
                self._entries[(j, i)] = -value
        self._name = name

    @property
    def ring(self) -> CRing:
        return self._ring

    @property
    def m(self) -> int:
        return self._ring.m

    @property
    def ambient(self) -> str:
        return self._ring.ambient

    @property
    def name(self) -> Optional[str]:
        return self._name

    @property
    def entries(self) -> Dict[Tuple[int, int], CPoly]:
        return dict(self._entries)

    def entry(self, i: int, j: int) -> CPoly:
        """ Bracket of the zero based generators i and j. """
        if i == j:
            return self._ring.zero()
        if i < j:
            return self._entries.get((i, j), self._ring.zero())
        return -self._entries.get((j, i), self._ring.zero())

    def with_entry(self, i: int, j: int, value: CPoly) -> "BracketTable":
        """ Copy with one entry replaced. """
        entries = dict(self._entries)
        entries.pop((min(i, j), max(i, j)), None)
        entries[(i, j)] = value
        if value.is_zero():
            del entries[(i, j)]
        return BracketTable(self._ring, entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketTable):
            return NotImplemented
        return self._ring == other._ring and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._ring)

    def __str__(self) -> str:
        g, o = self._ring.generator, self._ring.offset
        lines = [ f"Poisson bracket on {self._ring}" ]
        lines += [ f"\t{{{g}{i + o}, {g}{j + o}}} = {value}" for (i, j), value in sorted(self._entries.items()) ]
        return "\n".join(lines)


def _check_operand(table: BracketTable, f: CPoly):
    if f.ring.m != table.m:
        raise ValueError(f"Dimension mismatch: {f.ring.m} against {table.m}!")
    if table.ambient == POLYNOMIAL and any(e < 0 for a in f.terms for e in a):
        raise ValueError(f"Negative exponents in {f} need a Laurent ambient!")


def bracket(table: BracketTable, f: CPoly, g: CPoly) -> CPoly:
    """
    The biderivation extending the table,
    {f, g} = sum over i < j of (d_i f d_j g - d_j f d_i g) {x_i, x_j}.

    :raises ValueError: Raised on dimension mismatch or negative
        exponents in a polynomial ambient.
    """

    _check_operand(table, f)
    _check_operand(table, g)
    result = table.ring.zero()
    if f.is_zero() or g.is_zero():
        return result

    df = [ f.diff(i) for i in range(table.m) ]
    dg = [ g.diff(i) for i in range(table.m) ]
    for (i, j), value in table.entries.items():
        factor = df[i] * dg[j] - df[j] * dg[i]
        if not factor.is_zero():
            result = result + factor * value
    return result


def jacobi_sum(table: BracketTable, a: int, b: int, c: int) -> CPoly:
    """ {{x_a, x_b}, x_c} + {{x_b, x_c}, x_a} + {{x_c, x_a}, x_b}, zero based. """
    gens = table.ring.gens()
    return bracket(table, table.entry(a, b), gens[c]) + \
        bracket(table, table.entry(b, c), gens[a]) + \
        bracket(table, table.entry(c, a), gens[b])


def jacobi_defects(table: BracketTable) -> List[Tuple[Tuple[int, int, int], CPoly]]:
    """ Generator triples, zero based, on which the Jacobi identity fails. """

    defects = [ ]
    for a, b, c in itertools.combinations(range(table.m), 3):
        value = jacobi_sum(table, a, b, c)
        if not value.is_zero():
            defects.append(((a, b, c), value))
    return defects


def jacobi_check(table: BracketTable):
    """ Report with one Jacobi check per generator triple. """

    from weylbench.algebra.report import Report

    report = Report("jacobi", { "table": table.name or str(table.ring), "m": table.m })
    failing = dict(jacobi_defects(table))
    g, o = table.ring.generator, table.ring.offset
    for a, b, c in itertools.combinations(range(table.m), 3):
        name = f"({g}{a + o}, {g}{b + o}, {g}{c + o})"
        value = failing.get((a, b, c))
        report.add(name, "jacobi", value is None, witness=None if value is None else str(value))
    return report


def log_canonical(ring: CRing, skew: SkewMatrix, name: Optional[str] = None) -> BracketTable:
    """ Log-canonical table {x_i, x_j} = lambda_ij x_i x_j. """

    if skew.m != ring.m:
        raise ValueError(f"Dimension mismatch: {skew.m} against {ring.m}!")
    gens = ring.gens()
    return BracketTable(ring, {
        (i, j): (gens[i] * gens[j]).scale(skew[i, j])
        for i in range(ring.m) for j in range(i + 1, ring.m) if skew[i, j]
    }, name=name)


def _parity_entries(ring: CRing, n: int, cyclic: bool) -> Dict[Tuple[int, int], CPoly]:
    x = ring.gens()
    entries = { }
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1:
                entries[(i, j)] = x[i] * x[j] - 1
            elif (j - i) % 2 == 1:
                entries[(i, j)] = x[i] * x[j]
            else:
                entries[(i, j)] = -(x[i] * x[j])
    if cyclic:
        # {x_n, x_1} = x_n x_1 - 1 replaces the parity entry
        entries[(0, n - 1)] = 1 - x[0] * x[n - 1]
    return entries


def preset_FL(n: int) -> BracketTable:
    """ Semiclassical limit of L_n on Q[x_1 .. x_n]. """
    if n < 1:
        raise ValueError(f"F_n needs n >= 1, got {n}!")
    ring = CRing(n, "x", 1)
    return BracketTable(ring, _parity_entries(ring, n, cyclic=False), name="FL")


def preset_FC(n: int) -> BracketTable:
    """ Semiclassical limit of C_n on Q[x_1 .. x_n], n odd. """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"F_n^C is defined for odd n >= 3, got {n}!")
    ring = CRing(n, "x", 1)
    return BracketTable(ring, _parity_entries(ring, n, cyclic=True), name="FC")


def parity_skew(m: int) -> SkewMatrix:
    """ lambda_ij = 1 for i < j with j - i odd, zero otherwise. """
    return SkewMatrix.from_upper(m, {
        (i, j): 1 for i in range(m) for j in range(i + 1, m) if (j - i) % 2 == 1
    })


def preset_R(n: int) -> BracketTable:
    """ Log-canonical parity bracket on the Laurent ring of w_0 .. w_n. """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Preset R is used for odd n >= 3, got {n}!")
    return log_canonical(CRing(n + 1, "w", 0, LAURENT), parity_skew(n + 1), name="R")


def _d_entries(ring: CRing, n: int) -> Dict[Tuple[int, int], CPoly]:
    W = ring.gens()
    entries = { }
    for i in range(n + 2):
        for j in range(i + 1, n + 2):
            if (j - i) % 2 == 1:
                entries[(i, j)] = W[i] * W[j]
    entries[(0, n + 1)] = (W[1] * W[n]).scale(2)
    return entries


def preset_D(n: int) -> BracketTable:
    """
    Bracket on Q[W_0 .. W_{n+1}]: parity log-canonical except
    {W_0, W_{n+1}} = 2 W_1 W_n.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Preset D is used for odd n >= 3, got {n}!")
    ring = CRing(n + 2, "W", 0)
    return BracketTable(ring, _d_entries(ring, n), name="D")


def preset_E(n: int) -> BracketTable:
    """ The brackets of D on the localization at W_0 .. W_n. """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Preset E is used for odd n >= 3, got {n}!")
    ring = CRing(n + 2, "W", 0, LAURENT)
    return BracketTable(ring, _d_entries(ring, n), name="E")


BRACKET_PRESETS: Dict[str, Callable[[int], BracketTable]] = {
    "FL": preset_FL,
    "FC": preset_FC,
    "D": preset_D,
    "E": preset_E,
    "R": preset_R,
}


def preset_bracket(name: str, n: int) -> BracketTable:
    """ Bracket preset by its name. """
    try:
        factory = BRACKET_PRESETS[name]
    except KeyError:
        raise ValueError(f"Unknown bracket preset \"{name}\", expected one of {sorted(BRACKET_PRESETS)}!")
    return factory(n)


def specialize_nc(f: NCPoly, ring: CRing) -> CPoly:
    """ The commutative image of a PBW normal form at v = 1. """
    return CPoly(ring, { a: specialize(c, 1) for a, c in f.items() })


def specialize_torus(f: TorusElement, ring: CRing) -> CPoly:
    """ The commutative image of a torus element at v = 1. """
    return CPoly(ring, { a: specialize(c, 1) for a, c in f.items() })


def divided_commutator(presentation: Presentation, f: NCPoly, g: NCPoly, ring: Optional[CRing] = None) -> CPoly:
    """
    (fg - gf) / (q - 1) at v = 1.

    :raises NotDivisible: Raised when some coefficient of the
        commutator is not divisible by q - 1.
    """

    ring = ring or CRing(presentation.n, "x", 1)
    difference = multiply(presentation, f, g) - multiply(presentation, g, f)
    h = Q - 1
    return CPoly(ring, { a: specialize(exact_divide(c, h), 1) for a, c in difference.items() })


def divided_commutator_torus(f: TorusElement, g: TorusElement, ring: CRing, h: LaurentScalar = Q - 1) -> CPoly:
    """ (fg - gf) / h at v = 1 in a quantum torus, h defaults to q - 1. """
    difference = f * g - g * f
    return CPoly(ring, { a: specialize(exact_divide(c, h), 1) for a, c in difference.items() })


def semiclassical_limit(presentation: Presentation) -> BracketTable:
    """
    Bracket {x_i, x_j} = (x_i x_j - x_j x_i) / (q - 1) at v = 1.

    :raises NotCommutativeAtOne: Raised when some q_ij is not 1 at v = 1.
    :raises NotDivisible: Raised when a commutator is not divisible by q - 1.
    """

    n = presentation.n
    for i, j in presentation.pairs():
        if specialize(presentation.q(i, j), 1) != 1 or specialize(presentation.r(i, j), 1) != 0:
            raise NotCommutativeAtOne(f"Relation x{i} x{j} of {presentation} is not commutative at q = 1!")

    ring = CRing(n, "x", 1)
    gens = presentation.gens()
    entries = { }
    for i in range(n):
        for j in range(i + 1, n):
            entries[(i, j)] = divided_commutator(presentation, gens[i], gens[j], ring)
    name = { "L": "FL", "C": "FC" }.get(presentation.family)
    return BracketTable(ring, entries, name=name)


def lambda_kernel(skew: Union[SkewMatrix, np.ndarray]) -> List[Exponent]:
    """
    Basis of the integer kernel {m : m Lambda = 0}, computed by
    unimodular column operations. Each vector has a positive first
    non-zero entry. The basis is empty iff the log-canonical Laurent
    algebra of Lambda is Poisson simple.
    """

    A = [ [ int(x) for x in row ] for row in (skew.array if isinstance(skew, SkewMatrix) else np.asarray(skew)) ]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    # m Lambda = 0 iff Lambda^T m = 0, kernel of the transpose by columns
    M = [ [ A[j][i] for j in range(cols) ] for i in range(rows) ]
    U = [ [ int(i == j) for j in range(cols) ] for i in range(cols) ]

    def add_column(target: int, source: int, factor: int):
        for row in M:
            row[target] += factor * row[source]
        for row in U:
            row[target] += factor * row[source]

    def swap_columns(a: int, b: int):
        for row in M:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    pivot = 0
    for r in range(rows):
        if pivot >= cols:
            break
        while True:
            nonzero = [ c for c in range(pivot, cols) if M[r][c] != 0 ]
            if len(nonzero) <= 1:
                break
            smallest = min(nonzero, key=lambda c: abs(M[r][c]))
            for c in nonzero:
                if c != smallest:
                    add_column(c, smallest, -(M[r][c] // M[r][smallest]))
        nonzero = [ c for c in range(pivot, cols) if M[r][c] != 0 ]
        if nonzero:
            swap_columns(pivot, nonzero[0])
            pivot += 1

    basis = [ ]
    for c in range(pivot, cols):
        vector = [ U[r][c] for r in range(cols) ]
        first = next(x for x in vector if x != 0)
        if first < 0:
            vector = [ -x for x in vector ]
        basis.append(tuple(vector))
    return basis


def commutative_z(ring: CRing, i: int, shift: int = 0, cyclic: bool = False) -> CPoly:
    """
    theta^shift(z_i) in Q[x_1 .. x_m] with z_{-1} = 0, z_0 = 1 and
    z_i = z_{i-1} x_i - z_{i-2}. Indices wrap modulo m when cyclic.

    :raises IndexError: Raised when an index leaves 1 .. m without wrapping.
    """

    if i < -1:
        raise IndexError(f"Index of z_{i} out of range!")
    previous, current = ring.zero(), ring.one()
    for k in range(1, i + 1):
        index = k + shift
        if cyclic:
            index = (index - 1) % ring.m + 1
        previous, current = current, current * ring.gen(index) - previous
    return previous if i == -1 else current


def theta(f: CPoly, times: int = 1) -> CPoly:
    """ The cyclic shift x_i -> x_{i+1}, indices modulo m. """
    ring = f.ring
    m = ring.m
    images = [ ring.gen((idx + times) % m + ring.offset) for idx in range(m) ]
    return f.substitute(images, ring)


def omega_commutative(ring: CRing) -> CPoly:
    """ z_{n-1} x_n - z_{n-2} - theta(z_{n-2}) in F_n. """
    n = ring.m
    return commutative_z(ring, n - 1) * ring.gen(n) - commutative_z(ring, n - 2) - \
        commutative_z(ring, n - 2, shift=1, cyclic=True)


def principal_membership(f: CPoly, k: int, lam: Number) -> bool:
    """
    Decide f in (z_k - lam) Q[x_1 .. x_m] for 1 <= k <= m.

    Modulo z_k - lam the variable x_k equals (lam + z_{k-2}) / z_{k-1}.
    Substituting and clearing the z_{k-1} denominators leaves a
    polynomial in the other variables which vanishes iff f is a
    multiple, provided z_{k-1} and lam + z_{k-2} are coprime. When
    they are not (k = 2, lam = -1, where z_2 + 1 = x_1 x_2) the
    decision falls back to exact division by z_k - lam.
    """

    ring = f.ring
    if not 1 <= k <= ring.m:
        raise IndexError(f"Index of z_{k} out of range 1..{ring.m}!")
    if f.is_zero():
        return True

    idx = k - ring.offset
    numerator = commutative_z(ring, k - 2) + Fraction(lam)
    denominator = commutative_z(ring, k - 1)
    for a in f.terms:
        if a[idx] < 0:
            raise ValueError(f"Negative exponent of x{k} in {f}!")

    if not cgcd(numerator, denominator).is_constant():
        return polynomial_divides(commutative_z(ring, k) - Fraction(lam), f)

    top = f.degree_in(idx)
    result = ring.zero()
    for a, c in f.items():
        rest = list(a)
        rest[idx] = 0
        result = result + ring.monomial(rest, c) * (numerator ** a[idx]) * (denominator ** (top - a[idx]))
    return result.is_zero()


def commutative_w(n: int, lo: int, hi: int) -> Dict[int, CPoly]:
    """
    The cluster variables w_lo .. w_hi in the Laurent ring of
    w_0 .. w_n: w_i = w_{i-n-1}^-1 (1 + w_{i-n} w_{i-1}) upwards and
    w_i = w_{i+n+1}^-1 (1 + w_{i+n} w_{i+1}) downwards.
    """

    if lo > 0 or hi < n:
        raise ValueError(f"Window [{lo}, {hi}] must contain 0 .. {n}!")

    ring = CRing(n + 1, "w", 0, LAURENT)
    family = { i: ring.gen(i) for i in range(n + 1) }
    for i in range(n + 1, hi + 1):
        family[i] = cdivide(family[i - n - 1], 1 + family[i - n] * family[i - 1])
    for i in range(-1, lo - 1, -1):
        family[i] = cdivide(family[i + n + 1], 1 + family[i + n] * family[i + 1])
    return family


def commutative_x(w: Dict[int, CPoly], lo: int, hi: int) -> Dict[int, CPoly]:
    """ x_i = w_i^-1 (w_{i-1} + w_{i+1}), needs w on [lo - 1, hi + 1]. """
    return { i: cdivide(w[i], w[i - 1] + w[i + 1]) for i in range(lo, hi + 1) }


def ring_symbols(ring: CRing) -> List[sympy.Symbol]:
    """ One sympy symbol per generator, named as printed. """
    return [ sympy.Symbol(f"{ring.generator}{idx + ring.offset}") for idx in range(ring.m) ]


def to_sympy(f: CPoly) -> sympy.Expr:
    """ The element as a sympy expression, negative exponents allowed. """
    symbols = ring_symbols(f.ring)
    return sympy.Add(*[
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[ s ** e for s, e in zip(symbols, a) ])
        for a, c in f.items()
    ])


def to_sympy_poly(f: CPoly) -> sympy.Poly:
    """
    :raises ValueError: Raised for Laurent rings.
    """
    if f.ring.ambient != POLYNOMIAL:
        raise ValueError("Only polynomial rings convert to sympy.Poly!")
    return sympy.Poly(to_sympy(f), *ring_symbols(f.ring))


def from_sympy_poly(p: sympy.Poly, ring: CRing) -> CPoly:
    terms = { }
    for exponent, c in p.terms():
        c = sympy.Rational(c)
        terms[tuple(int(e) for e in exponent)] = Fraction(int(c.p), int(c.q))
    return CPoly(ring, terms)


def cgcd(f: CPoly, g: CPoly) -> CPoly:
    """ Greatest common divisor in Q[x_1 .. x_m], computed by sympy. """
    return from_sympy_poly(to_sympy_poly(f).gcd(to_sympy_poly(g)), f.ring)


def principal_membership_oracle(f: CPoly, k: int, lam: Number) -> bool:
    """
    Membership in (z_k - lam) by multivariate division in sympy.
    A single generator is a Groebner basis of its ideal, so f lies
    in the ideal iff the remainder vanishes.
    """

    ring = f.ring
    if ring.ambient != POLYNOMIAL:
        raise ValueError("Membership is decided in polynomial rings only!")
    symbols = ring_symbols(ring)
    ideal = to_sympy(commutative_z(ring, k)) - sympy.Rational(Fraction(lam).numerator, Fraction(lam).denominator)
    _, remainder = sympy.reduced(sympy.expand(to_sympy(f)), [ sympy.expand(ideal) ], *symbols)
    return sympy.expand(remainder) == 0


def kernel_matches_oracle(skew: Union[SkewMatrix, np.ndarray]) -> bool:
    """
    Does lambda_kernel span the same rational space as the sympy
    nullspace of Lambda^T, with every vector in the kernel?
    """

    rows = skew.to_list() if isinstance(skew, SkewMatrix) else np.asarray(skew).tolist()
    A = sympy.Matrix([ [ int(x) for x in row ] for row in rows ])
    basis = lambda_kernel(skew)
    rational = A.T.nullspace()
    if len(basis) != len(rational):
        return False
    if not basis:
        return True
    B = sympy.Matrix(basis)
    if any(x != 0 for x in B * A):
        return False
    return B.rank() == len(basis)
