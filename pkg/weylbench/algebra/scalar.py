# -*- coding: utf-8 -*-

"""
Exact coefficients: Laurent polynomials in v = q^(1/2)
with rational coefficients.
"""

from fractions import Fraction
from math import isqrt
from typing import Dict, Iterator, List, Optional, Tuple, Union

from weylbench.common.errors import NotDivisible
from weylbench.common.util import rational_str

Number = Union[int, Fraction]
ScalarLike = Union["LaurentScalar", int, Fraction]


class LaurentScalar(object):
    """
    Immutable element of Q[v, v^-1]. Terms are stored as
    a dictionary from the power of v to a non-zero rational.

    :param terms: Mapping from v-exponent to coefficient,
        zero coefficients are dropped.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[int, Number]] = None):
        cleaned = { }
        for exponent, coefficient in (terms or { }).items():
            coefficient = Fraction(coefficient)
            if coefficient != 0:
                cleaned[int(exponent)] = coefficient
        self._terms = cleaned
        self._hash = None

    @classmethod
    def const(cls, value: Number) -> "LaurentScalar":
        """ Constant scalar. """
        return cls({ 0: value })

    @classmethod
    def v_power(cls, exponent: int, coefficient: Number = 1) -> "LaurentScalar":
        """ Monomial coefficient * v^exponent. """
        return cls({ exponent: coefficient })

    @classmethod
    def coerce(cls, value: ScalarLike) -> "LaurentScalar":
        """ Promote ints and rationals, pass scalars through. """
        if isinstance(value, LaurentScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"Cannot use {type(value).__name__} as a Laurent scalar!")

    @property
    def terms(self) -> Dict[int, Fraction]:
        """ Copy of the exponent to coefficient table. """
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """ Terms in ascending order of the v-exponent. """
        return iter(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """ Units of the Laurent ring are non-zero monomials. """
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == { 0 }

    @property
    def min_exponent(self) -> int:
        return min(self._terms) if self._terms else 0

    @property
    def max_exponent(self) -> int:
        return max(self._terms) if self._terms else 0

    def unit_parts(self) -> Tuple[Fraction, int]:
        """
        Split a unit c * v^k into its parts.

        :raises NotDivisible: Raised when the scalar is not a unit.

        :return: Returns pair (c, k).
        """

        if not self.is_unit():
            raise NotDivisible(f"Scalar {self} is not a unit!")
        (exponent, coefficient), = self._terms.items()
        return coefficient, exponent

    def shift(self, k: int) -> "LaurentScalar":
        """ Multiply by v^k. """
        return LaurentScalar({ e + k: c for e, c in self._terms.items() })

    def inverse(self) -> "LaurentScalar":
        coefficient, exponent = self.unit_parts()
        return LaurentScalar({ -exponent: 1 / coefficient })

    def specialize(self, value: Number) -> Fraction:
        """ Substitute v := value. """
        return specialize(self, value)

    def __add__(self, other: ScalarLike) -> "LaurentScalar":
        other = LaurentScalar.coerce(other)
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return LaurentScalar(result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({ e: -c for e, c in self._terms.items() })

    def __sub__(self, other: ScalarLike) -> "LaurentScalar":
        return self + (-LaurentScalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> "LaurentScalar":
        return LaurentScalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "LaurentScalar":
        other = LaurentScalar.coerce(other)
        result = { }
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar(result)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "LaurentScalar":
        return exact_divide(self, LaurentScalar.coerce(other))

    def __rtruediv__(self, other: ScalarLike) -> "LaurentScalar":
        return exact_divide(LaurentScalar.coerce(other), self)

    def __pow__(self, power: int) -> "LaurentScalar":
        if power < 0:
            return self.inverse() ** (-power)
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.const(other)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"

    def __str__(self) -> str:
        return render_scalar(self)

    def to_json(self) -> List[List[Union[int, str]]]:
        """ Coefficient list [[v-exponent, "p/q"], ...] in ascending order. """
        return [ [ e, rational_str(c) ] for e, c in self.items() ]

    @classmethod
    def from_json(cls, data: List[List[Union[int, str]]]) -> "LaurentScalar":
        return cls({ int(e): Fraction(c) for e, c in data })


ZERO = LaurentScalar()
ONE = LaurentScalar.const(1)
V = LaurentScalar.v_power(1)
Q = LaurentScalar.v_power(2)


def qpow(e: Union[int, Fraction, str]) -> LaurentScalar:
    """
    Power q^e for a half-integer e, returned as v^(2e).

    :raises ValueError: Raised when 2e is not an integer.
    """

    doubled = 2 * Fraction(e)
    if doubled.denominator != 1:
        raise ValueError(f"Exponent {e} of q is not a half-integer!")
    return LaurentScalar.v_power(int(doubled))


def _poly_coefficients(f: LaurentScalar) -> List[Fraction]:
    """ Dense coefficients of v^-min * f, lowest power first. """
    low = f.min_exponent
    dense = [ Fraction(0) ] * (f.max_exponent - low + 1)
    for e, c in f.items():
        dense[e - low] = c
    return dense


def exact_divide(f: ScalarLike, g: ScalarLike) -> LaurentScalar:
    """
    Divide f by g in Q[v, v^-1].

    Both operands are normalized to polynomials with a non-zero
    constant term, which reduces the problem to polynomial long
    division in v.

    :raises ZeroDivisionError: Raised when g is zero.
    :raises NotDivisible: Raised when g does not divide f.
    """

    f = LaurentScalar.coerce(f)
    g = LaurentScalar.coerce(g)
    if g.is_zero():
        raise ZeroDivisionError("Division by the zero scalar!")
    if f.is_zero():
        return ZERO
    if g.is_unit():
        return f * g.inverse()

    shift = f.min_exponent - g.min_exponent
    remainder = _poly_coefficients(f)
    divisor = _poly_coefficients(g)
    if len(remainder) < len(divisor):
        raise NotDivisible(f"Scalar {g} does not divide {f}!")

    quotient = { }
    lead = divisor[-1]
    for top in range(len(remainder) - 1, len(divisor) - 2, -1):
        coefficient = remainder[top]
        if coefficient == 0:
            continue
        factor = coefficient / lead
        offset = top - len(divisor) + 1
        quotient[offset] = factor
        for i, d in enumerate(divisor):
            remainder[offset + i] -= factor * d

    if any(remainder):
        raise NotDivisible(f"Scalar {g} does not divide {f}!")

    return LaurentScalar(quotient).shift(shift)


def specialize(f: ScalarLike, c: Number) -> Fraction:
    """
    Evaluate f at v := c.

    :raises ValueError: Raised when c is zero.
    """

    c = Fraction(c)
    if c == 0:
        raise ValueError("Cannot specialize a Laurent scalar at zero!")
    return sum((coefficient * c ** exponent
                for exponent, coefficient in LaurentScalar.coerce(f).items()),
               Fraction(0))


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """ Rational square root of value, None if there is none. """

    value = Fraction(value)
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def render_monomial_v(exponent: int) -> str:
    """ v^k, so q prints as v^2. """

    if exponent == 0:
        return ""
    return "v" if exponent == 1 else f"v^{exponent}"


def render_scalar(f: LaurentScalar) -> str:
    """ Render terms in descending v-exponent, such as "-v + 1 + 3/2*v^-2". """

    if f.is_zero():
        return "0"

    parts = [ ]
    for exponent, coefficient in sorted(f.terms.items(), reverse=True):
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        monomial = render_monomial_v(exponent)
        if not monomial:
            body = rational_str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{rational_str(magnitude)}*{monomial}"
        parts.append((sign, body))

    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
