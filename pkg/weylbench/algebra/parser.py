# -*- coding: utf-8 -*-

"""
Top-down operator precedence parser for algebra expressions:
generators such as x1, w0 or W3, named elements (Omega, Delta),
rationals, q, v, + - * /, ^ and parentheses.

Binding from strongest: ^, unary -, * and /, binary + and -.
Juxtaposition is not multiplication.
"""

import re
from fractions import Fraction
from typing import Callable, Dict, Iterator, NamedTuple, Optional, Union

from weylbench.algebra.pbw import NCPoly
from weylbench.algebra.pbw import Presentation
from weylbench.algebra.pbw import omega
from weylbench.algebra.pbw import z_element
from weylbench.algebra.poisson import BracketTable
from weylbench.algebra.poisson import CPoly
from weylbench.algebra.poisson import CRing
from weylbench.algebra.poisson import commutative_z
from weylbench.algebra.poisson import omega_commutative
from weylbench.algebra.qtorus import QuantumTorus
from weylbench.algebra.qtorus import TorusElement
from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import Q
from weylbench.algebra.scalar import V
from weylbench.algebra.scalar import exact_divide
from weylbench.common.errors import NotDivisible
from weylbench.common.errors import ParseError

PBW = "pbw"
TORUS = "torus"
POISSON = "poisson"
CONTEXTS = (PBW, TORUS, POISSON)

SCALAR_NAMES = ("q", "v")

Element = Union[NCPoly, TorusElement, CPoly]
Value = Union[LaurentScalar, NCPoly, TorusElement, CPoly]


class Token(NamedTuple):
    kind: str
    value: Union[str, int]
    position: int


TOKEN_PATTERNS = {
    "name": r"[A-Za-z_][A-Za-z_]*[0-9]*",
    "num": r"[0-9]+",
    "op": r"[-+*/^()]",
    "skip": r"[ \t\r\n]+",
    "error": r".",
}
TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in TOKEN_PATTERNS.items()))


def tokenize(source: str) -> Iterator[Token]:
    """
    Split the source into tokens.

    :raises ParseError: Raised on a character outside the grammar.
    """

    for mo in TOKEN_REGEX.finditer(source):
        kind = mo.lastgroup
        value = mo.group()
        if kind == "skip":
            continue
        if kind == "error":
            raise ParseError("unknown-symbol", mo.start(), f"unknown symbol '{value}'")
        if kind == "num":
            yield Token(kind, int(value), mo.start())
        else:
            yield Token(kind, value, mo.start())


class Expr(object):
    """ Node of the syntax tree. """

    def __init__(self, position: int):
        self.position = position

    def evaluate(self, namespace: "Namespace") -> Value:
        raise NotImplementedError


class Number(Expr):
    def __init__(self, value: int, position: int):
        super().__init__(position)
        self.value = value

    def evaluate(self, namespace: "Namespace") -> Value:
        return LaurentScalar.const(self.value)

    def __str__(self) -> str:
        return str(self.value)


class Name(Expr):
    def __init__(self, name: str, position: int):
        super().__init__(position)
        self.name = name

    @property
    def is_scalar(self) -> bool:
        return self.name in SCALAR_NAMES

    def evaluate(self, namespace: "Namespace") -> Value:
        return namespace.lookup(self.name, self.position)

    def __str__(self) -> str:
        return self.name


class Negate(Expr):
    def __init__(self, operand: Expr, position: int):
        super().__init__(position)
        self.operand = operand

    def evaluate(self, namespace: "Namespace") -> Value:
        return -self.operand.evaluate(namespace)

    def __str__(self) -> str:
        return f"(-{self.operand})"


class Binary(Expr):
    def __init__(self, op: str, left: Expr, right: Expr, position: int):
        super().__init__(position)
        self.op = op
        self.left = left
        self.right = right

    def evaluate(self, namespace: "Namespace") -> Value:
        left = self.left.evaluate(namespace)
        right = self.right.evaluate(namespace)
        if self.op == "+":
            return namespace.add(left, right, self.position)
        if self.op == "-":
            return namespace.add(left, -right, self.position)
        if self.op == "*":
            return namespace.multiply(left, right, self.position)
        return namespace.divide(left, right, self.position)

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


class Power(Expr):
    def __init__(self, base: Expr, exponent: Fraction, position: int):
        super().__init__(position)
        self.base = base
        self.exponent = exponent

    def evaluate(self, namespace: "Namespace") -> Value:
        return namespace.power(self.base.evaluate(namespace), self.exponent, self.position)

    def __str__(self) -> str:
        return f"{self.base}^({self.exponent})"


class Parser(object):
    """
    Pratt parser over a token list.

    :param context: PBW, TORUS or POISSON, decides which
        exponents are legal on generators.
    """

    BINARY = { "+": 10, "-": 10, "*": 20, "/": 20, "^": 30 }
    UNARY_MINUS = 25

    def __init__(self, context: str = PBW):
        if context not in CONTEXTS:
            raise ValueError(f"Unknown parsing context \"{context}\"!")
        self.context = context
        self._tokens = [ ]
        self._index = 0
        self._length = 0

    @property
    def token(self) -> Optional[Token]:
        return self._tokens[self._index] if self._index < len(self._tokens) else None

    def _lbp(self) -> int:
        token = self.token
        if token is None or token.kind != "op":
            if token is not None:
                # two operands in a row
                raise ParseError("unexpected-token", token.position,
                                 f"unexpected '{token.value}', juxtaposition is not multiplication")
            return 0
        if token.value == ")":
            return 0
        if token.value == "(":
            raise ParseError("unexpected-token", token.position,
                             "unexpected '(', juxtaposition is not multiplication")
        return self.BINARY[token.value]

    def advance(self, expected: Optional[str] = None) -> Token:
        token = self.token
        if token is None:
            raise ParseError("unexpected-end", self._length,
                             f"expected '{expected}'" if expected else "unexpected end of input")
        if expected is not None and token.value != expected:
            raise ParseError("unexpected-token", token.position, f"expected '{expected}', got '{token.value}'")
        self._index += 1
        return token

    def expression(self, rbp: int) -> Expr:
        left = self.nud(self.advance())
        while rbp < self._lbp():
            left = self.led(self.advance(), left)
        return left

    def nud(self, token: Token) -> Expr:
        if token.kind == "num":
            return Number(token.value, token.position)
        if token.kind == "name":
            return Name(token.value, token.position)
        if token.value == "(":
            inner = self.expression(0)
            self.advance(")")
            return inner
        if token.value == "-":
            return Negate(self.expression(self.UNARY_MINUS), token.position)
        raise ParseError("unexpected-token", token.position, f"unexpected '{token.value}'")

    def led(self, token: Token, left: Expr) -> Expr:
        if token.value == "^":
            return self._power(token, left)
        right = self.expression(self.BINARY[token.value])
        return Binary(token.value, left, right, token.position)

    def _exponent(self) -> Fraction:
        """ Exponent literal: [-]int or ( [-]int [/ int] ). """

        token = self.advance()
        if token.value == "(":
            value = self._exponent()
            if self.token is not None and self.token.value == "/":
                self.advance("/")
                denominator = self.advance()
                if denominator.kind != "num" or denominator.value == 0:
                    raise ParseError("invalid-exponent", denominator.position,
                                     "exponent denominator must be a positive integer")
                value = value / denominator.value
            self.advance(")")
            return value
        if token.value == "-":
            return -self._exponent()
        if token.kind != "num":
            raise ParseError("invalid-exponent", token.position, f"invalid exponent '{token.value}'")
        return Fraction(token.value)

    def _power(self, token: Token, base: Expr) -> Expr:
        exponent = self._exponent()
        scalar_base = isinstance(base, Number) or (isinstance(base, Name) and base.is_scalar)
        if not scalar_base:
            if exponent.denominator != 1:
                raise ParseError("fractional-exponent", token.position,
                                 f"fractional power {exponent} of a non-scalar")
            if exponent < 0 and self.context == PBW:
                raise ParseError("negative-exponent", token.position,
                                 f"negative power {exponent} in a PBW algebra")
        return Power(base, exponent, token.position)

    def parse(self, source: str) -> Expr:
        self._tokens = list(tokenize(source))
        self._index = 0
        self._length = len(source.encode("utf-8"))
        if not self._tokens:
            raise ParseError("unexpected-end", 0, "empty expression")
        try:
            tree = self.expression(0)
            if self.token is not None:
                raise ParseError("unexpected-token", self.token.position, f"unexpected '{self.token.value}'")
            return tree
        finally:
            self._tokens = [ ]
            self._index = 0


def parse(source: str, context: str = PBW) -> Expr:
    """
    Parse an expression.

    :raises ParseError: Raised with the offending offset on any
        syntax error.
    """

    return Parser(context).parse(source)


class Namespace(object):
    """
    Identifiers and element arithmetic of one parsing context.

    :param context: PBW, TORUS or POISSON.
    :param names: Identifier to element mapping.
    :param embed: Turns a scalar into an element.
    :param rational_only: Reject scalars outside Q when embedding.
    """

    def __init__(self, context: str, names: Dict[str, Union[Value, Callable[[], Value]]],
                 embed: Callable[[LaurentScalar], Element], rational_only: bool = False):
        self.context = context
        self._names = dict(names)
        self._embed = embed
        self._rational_only = rational_only

    def lookup(self, name: str, position: int) -> Value:
        if name not in self._names:
            raise ParseError("unknown-identifier", position, f"unknown identifier '{name}'")
        value = self._names[name]
        if callable(value):
            value = value()
            self._names[name] = value
        return value

    def element(self, value: Value, position: Optional[int] = None) -> Element:
        if not isinstance(value, LaurentScalar):
            return value
        if self._rational_only and not value.is_constant():
            raise ParseError("not-rational", position, f"scalar {value} is not rational")
        return self._embed(value)

    def add(self, left: Value, right: Value, position: Optional[int] = None) -> Value:
        if isinstance(left, LaurentScalar) and isinstance(right, LaurentScalar):
            return left + right
        return self.element(left, position) + self.element(right, position)

    def multiply(self, left: Value, right: Value, position: Optional[int] = None) -> Value:
        if isinstance(left, LaurentScalar) and isinstance(right, LaurentScalar):
            return left * right
        return self.element(left, position) * self.element(right, position)

    def divide(self, left: Value, right: Value, position: int) -> Value:
        if not isinstance(right, LaurentScalar):
            raise ParseError("non-scalar-divisor", position, "only scalars can divide")
        if right.is_zero():
            raise ParseError("division-by-zero", position, "division by zero")
        try:
            if isinstance(left, LaurentScalar):
                return exact_divide(left, right)
            return self.element(left, position) * self.element(exact_divide(1, right), position)
        except NotDivisible:
            raise ParseError("not-divisible", position, f"{right} is not invertible")

    def power(self, base: Value, exponent: Fraction, position: int) -> Value:
        if isinstance(base, LaurentScalar):
            return _scalar_power(base, exponent, position)
        try:
            return base ** int(exponent)
        except NotDivisible:
            raise ParseError("not-invertible", position, f"{base} is not invertible")
        except ValueError as error:
            raise ParseError("negative-exponent", position, str(error))


def _scalar_power(base: LaurentScalar, exponent: Fraction, position: int) -> LaurentScalar:
    if exponent.denominator == 1:
        try:
            return base ** int(exponent)
        except NotDivisible:
            raise ParseError("not-invertible", position, f"{base} is not invertible")
    if not base.is_unit():
        raise ParseError("fractional-exponent", position, f"fractional power of {base}")
    coefficient, v_exponent = base.unit_parts()
    doubled = v_exponent * exponent
    if coefficient != 1 or doubled.denominator != 1:
        raise ParseError("fractional-exponent", position, f"{base}^({exponent}) is not a power of v")
    return LaurentScalar.v_power(int(doubled))


def _scalar_names() -> Dict[str, LaurentScalar]:
    return { "q": Q, "v": V }


def pbw_namespace(presentation: Presentation) -> Namespace:
    """ x1 .. xn, z0 .. zn and Omega for the presets, q and v. """

    names = _scalar_names()
    names.update({ f"x{i}": presentation.gen(i) for i in range(1, presentation.n + 1) })
    if presentation.family in ("L", "C"):
        names.update({ f"z{i}": (lambda i=i: z_element(presentation, i)) for i in range(0, presentation.n + 1) })
    if presentation.family == "C":
        names["Omega"] = lambda: omega(presentation)
    return Namespace(PBW, names, presentation.scalar)


def torus_namespace(torus: QuantumTorus) -> Namespace:
    """ Torus generators by their printed names, q and v. """

    names = _scalar_names()
    names.update({ f"{torus.generator}{i + torus.offset}": torus.gen(i + torus.offset) for i in range(torus.m) })
    return Namespace(TORUS, names, torus.scalar)


def poisson_namespace(table: Union[BracketTable, CRing]) -> Namespace:
    """
    Ring generators by their printed names, with z0 .. zm and
    Omega on Q[x_1 .. x_m] and Delta on the W rings.
    """

    ring = table.ring if isinstance(table, BracketTable) else table
    names = _scalar_names()
    names.update({ f"{ring.generator}{i + ring.offset}": ring.gen(i + ring.offset) for i in range(ring.m) })
    if ring.generator == "x" and ring.offset == 1:
        names.update({ f"z{i}": (lambda i=i: commutative_z(ring, i)) for i in range(0, ring.m + 1) })
        if ring.m >= 3 and ring.m % 2 == 1:
            names["Omega"] = lambda: omega_commutative(ring)
    if ring.generator == "W" and ring.offset == 0:
        n = ring.m - 2
        names["Delta"] = lambda: ring.gen(0) * ring.gen(n + 1) - ring.gen(1) * ring.gen(n) - 1

    def embed(value: LaurentScalar):
        return ring.const(value.coefficient(0))

    return Namespace(POISSON, names, embed, rational_only=True)


def parse_expression(source: str, namespace: Namespace) -> Element:
    """ Parse and evaluate to an element of the namespace's algebra. """
    return namespace.element(parse(source, namespace.context).evaluate(namespace), 0)


def parse_scalar(source: str) -> LaurentScalar:
    """
    Parse a coefficient such as "q^-1", "1 - q" or "3/2*v".

    :raises ParseError: Raised on syntax errors or generators.
    """

    namespace = Namespace(PBW, _scalar_names(), lambda value: value)
    value = parse(source, PBW).evaluate(namespace)
    if not isinstance(value, LaurentScalar):
        raise ParseError("unknown-identifier", 0, f"'{source}' is not a scalar")
    return value
