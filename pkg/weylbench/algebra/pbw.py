# -*- coding: utf-8 -*-

"""
Rewriting kernel for quadratic algebras with relations
x_i x_j = q_ij x_j x_i + r_ij and a PBW basis of ordered
monomials x_1^a_1 ... x_n^a_n.
"""

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import ONE
from weylbench.algebra.scalar import Q
from weylbench.algebra.scalar import V
from weylbench.algebra.scalar import ZERO
from weylbench.algebra.scalar import ScalarLike
from weylbench.algebra.scalar import render_scalar
from weylbench.common.errors import NonPBW
from weylbench.common.errors import NotConnected
from weylbench.common.errors import NotSingleParameter
from weylbench.common.util import sorted_exponents
from weylbench.common.util import unit_vector
from weylbench.common.util import vector_add
from weylbench.common.util import vector_sub
from weylbench.config.static import WeylBenchConfig
from weylbench.logging.logger import profiled

Exponent = Tuple[int, ...]
Pair = Tuple[int, int]


class Presentation(object):
    """
    Quadratic algebra on generators x_1 .. x_n. Tables are
    keyed by ordered pairs (i, j) of distinct 1-based indices,
    so that x_i x_j = q[i, j] x_j x_i + r[i, j].

    :param n: Number of generators.
    :param q: Full table of the units q_ij.
    :param r: Full table of the constants r_ij.
    :param family: "L" or "C" for the presets, None otherwise.
    :param parameter: The single parameter of the presets.
    """

    def __init__(self, n: int, q: Dict[Pair, LaurentScalar],
                 r: Dict[Pair, LaurentScalar],
                 family: Optional[str] = None,
                 parameter: Optional[LaurentScalar] = None):
        if n < 1:
            raise ValueError(f"Presentation needs at least one generator, got {n}!")

        self._n = n
        self._q = { pair: LaurentScalar.coerce(value) for pair, value in q.items() }
        self._r = { pair: LaurentScalar.coerce(value) for pair, value in r.items() }
        self._family = family
        self._parameter = parameter

        for i, j in self.pairs():
            if (i, j) not in self._q:
                raise ValueError(f"Missing q_{i}{j} in the presentation!")
            self._r.setdefault((i, j), ZERO)

        self._pbw = None
        self._gen_cache = { }
        self._mono_cache = { }
        self._z_cache = { }

    @classmethod
    def from_upper(cls, n: int,
                   q: Dict[Pair, ScalarLike],
                   r: Optional[Dict[Pair, ScalarLike]] = None,
                   family: Optional[str] = None,
                   parameter: Optional[LaurentScalar] = None) -> "Presentation":
        """
        Build the full tables from the entries with i < j, using
        q_ji = q_ij^-1 and r_ji = -q_ij^-1 r_ij.

        :raises ValueError: Raised when a q_ij is missing or not a unit.
        """

        r = r or { }
        full_q = { }
        full_r = { }
        for i, j in itertools.combinations(range(1, n + 1), 2):
            if (i, j) not in q:
                raise ValueError(f"Missing q_{i}{j} in the upper table!")
            qij = LaurentScalar.coerce(q[(i, j)])
            rij = LaurentScalar.coerce(r.get((i, j), 0))
            if not qij.is_unit():
                raise ValueError(f"Entry q_{i}{j} = {qij} is not a unit!")
            full_q[(i, j)] = qij
            full_r[(i, j)] = rij
            full_q[(j, i)] = qij.inverse()
            full_r[(j, i)] = -qij.inverse() * rij

        return cls(n=n, q=full_q, r=full_r, family=family, parameter=parameter)

    @property
    def n(self) -> int:
        """ Number of generators. """
        return self._n

    @property
    def family(self) -> Optional[str]:
        """ "L", "C" or None. """
        return self._family

    @property
    def parameter(self) -> Optional[LaurentScalar]:
        """ Single parameter of the L/C presets. """
        return self._parameter

    def pairs(self) -> Iterable[Pair]:
        """ Ordered pairs of distinct generator indices. """
        return ((i, j) for i in range(1, self._n + 1)
                for j in range(1, self._n + 1) if i != j)

    def q(self, i: int, j: int) -> LaurentScalar:
        return self._q[(i, j)]

    def r(self, i: int, j: int) -> LaurentScalar:
        return self._r[(i, j)]

    def with_relation(self, i: int, j: int, q: ScalarLike, r: ScalarLike) -> "Presentation":
        """
        Copy of this presentation with x_i x_j = q x_j x_i + r,
        the reversed pair being derived from it.
        """

        q = LaurentScalar.coerce(q)
        r = LaurentScalar.coerce(r)
        if i == j or not (1 <= i <= self._n and 1 <= j <= self._n):
            raise IndexError(f"Invalid generator pair ({i}, {j})!")
        if not q.is_unit():
            raise ValueError(f"Entry q_{i}{j} = {q} is not a unit!")

        new_q = dict(self._q)
        new_r = dict(self._r)
        new_q[(i, j)] = q
        new_r[(i, j)] = r
        new_q[(j, i)] = q.inverse()
        new_r[(j, i)] = -q.inverse() * r

        return Presentation(n=self._n, q=new_q, r=new_r)

    def is_consistent(self) -> bool:
        """ Do the tables satisfy q_ji = q_ij^-1 and r_ji = -q_ij^-1 r_ij? """

        for i, j in self.pairs():
            qij = self._q[(i, j)]
            if not qij.is_unit():
                return False
            if self._q[(j, i)] != qij.inverse() or \
                    self._r[(j, i)] != -qij.inverse() * self._r[(i, j)]:
                return False
        return True

    def is_pbw(self) -> bool:
        """ Cached result of pbw_check. """
        if self._pbw is None:
            self._pbw = pbw_check(self)
        return self._pbw

    def cache_size(self) -> int:
        """ Number of memoized products and z elements. """
        return len(self._gen_cache) + len(self._mono_cache) + len(self._z_cache)

    def clear_caches(self):
        """ Drop the memoized products and z elements. """
        self._gen_cache.clear()
        self._mono_cache.clear()
        self._z_cache.clear()

    def _remember(self, cache: dict, key: tuple, value):
        # Tables are reset rather than evicted one entry at a time.
        if len(cache) >= WeylBenchConfig.PRODUCT_CACHE_LIMIT:
            cache.clear()
        cache[key] = value

    def graph(self) -> "GeneratorGraph":
        return GeneratorGraph.from_presentation(self)

    def gen(self, i: int) -> "NCPoly":
        """ Generator x_i. """
        if not 1 <= i <= self._n:
            raise IndexError(f"Generator index {i} out of range 1..{self._n}!")
        return NCPoly(self, { unit_vector(self._n, i - 1): ONE })

    def gens(self) -> List["NCPoly"]:
        return [ self.gen(i) for i in range(1, self._n + 1) ]

    def one(self) -> "NCPoly":
        return self.scalar(ONE)

    def zero(self) -> "NCPoly":
        return NCPoly(self, { })

    def scalar(self, value: ScalarLike) -> "NCPoly":
        return NCPoly(self, { (0,) * self._n: LaurentScalar.coerce(value) })

    def monomial(self, exponent: Sequence[int], coefficient: ScalarLike = 1) -> "NCPoly":
        exponent = tuple(exponent)
        if len(exponent) != self._n or any(e < 0 for e in exponent):
            raise ValueError(f"Invalid standard monomial exponent {exponent}!")
        return NCPoly(self, { exponent: LaurentScalar.coerce(coefficient) })

    def __eq__(self, other) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return self is other or (self._n == other._n and
                                 self._q == other._q and
                                 self._r == other._r)

    def __hash__(self) -> int:
        return hash(self._n)

    def __str__(self) -> str:
        name = f"{self._family}_{self._n}" if self._family else f"R_{self._n}"
        return f"Presentation {name}"

    def relations_str(self) -> List[str]:
        """ Human readable relations for i < j. """
        return [ f"x{i}*x{j} = {render_scalar(self.q(i, j))} * x{j}*x{i} + ({render_scalar(self.r(i, j))})"
                 for i, j in itertools.combinations(range(1, self._n + 1), 2) ]


class GeneratorGraph(object):
    """
    Graph on the generators with an edge {i, j} whenever
    r_ij is non-zero.
    """

    def __init__(self, n: int, edges: Iterable[Pair]):
        self._n = n
        self._edges = frozenset(frozenset(edge) for edge in edges)
        self._neighbours = { i: set() for i in range(1, n + 1) }
        for edge in self._edges:
            i, j = tuple(edge)
            self._neighbours[i].add(j)
            self._neighbours[j].add(i)

    @classmethod
    def from_presentation(cls, presentation: Presentation) -> "GeneratorGraph":
        return cls(presentation.n, [
            (i, j) for i, j in presentation.pairs()
            if i < j and not presentation.r(i, j).is_zero()
        ])

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset:
        return self._edges

    def neighbours(self, i: int) -> List[int]:
        return sorted(self._neighbours[i])

    def degree(self, i: int) -> int:
        return len(self._neighbours[i])

    def max_degree(self) -> int:
        return max((self.degree(i) for i in range(1, self._n + 1)), default=0)

    def is_connected(self) -> bool:
        seen = { 1 }
        stack = [ 1 ]
        while stack:
            for j in self._neighbours[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self._n

    def is_cycle(self) -> bool:
        return self._n >= 3 and self.is_connected() and \
            all(self.degree(i) == 2 for i in range(1, self._n + 1))

    def is_path(self) -> bool:
        return self.is_connected() and len(self._edges) == self._n - 1 and \
            self.max_degree() <= 2


class NCPoly(object):
    """
    Element of a PBW algebra in normal form: a table from
    exponent vectors of standard monomials to coefficients.

    :param presentation: The algebra this element lives in.
    :param terms: Exponent vector to coefficient mapping.
    """

    __slots__ = ("_presentation", "_terms")

    def __init__(self, presentation: Presentation,
                 terms: Optional[Dict[Exponent, LaurentScalar]] = None):
        self._presentation = presentation
        self._terms = { tuple(a): c for a, c in (terms or { }).items() if not c.is_zero() }

    @property
    def presentation(self) -> Presentation:
        return self._presentation

    @property
    def terms(self) -> Dict[Exponent, LaurentScalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(a) for a in self._terms), default=-1)

    def coefficient(self, exponent: Sequence[int]) -> LaurentScalar:
        return self._terms.get(tuple(exponent), ZERO)

    def _check_same(self, other: "NCPoly"):
        if self._presentation is not other._presentation and \
                self._presentation != other._presentation:
            raise ValueError("Operands live in different algebras!")

    def _coerce(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check_same(other)
            return other
        return self._presentation.scalar(other)

    def __add__(self, other) -> "NCPoly":
        other = self._coerce(other)
        result = dict(self._terms)
        for a, c in other._terms.items():
            result[a] = result.get(a, ZERO) + c
        return NCPoly(self._presentation, result)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly(self._presentation, { a: -c for a, c in self._terms.items() })

    def __sub__(self, other) -> "NCPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NCPoly":
        return self._coerce(other) - self

    def scale(self, factor: ScalarLike) -> "NCPoly":
        factor = LaurentScalar.coerce(factor)
        return NCPoly(self._presentation, { a: c * factor for a, c in self._terms.items() })

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check_same(other)
            return multiply(self._presentation, self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "NCPoly":
        # Scalars are central.
        return self.scale(other)

    def __pow__(self, power: int) -> "NCPoly":
        if power < 0:
            raise ValueError("Negative powers do not exist in a PBW algebra!")
        result = self._presentation.one()
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentScalar)):
            other = self._presentation.scalar(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"NCPoly({self})"

    def __str__(self) -> str:
        return render_terms(self._terms, generator="x", offset=1)


def render_monomial(exponent: Exponent, generator: str, offset: int) -> str:
    """ Render x1^2*x3 style monomials, empty for the unit monomial. """

    factors = [ ]
    for idx, e in enumerate(exponent):
        if e == 0:
            continue
        factors.append(f"{generator}{idx + offset}" + (f"^{e}" if e != 1 else ""))
    return "*".join(factors)


def render_terms(terms: Dict[Exponent, LaurentScalar], generator: str, offset: int) -> str:
    """
    Render a coefficient table, largest monomials first. Multi-term
    coefficients are parenthesized, except on the constant term.
    """

    if not terms:
        return "0"

    pieces = [ ]
    for exponent in sorted_exponents(terms.keys()):
        coefficient = terms[exponent]
        monomial = render_monomial(exponent, generator, offset)
        if not monomial:
            text = render_scalar(coefficient)
        elif coefficient.is_unit():
            value, power = coefficient.unit_parts()
            magnitude = render_scalar(LaurentScalar.v_power(power, abs(value)))
            body = monomial if magnitude == "1" else f"{magnitude}*{monomial}"
            text = f"-{body}" if value < 0 else body
        else:
            text = f"({render_scalar(coefficient)})*{monomial}"
        pieces.append(text)

    result = pieces[0]
    for text in pieces[1:]:
        result += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
    return result


def _mono_times_gen(presentation: Presentation, a: Exponent, j: int) -> Tuple[Tuple[Exponent, LaurentScalar], ...]:
    """
    Normal form of x^a * x_j. With k the largest generator in a,
    x^a x_j = q_kj (x^(a - e_k) x_j) x_k + r_kj x^(a - e_k), and
    every term of the bracketed product only uses generators <= k.
    """

    key = (a, j)
    cached = presentation._gen_cache.get(key)
    if cached is not None:
        return cached

    n = presentation.n
    k = max((idx + 1 for idx in range(n) if a[idx] > 0), default=0)
    if k <= j:
        result = ((vector_add(a, unit_vector(n, j - 1)), ONE),)
    else:
        e_k = unit_vector(n, k - 1)
        rest = vector_sub(a, e_k)
        qkj = presentation.q(k, j)
        rkj = presentation.r(k, j)
        terms = { }
        for b, c in _mono_times_gen(presentation, rest, j):
            key_b = vector_add(b, e_k)
            terms[key_b] = terms.get(key_b, ZERO) + qkj * c
        if not rkj.is_zero():
            terms[rest] = terms.get(rest, ZERO) + rkj
        result = tuple((b, c) for b, c in terms.items() if not c.is_zero())

    presentation._remember(presentation._gen_cache, key, result)
    return result


def _mono_times_mono(presentation: Presentation, a: Exponent, b: Exponent) -> Tuple[Tuple[Exponent, LaurentScalar], ...]:
    """ Normal form of x^a * x^b, multiplying by the generators of b in ascending order. """

    key = (a, b)
    cached = presentation._mono_cache.get(key)
    if cached is not None:
        return cached

    current = { a: ONE }
    for idx, count in enumerate(b):
        for _ in range(count):
            step = { }
            for e, c in current.items():
                for f, d in _mono_times_gen(presentation, e, idx + 1):
                    step[f] = step.get(f, ZERO) + c * d
            current = { e: c for e, c in step.items() if not c.is_zero() }

    result = tuple(current.items())
    presentation._remember(presentation._mono_cache, key, result)
    return result


@profiled("multiply")
def multiply(presentation: Presentation, f: NCPoly, g: NCPoly) -> NCPoly:
    """
    PBW normal form of the product f * g.

    :raises NonPBW: Raised when the presentation fails pbw_check,
        since normal forms would then depend on the rewriting order.
    """

    if not presentation.is_pbw():
        raise NonPBW(f"{presentation} does not have a PBW basis, normal forms are not canonical!")

    result = { }
    for a, c in f.items():
        for b, d in g.items():
            cd = c * d
            for e, coefficient in _mono_times_mono(presentation, a, b):
                result[e] = result.get(e, ZERO) + cd * coefficient
    return NCPoly(presentation, result)


def normal_form(presentation: Presentation, word: Sequence[int], coefficient: ScalarLike = 1) -> NCPoly:
    """ Normal form of the word x_w1 x_w2 ... in the generators. """

    result = presentation.scalar(coefficient)
    for i in word:
        result = result * presentation.gen(i)
    return result


def pbw_check(presentation: Presentation) -> bool:
    """
    PBW criterion: for all distinct i, j, k with r_ij != 0
    the units satisfy q_ik = q_kj.
    """

    n = presentation.n
    for i, j in presentation.pairs():
        if presentation.r(i, j).is_zero():
            continue
        for k in range(1, n + 1):
            if k in (i, j):
                continue
            if presentation.q(i, k) != presentation.q(k, j):
                return False
    return True


Word = Tuple[int, ...]


def free_reduce(presentation: Presentation, element: Dict[Word, LaurentScalar]) -> Dict[Word, LaurentScalar]:
    """
    Reduce a combination of free words to ordered words, always
    rewriting the leftmost descent x_a x_b (a > b) as q_ab x_b x_a + r_ab.
    """

    pending = dict(element)
    reduced = { }
    while pending:
        word, coefficient = pending.popitem()
        if coefficient.is_zero():
            continue
        position = next((p for p in range(len(word) - 1) if word[p] > word[p + 1]), None)
        if position is None:
            reduced[word] = reduced.get(word, ZERO) + coefficient
            continue
        a, b = word[position], word[position + 1]
        swapped = word[:position] + (b, a) + word[position + 2:]
        dropped = word[:position] + word[position + 2:]
        pending[swapped] = pending.get(swapped, ZERO) + presentation.q(a, b) * coefficient
        rab = presentation.r(a, b)
        if not rab.is_zero():
            pending[dropped] = pending.get(dropped, ZERO) + rab * coefficient
    return { w: c for w, c in reduced.items() if not c.is_zero() }


def _rewrite_at(presentation: Presentation, word: Word, position: int) -> Dict[Word, LaurentScalar]:
    """ Apply the relation to the pair at the given position once. """

    a, b = word[position], word[position + 1]
    result = { word[:position] + (b, a) + word[position + 2:]: presentation.q(a, b) }
    rab = presentation.r(a, b)
    if not rab.is_zero():
        result[word[:position] + word[position + 2:]] = rab
    return result


def diamond_oracle(presentation: Presentation) -> bool:
    """
    Resolve every overlap x_w x_v x_u (u < v < w) starting with
    either of the two possible rewrites and compare the results.
    """

    n = presentation.n
    for u, v, w in itertools.combinations(range(1, n + 1), 3):
        word = (w, v, u)
        left = free_reduce(presentation, _rewrite_at(presentation, word, 0))
        right = free_reduce(presentation, _rewrite_at(presentation, word, 1))
        if left != right:
            return False
    return True


def single_parameter(presentation: Presentation) -> LaurentScalar:
    """
    The parameter p with {q_ij} = {p, p^-1}. Among p and p^-1
    the one with positive v-degree is returned, or the one with
    absolute value above one for constants.

    :raises NotConnected: Raised for a disconnected generator graph.
    :raises NotSingleParameter: Raised when the q-table has
        another shape.
    """

    if not presentation.graph().is_connected():
        raise NotConnected(f"Generator graph of {presentation} is disconnected!")
    if presentation.n < 2:
        raise NotSingleParameter("A single generator has no q-table!")

    values = { presentation.q(i, j) for i, j in presentation.pairs() }
    if len(values) > 2 or any(not value.is_unit() for value in values):
        raise NotSingleParameter(f"q-table of {presentation} takes values {sorted(map(str, values))}!")

    p = next(iter(values))
    if len(values) == 2 and p.inverse() not in values:
        raise NotSingleParameter(f"q-table values {sorted(map(str, values))} are not mutually inverse!")

    coefficient, exponent = p.unit_parts()
    if exponent < 0 or (exponent == 0 and abs(coefficient) < 1):
        p = p.inverse()
    return p


def preset_linear(n: int, parameter: ScalarLike = Q) -> Presentation:
    """
    L_n: x_i x_{i+1} - p x_{i+1} x_i = 1 - p and
    x_i x_j = p^((-1)^(j-i+1)) x_j x_i for j > i + 1.
    """

    if n < 1:
        raise ValueError(f"L_n needs n >= 1, got {n}!")

    p = LaurentScalar.coerce(parameter)
    q = { }
    r = { }
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if j == i + 1:
            q[(i, j)] = p
            r[(i, j)] = 1 - p
        else:
            q[(i, j)] = p if (j - i) % 2 == 1 else p.inverse()
    return Presentation.from_upper(n, q, r, family="L", parameter=p)


def preset_cyclic(n: int, parameter: ScalarLike = Q) -> Presentation:
    """
    C_n for odd n: the relations of L_n together with
    x_n x_1 - p x_1 x_n = 1 - p.
    """

    if n < 3 or n % 2 == 0:
        raise ValueError(f"C_n is defined for odd n >= 3, got {n}!")

    linear = preset_linear(n, parameter)
    p = linear.parameter
    wrapped = linear.with_relation(n, 1, p, 1 - p)
    return Presentation(n, wrapped._q, wrapped._r, family="C", parameter=p)


def _require_family(presentation: Presentation, *families: str):
    if presentation.family not in families:
        raise ValueError(f"Operation requires a presentation of family "
                         f"{'/'.join(families)}, got {presentation}!")


def generator_index(presentation: Presentation, k: int) -> int:
    """
    Resolve a generator index: wraps modulo n for C_n, must
    lie in 1..n otherwise.
    """

    if presentation.family == "C":
        return (k - 1) % presentation.n + 1
    if not 1 <= k <= presentation.n:
        raise IndexError(f"Generator index {k} out of range 1..{presentation.n}!")
    return k


def z_element(presentation: Presentation, i: int, shift: int = 0) -> NCPoly:
    """
    The element theta^shift(z_i), where z_{-1} = 0, z_0 = 1 and
    z_i = z_{i-1} x_i - z_{i-2}.

    :param presentation: An L_n or C_n preset.
    :param i: Index -1 <= i <= n.
    :param shift: Apply the shift x_k -> x_{k+1} this many times.
        Indices wrap for C_n and must stay within n for L_n.

    :raises IndexError: Raised for indices out of range.
    """

    _require_family(presentation, "L", "C")
    if not -1 <= i <= presentation.n:
        raise IndexError(f"Index of z_{i} out of range -1..{presentation.n}!")
    if presentation.family == "C":
        shift %= presentation.n

    key = (i, shift)
    cached = presentation._z_cache.get(key)
    if cached is not None:
        return cached

    if i == -1:
        result = presentation.zero()
    elif i == 0:
        result = presentation.one()
    else:
        generator = presentation.gen(generator_index(presentation, shift + i))
        result = z_element(presentation, i - 1, shift) * generator - \
            z_element(presentation, i - 2, shift)

    presentation._remember(presentation._z_cache, key, result)
    return result


def omega(presentation: Union[int, Presentation]) -> NCPoly:
    """
    Central element z_{n-1} x_n - z_{n-2} - p theta(z_{n-2}) of C_n.
    Accepts the presentation or its odd size.
    """

    if isinstance(presentation, int):
        presentation = preset_cyclic(presentation)
    _require_family(presentation, "C")
    n = presentation.n
    p = presentation.parameter
    return z_element(presentation, n - 1) * presentation.gen(n) - \
        z_element(presentation, n - 2) - \
        z_element(presentation, n - 2, shift=1).scale(p)


def commutator(presentation: Presentation, f: NCPoly, g: NCPoly) -> NCPoly:
    """ fg - gf in normal form. """
    return multiply(presentation, f, g) - multiply(presentation, g, f)


def q_commutator(presentation: Presentation, f: NCPoly, g: NCPoly, t: ScalarLike) -> NCPoly:
    """ The twisted bracket fg - t gf in normal form. """
    return multiply(presentation, f, g) - multiply(presentation, g, f).scale(t)


class HomSpec(object):
    """
    Algebra map given by the images of the source generators.

    :param source: Source presentation.
    :param target: Target presentation.
    :param images: Image of every source generator, in the target.
    :param name: Label used in reports.
    """

    def __init__(self, source: Presentation, target: Presentation,
                 images: Sequence[NCPoly], name: str = "hom"):
        if len(images) != source.n:
            raise ValueError(f"Homomorphism needs {source.n} images, got {len(images)}!")
        for image in images:
            if image.presentation is not target and image.presentation != target:
                raise ValueError("Images must live in the target algebra!")
        self._source = source
        self._target = target
        self._images = tuple(images)
        self._name = name

    @property
    def source(self) -> Presentation:
        return self._source

    @property
    def target(self) -> Presentation:
        return self._target

    @property
    def images(self) -> Tuple[NCPoly, ...]:
        return self._images

    @property
    def name(self) -> str:
        return self._name

    def __str__(self) -> str:
        return f"{self._name}: " + ", ".join(f"x{i + 1} -> {image}" for i, image in enumerate(self._images))


def apply_hom(hom: HomSpec, f: NCPoly) -> NCPoly:
    """ Substitute the images into f and normalize in the target. """

    target = hom.target
    result = target.zero()
    for a, c in f.items():
        term = target.scalar(c)
        for idx, count in enumerate(a):
            for _ in range(count):
                term = term * hom.images[idx]
        result = result + term
    return result


def hom_defects(hom: HomSpec) -> List[Tuple[Pair, NCPoly]]:
    """
    Images of "LHS - RHS" for every source relation with
    i < j which do not vanish in the target.
    """

    source = hom.source
    defects = [ ]
    for i, j in itertools.combinations(range(1, source.n + 1), 2):
        xi, xj = hom.images[i - 1], hom.images[j - 1]
        difference = xi * xj - (xj * xi).scale(source.q(i, j)) - source.r(i, j)
        if not difference.is_zero():
            defects.append(((i, j), difference))
    return defects


def check_hom(hom: HomSpec) -> bool:
    """ Does the map respect every source relation? """
    return not hom_defects(hom)


def compose_homs(outer: HomSpec, inner: HomSpec) -> HomSpec:
    """ The map outer after inner. """

    if inner.target != outer.source:
        raise ValueError("Target of the inner map must be the source of the outer map!")
    return HomSpec(inner.source, outer.target,
                   [ apply_hom(outer, image) for image in inner.images ],
                   name=f"{outer.name}*{inner.name}")


def hom_power(hom: HomSpec, k: int) -> HomSpec:
    """ k-fold composite of an endomorphism, identity for k = 0. """

    if hom.source != hom.target:
        raise ValueError("Only endomorphisms have powers!")
    result = identity_hom(hom.source)
    for _ in range(k):
        result = compose_homs(hom, result)
    return HomSpec(hom.source, hom.target, result.images, name=f"{hom.name}^{k}")


def identity_hom(presentation: Presentation) -> HomSpec:
    return HomSpec(presentation, presentation, presentation.gens(), name="id")


def is_identity(hom: HomSpec) -> bool:
    return hom.source == hom.target and \
        all(image == gen for image, gen in zip(hom.images, hom.source.gens()))


def hom_order(hom: HomSpec, limit: int) -> Optional[int]:
    """ Smallest k in 1..limit with hom^k the identity on generators. """

    power = hom
    for k in range(1, limit + 1):
        if is_identity(power):
            return k
        power = compose_homs(hom, power)
    return None


def iota_nu(presentation: Presentation, nu: ScalarLike = V) -> HomSpec:
    """ x_i -> nu^((-1)^i) x_i on L_n, nu a unit. """

    _require_family(presentation, "L")
    nu = LaurentScalar.coerce(nu)
    if not nu.is_unit():
        raise ValueError(f"Scaling {nu} is not a unit!")
    images = [ presentation.gen(i).scale(nu if i % 2 == 0 else nu.inverse())
               for i in range(1, presentation.n + 1) ]
    return HomSpec(presentation, presentation, images, name=f"iota[{nu}]")


def iota_cyclic(presentation: Presentation) -> HomSpec:
    """ x_i -> -x_i on C_n. """
    _require_family(presentation, "C")
    return HomSpec(presentation, presentation, [ -g for g in presentation.gens() ], name="iota")


def theta_linear(n: int, parameter: ScalarLike = Q) -> HomSpec:
    """ x_i -> x_{i+1} from L_{n-1} into L_n. """

    if n < 2:
        raise ValueError(f"Shift into L_n needs n >= 2, got {n}!")
    source = preset_linear(n - 1, parameter)
    target = preset_linear(n, parameter)
    return HomSpec(source, target, [ target.gen(i + 1) for i in range(1, n) ], name="theta")


def theta_cyclic(presentation: Presentation) -> HomSpec:
    """ Cyclic shift x_i -> x_{i+1}, x_n -> x_1 of C_n. """
    _require_family(presentation, "C")
    n = presentation.n
    return HomSpec(presentation, presentation,
                   [ presentation.gen(i % n + 1) for i in range(1, n + 1) ], name="theta")


def reversal(presentation: Presentation) -> HomSpec:
    """ x_i -> x_{n-i+1} into the preset of the same family with parameter p^-1. """

    _require_family(presentation, "L", "C")
    n = presentation.n
    inverse = presentation.parameter.inverse()
    target = preset_linear(n, inverse) if presentation.family == "L" else preset_cyclic(n, inverse)
    return HomSpec(presentation, target,
                   [ target.gen(n - i + 1) for i in range(1, n + 1) ], name="reversal")
