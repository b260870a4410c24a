# -*- coding: utf-8 -*-

"""
Constructive classification of connected quantized Weyl
algebras: every such presentation is a relabeled and rescaled
L_n or C_n.
"""

from typing import List, Optional, Sequence, Tuple

from weylbench.algebra.pbw import HomSpec
from weylbench.algebra.pbw import Presentation
from weylbench.algebra.pbw import preset_cyclic
from weylbench.algebra.pbw import preset_linear
from weylbench.algebra.pbw import single_parameter
from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import ONE
from weylbench.algebra.scalar import exact_divide
from weylbench.algebra.scalar import rational_sqrt
from weylbench.common.errors import DegreeExceeded
from weylbench.common.errors import NonPBW
from weylbench.common.errors import NotConnected
from weylbench.common.errors import NotDivisible
from weylbench.common.errors import NotRescalable

LINEAR = "Linear"
CYCLIC = "Cyclic"


def relabel(presentation: Presentation, order: Sequence[int],
            rescale: Sequence[LaurentScalar]) -> Presentation:
    """
    Presentation of the generators u_i = mu_i x_{order[i]}: the
    q-table is permuted and r_ij picks up the factor mu_i mu_j.
    """

    n = presentation.n
    if sorted(order) != list(range(1, n + 1)) or len(rescale) != n:
        raise ValueError(f"Order {tuple(order)} is not a permutation of 1..{n}!")

    q = { }
    r = { }
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            yi, yj = order[i - 1], order[j - 1]
            q[(i, j)] = presentation.q(yi, yj)
            r[(i, j)] = rescale[i - 1] * rescale[j - 1] * presentation.r(yi, yj)
    return Presentation(n, q, r)


class ClassificationResult(object):
    """
    Change of generators x'_i = rescale[i] * x_{order[i]} bringing
    a presentation to L_n or C_n.

    :param shape: LINEAR or CYCLIC.
    :param order: Original generator behind every new generator.
    :param rescale: Units mu_i.
    :param parameter: Single parameter p of the target preset.
    :param cyclic_obstruction: The unit lambda when a square root
        of lambda^-1 is needed but does not exist in Q[v, v^-1].
    """

    def __init__(self, shape: str, order: Sequence[int],
                 rescale: Sequence[LaurentScalar], parameter: LaurentScalar,
                 cyclic_obstruction: Optional[LaurentScalar] = None):
        self._shape = shape
        self._order = tuple(order)
        self._rescale = tuple(rescale)
        self._parameter = parameter
        self._cyclic_obstruction = cyclic_obstruction

    @property
    def shape(self) -> str:
        return self._shape

    @property
    def order(self) -> Tuple[int, ...]:
        return self._order

    @property
    def rescale(self) -> Tuple[LaurentScalar, ...]:
        return self._rescale

    @property
    def parameter(self) -> LaurentScalar:
        return self._parameter

    @property
    def cyclic_obstruction(self) -> Optional[LaurentScalar]:
        return self._cyclic_obstruction

    def target(self) -> Presentation:
        """ The preset this result maps onto. """
        n = len(self._order)
        if self._shape == LINEAR:
            return preset_linear(n, self._parameter)
        return preset_cyclic(n, self._parameter)

    def apply(self, presentation: Presentation) -> Presentation:
        """ Relations satisfied by the new generators. """
        return relabel(presentation, self._order, self._rescale)

    def as_hom(self, presentation: Presentation) -> HomSpec:
        """ The map from the preset sending x_i to mu_i x_{order[i]}. """
        return HomSpec(self.target(), presentation,
                       [ presentation.gen(y).scale(mu) for y, mu in zip(self._order, self._rescale) ],
                       name="classification")

    def to_dict(self) -> dict:
        return {
            "shape": self._shape,
            "order": list(self._order),
            "rescale": [ mu.to_json() for mu in self._rescale ],
            "parameter": self._parameter.to_json(),
            "cyclic_obstruction": None if self._cyclic_obstruction is None
            else self._cyclic_obstruction.to_json(),
        }

    def __str__(self) -> str:
        lines = [ f"Shape: {self._shape}, parameter {self._parameter}" ]
        lines += [ f"\tx'{i + 1} = ({mu}) * x{y}" for i, (y, mu) in enumerate(zip(self._order, self._rescale)) ]
        if self._cyclic_obstruction is not None:
            lines.append(f"\tsquare root of ({self._cyclic_obstruction})^-1 required")
        return "\n".join(lines)


def _unit_sqrt(value: LaurentScalar) -> Optional[LaurentScalar]:
    """ Square root of a unit c v^k, needs k even and c a rational square. """

    if not value.is_unit():
        return None
    coefficient, exponent = value.unit_parts()
    root = rational_sqrt(coefficient)
    if exponent % 2 != 0 or root is None:
        return None
    return LaurentScalar.v_power(exponent // 2, root)


def _unit_ratio(f: LaurentScalar, g: LaurentScalar, pair: Tuple[int, int]) -> LaurentScalar:
    try:
        ratio = exact_divide(f, g)
    except NotDivisible:
        ratio = None
    if ratio is None or not ratio.is_unit():
        raise NotRescalable(f"Relation constant r{pair} is not a unit multiple of 1 - p!")
    return ratio


def _spanning_order(presentation: Presentation, cyclic: bool) -> List[int]:
    """
    Walk the path or cycle from its smallest endpoint (smallest
    vertex for cycles), always stepping to the smallest unvisited
    neighbour.

    This is the smallest-index breadth-first traversal restricted to
    one branch. On a path started at an endpoint both orders agree.
    On a cycle a plain breadth-first order alternates between the
    two sides of the start and is not a spanning path, so only the
    smaller neighbour of the start is followed.
    """

    graph = presentation.graph()
    n = presentation.n
    if cyclic:
        start = 1
    else:
        start = min(i for i in range(1, n + 1) if graph.degree(i) <= 1)

    order = [ start ]
    while len(order) < n:
        unvisited = [ j for j in graph.neighbours(order[-1]) if j not in order ]
        if not unvisited:
            raise NotConnected(f"Generator graph of {presentation} is not a path or cycle!")
        order.append(min(unvisited))
    return order


def classify(presentation: Presentation) -> ClassificationResult:
    """
    Bring a connected quantized Weyl algebra to L_n or C_n.

    :raises NonPBW: Raised when the presentation has no PBW basis.
    :raises NotConnected: Raised for a disconnected generator graph.
    :raises DegreeExceeded: Raised when a generator has more than two
        neighbours.
    :raises NotSingleParameter: Raised by the parameter extraction.
    :raises NotRescalable: Raised when some r_ij along the path is not
        a unit multiple of 1 - p, so no rescaling by units of
        Q[v, v^-1] reaches the preset.
    """

    n = presentation.n
    if n < 2:
        raise ValueError("Classification needs at least two generators!")
    if not presentation.is_pbw():
        raise NonPBW(f"{presentation} does not have a PBW basis!")

    graph = presentation.graph()
    if not graph.is_connected():
        raise NotConnected(f"Generator graph of {presentation} is disconnected!")
    if graph.max_degree() > 2:
        raise DegreeExceeded(f"Generator graph of {presentation} has a vertex of degree {graph.max_degree()}!")

    p = single_parameter(presentation)
    coefficient, exponent = p.unit_parts()
    if exponent == 0 and abs(coefficient) == 1:
        raise ValueError(f"Parameter {p} must not be +-1!")

    cyclic = graph.is_cycle()
    if cyclic and n % 2 == 0:
        raise NonPBW(f"Generator graph of {presentation} is an even cycle!")

    order = _spanning_order(presentation, cyclic)
    if presentation.q(order[0], order[1]) != p:
        order = [ order[0] ] + order[:0:-1] if cyclic else order[::-1]

    one_minus_p = ONE - p
    rescale = [ ONE ]
    for i in range(n - 1):
        r = presentation.r(order[i], order[i + 1])
        rescale.append(_unit_ratio(one_minus_p, rescale[i] * r, (order[i], order[i + 1])))

    if not cyclic:
        return ClassificationResult(LINEAR, order, rescale, p)

    wrap = rescale[-1] * rescale[0] * presentation.r(order[-1], order[0])
    lam = _unit_ratio(wrap, one_minus_p, (order[-1], order[0]))
    rho = _unit_sqrt(lam.inverse()) if lam.is_unit() else None
    if rho is None:
        return ClassificationResult(CYCLIC, order, rescale, p, cyclic_obstruction=lam)

    rescale = [ mu * (rho if i % 2 == 0 else rho.inverse()) for i, mu in enumerate(rescale) ]
    return ClassificationResult(CYCLIC, order, rescale, p)
