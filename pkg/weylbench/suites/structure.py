# -*- coding: utf-8 -*-

"""
Structure suite of the presets L_n and C_n: the normal elements
z_i, their commutation with the generators, the central element
Omega and the named automorphisms.
"""

from functools import partial
from typing import List, Optional, Tuple

from weylbench.algebra.pbw import HomSpec
from weylbench.algebra.pbw import NCPoly
from weylbench.algebra.pbw import Presentation
from weylbench.algebra.pbw import apply_hom
from weylbench.algebra.pbw import commutator
from weylbench.algebra.pbw import compose_homs
from weylbench.algebra.pbw import generator_index
from weylbench.algebra.pbw import hom_defects
from weylbench.algebra.pbw import hom_order
from weylbench.algebra.pbw import iota_cyclic
from weylbench.algebra.pbw import iota_nu
from weylbench.algebra.pbw import omega
from weylbench.algebra.pbw import preset_cyclic
from weylbench.algebra.pbw import preset_linear
from weylbench.algebra.pbw import q_commutator
from weylbench.algebra.pbw import reversal
from weylbench.algebra.pbw import theta_cyclic
from weylbench.algebra.pbw import theta_linear
from weylbench.algebra.pbw import z_element
from weylbench.algebra.report import Report
from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import ONE
from weylbench.algebra.scalar import V
from weylbench.suites.runner import CheckTask
from weylbench.suites.runner import SuiteRunner
from weylbench.suites.runner import difference
from weylbench.suites.runner import predicate
from weylbench.suites.runner import run_tasks

LINEAR = "L"
CYCLIC = "C"


def structure_preset(family: str, n: int) -> Presentation:
    """
    :raises ValueError: Raised for an unknown family or a size
        outside n >= 2 (L) or odd n >= 3 (C).
    """

    if family == LINEAR:
        if n < 2:
            raise ValueError(f"Structure suite of L_n needs n >= 2, got {n}!")
        return preset_linear(n)
    if family == CYCLIC:
        return preset_cyclic(n)
    raise ValueError(f"Unknown family \"{family}\", expected L or C!")


def _parity_power(p: LaurentScalar, k: int) -> LaurentScalar:
    """ p^((-1)^k). """
    return p if k % 2 == 0 else p.inverse()


def altz_difference(P: Presentation, i: int) -> NCPoly:
    """ z_i - (x_1 theta(z_{i-1}) - theta^2(z_{i-2})). """
    return z_element(P, i) - (P.gen(1) * z_element(P, i - 1, shift=1) - z_element(P, i - 2, shift=2))


def normal_elements_rhs(P: Presentation, i: int, j: int) -> Tuple[NCPoly, str]:
    """ The rewriting of x_i z_j with z_j to the left, with its case label. """

    p = P.parameter
    x = P.gen(i)
    z = partial(z_element, P)
    if j < i - 1:
        if j % 2 == 1:
            return (z(j) * x).scale(_parity_power(p, i - 1)), "j odd, j < i-1"
        return z(j) * x, "j even, j < i-1"
    if j == i - 1:
        if i % 2 == 1:
            return z(i - 1) * x + z(i - 2).scale(p - 1), "i odd, j = i-1"
        return (z(i - 1) * x).scale(p.inverse()) + z(i - 2).scale(1 - p.inverse()), "i even, j = i-1"
    if j % 2 == 1:
        return z(j) * x, "j odd, j >= i"
    return (z(j) * x).scale(_parity_power(p, i - 1)), "j even, j >= i"


def normal_elements_difference(P: Presentation, i: int, j: int) -> NCPoly:
    rhs, _ = normal_elements_rhs(P, i, j)
    return P.gen(i) * z_element(P, j) - rhs


def adjacent_difference(P: Presentation, i: int) -> NCPoly:
    """ x_i z_{i-1} against its rewriting with z_{i-1} x_i and z_i. """

    p = P.parameter
    x = P.gen(i)
    previous, current = z_element(P, i - 1), z_element(P, i)
    if i % 2 == 1:
        rhs = (previous * x).scale(p) + current.scale(1 - p)
    else:
        rhs = previous * x + current.scale(p.inverse() - 1)
    return x * previous - rhs


def z_normal_difference(P: Presentation, i: int) -> NCPoly:
    """ z_n x_i - rho_i x_i z_n in L_n. """

    n = P.n
    rho = ONE if n % 2 == 1 else _parity_power(P.parameter, i)
    z_n, x = z_element(P, n), P.gen(i)
    return z_n * x - (x * z_n).scale(rho)


def z_twist(i: int, j: int) -> int:
    """ Exponent lambda_ij of z_i z_j = q^lambda_ij z_j z_i, i < j. """
    return 1 if i % 2 == 1 and j % 2 == 0 else 0


def z_commutation_difference(P: Presentation, i: int, j: int) -> NCPoly:
    zi, zj = z_element(P, i), z_element(P, j)
    return zi * zj - (zj * zi).scale(P.parameter ** z_twist(i, j))


def q_bracket_next_difference(P: Presentation, k: int) -> NCPoly:
    """ [x_k, x_{k+1}]_q - (1 - q). """
    p = P.parameter
    xk, xn = P.gen(k), P.gen(generator_index(P, k + 1))
    return q_commutator(P, xk, xn, p) - (1 - p)


def q_bracket_previous_difference(P: Presentation, k: int) -> NCPoly:
    """ [x_k, x_{k-1}]_q - ((q^-1 - q) x_{k-1} x_k + 1 - q^-1). """
    p = P.parameter
    xk, xp = P.gen(k), P.gen(generator_index(P, k - 1))
    return q_commutator(P, xk, xp, p) - ((xp * xk).scale(p.inverse() - p) + (1 - p.inverse()))


def hom_outcome(hom: HomSpec) -> Tuple[bool, Optional[str]]:
    defects = hom_defects(hom)
    if not defects:
        return True, None
    (i, j), value = defects[0]
    return False, f"relation ({i}, {j}) maps to {value}"


def iota_composition_outcome(P: Presentation, nu: LaurentScalar, mu: LaurentScalar) -> Tuple[bool, Optional[str]]:
    """ iota_nu after iota_mu against iota_(nu mu), on generators. """

    composite = compose_homs(iota_nu(P, nu), iota_nu(P, mu))
    expected = iota_nu(P, nu * mu)
    for idx, (left, right) in enumerate(zip(composite.images, expected.images)):
        if left != right:
            return False, f"x{idx + 1}: {left - right}"
    return True, None


def order_outcome(hom: HomSpec, expected: int) -> Tuple[bool, Optional[str]]:
    order = hom_order(hom, expected)
    return order == expected, f"order {order}"


def x_n_z_difference(P: Presentation, j: int) -> NCPoly:
    """ x_n z_j against its rewriting in C_n, 1 <= j <= n-1. """

    n, p = P.n, P.parameter
    x_n = P.gen(n)
    z_j = z_element(P, j)
    if j == n - 1:
        rhs = z_j * x_n + (z_element(P, n - 2, shift=1) - z_element(P, n - 2)).scale(1 - p)
    else:
        head = z_j * x_n
        rhs = (head.scale(p) if j % 2 == 1 else head) + z_element(P, j - 1, shift=1).scale(1 - p)
    return x_n * z_j - rhs


def omega_shift_difference(P: Presentation) -> NCPoly:
    central = omega(P)
    return apply_hom(theta_cyclic(P), central) - central


def omega_central_difference(P: Presentation, i: int) -> NCPoly:
    return commutator(P, omega(P), P.gen(i))


def w_identity_difference(P: Presentation, i: int) -> NCPoly:
    """
    q z_i theta(z_{i-2}) - z_{i-1} theta(z_{i-1}) + q^((i-1)/2) for odd i,
    z_i theta(z_{i-2}) - z_{i-1} theta(z_{i-1}) + q^((i-2)/2) for even i.
    """

    p = P.parameter
    head = z_element(P, i) * z_element(P, i - 2, shift=1)
    tail = z_element(P, i - 1) * z_element(P, i - 1, shift=1)
    if i % 2 == 1:
        return head.scale(p) - tail + p ** ((i - 1) // 2)
    return head - tail + p ** ((i - 2) // 2)


def structure_tasks(family: str, n: int, P: Optional[Presentation] = None) -> List[CheckTask]:
    """ Every check of the structure suite for the preset of given family and size. """

    if P is None:
        P = structure_preset(family, n)
    linear = family == LINEAR
    # z_1 .. z_top and x_1 .. x_top span a copy of L_top
    top = n if linear else n - 1
    tasks = [ ]

    for i in range(1, n + 1):
        tasks.append(difference(f"z{i} = x1*theta(z{i - 1}) - theta^2(z{i - 2})", "altz",
                                partial(altz_difference, P, i)))

    for i in range(1, top + 1):
        for j in range(1, top + 1):
            _, case = normal_elements_rhs(P, i, j)
            tasks.append(difference(f"x{i}*z{j}", "normal-elements",
                                    partial(normal_elements_difference, P, i, j), detail=case))

    for i in range(2, top + 1):
        tasks.append(difference(f"x{i}*z{i - 1}", "normal-elements-adjacent",
                                partial(adjacent_difference, P, i)))

    if linear:
        for i in range(1, n + 1):
            tasks.append(difference(f"z{n}*x{i} = rho{i}*x{i}*z{n}", "z-normal",
                                    partial(z_normal_difference, P, i)))

    for j in range(1, top + 1):
        for i in range(0, j):
            tasks.append(difference(f"z{i}*z{j} = q^{z_twist(i, j)}*z{j}*z{i}", "z-quasi-commute",
                                    partial(z_commutation_difference, P, i, j)))

    for k in range(1, n if linear else n + 1):
        tasks.append(difference(f"[x{k}, x{generator_index(P, k + 1)}]_q = 1 - q", "q-bracket",
                                partial(q_bracket_next_difference, P, k)))
    for k in range(2 if linear else 1, n + 1):
        previous = generator_index(P, k - 1)
        tasks.append(difference(f"[x{k}, x{previous}]_q = (q^-1 - q)*x{previous}*x{k} + 1 - q^-1", "q-bracket",
                                partial(q_bracket_previous_difference, P, k)))

    if linear:
        homs = [ iota_nu(P, V), theta_linear(n, P.parameter), reversal(P) ]
    else:
        homs = [ iota_cyclic(P), theta_cyclic(P), reversal(P) ]
    for hom in homs:
        tasks.append(predicate(f"{hom.name} respects the relations", "hom", partial(hom_outcome, hom)))

    if linear:
        nu, mu = V, LaurentScalar.v_power(2, -2)
        tasks.append(predicate(f"iota[{nu}]*iota[{mu}] = iota[{nu * mu}]", "hom-composition",
                               partial(iota_composition_outcome, P, nu, mu)))
        return tasks

    theta = theta_cyclic(P)
    tasks.append(predicate(f"theta has order {n}", "hom-order", partial(order_outcome, theta, n)))
    tasks.append(predicate(f"iota*theta has order {2 * n}", "hom-order",
                           partial(order_outcome, compose_homs(iota_cyclic(P), theta), 2 * n)))

    for j in range(1, n):
        tasks.append(difference(f"x{n}*z{j}", "x-z-cyclic", partial(x_n_z_difference, P, j)))
    tasks.append(difference("theta(Omega) = Omega", "omega-shift", partial(omega_shift_difference, P)))
    for i in range(1, n + 1):
        tasks.append(difference(f"Omega*x{i} = x{i}*Omega", "omega-central",
                                partial(omega_central_difference, P, i)))

    for i in range(1, n):
        rhs = f"-q^{(i - 1) // 2}" if i % 2 == 1 else f"-q^{(i - 2) // 2}"
        lhs = f"q*z{i}*theta(z{i - 2})" if i % 2 == 1 else f"z{i}*theta(z{i - 2})"
        tasks.append(difference(f"{lhs} - z{i - 1}*theta(z{i - 1}) = {rhs}", "w-identity",
                                partial(w_identity_difference, P, i)))
    return tasks


def suite_structure(family: str, n: int, runner: Optional[SuiteRunner] = None) -> Report:
    """
    Structure checks of L_n (n >= 2) or C_n (n odd >= 3).

    :raises ValueError: Raised for an unknown family or invalid size.
    """
    P = structure_preset(family, n)
    try:
        return run_tasks("structure", { "family": family, "n": n }, structure_tasks(family, n, P), runner)
    finally:
        P.clear_caches()
