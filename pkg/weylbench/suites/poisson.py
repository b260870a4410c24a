# -*- coding: utf-8 -*-

"""
Poisson suite: the brackets of z_j in F_n^L and F_n^C, the central
element Omega, the exceptional Poisson primes, the commutative
cluster variables of P with their brackets in R, and the brackets
on D and E together with the central element Delta.
"""

import itertools
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from weylbench.algebra.pbw import preset_cyclic
from weylbench.algebra.pbw import preset_linear
from weylbench.algebra.poisson import BracketTable
from weylbench.algebra.poisson import CPoly
from weylbench.algebra.poisson import CRing
from weylbench.algebra.poisson import bracket
from weylbench.algebra.poisson import cdivide
from weylbench.algebra.poisson import commutative_w
from weylbench.algebra.poisson import commutative_x
from weylbench.algebra.poisson import commutative_z
from weylbench.algebra.poisson import divided_commutator
from weylbench.algebra.poisson import jacobi_sum
from weylbench.algebra.poisson import kernel_matches_oracle
from weylbench.algebra.poisson import lambda_kernel
from weylbench.algebra.poisson import omega_commutative
from weylbench.algebra.poisson import parity_skew
from weylbench.algebra.poisson import preset_D
from weylbench.algebra.poisson import preset_E
from weylbench.algebra.poisson import preset_FC
from weylbench.algebra.poisson import preset_FL
from weylbench.algebra.poisson import preset_R
from weylbench.algebra.poisson import principal_membership
from weylbench.algebra.poisson import principal_membership_oracle
from weylbench.algebra.poisson import semiclassical_limit
from weylbench.algebra.poisson import specialize_nc
from weylbench.algebra.poisson import theta
from weylbench.algebra.qtorus import quasi_commutation_skew
from weylbench.algebra.report import Report
from weylbench.common.util import unit_vector
from weylbench.config import WeylBenchConfig
from weylbench.suites.embedding import random_exponent_pairs
from weylbench.suites.runner import CheckTask
from weylbench.suites.runner import SuiteRunner
from weylbench.suites.runner import candidates
from weylbench.suites.runner import difference
from weylbench.suites.runner import predicate
from weylbench.suites.runner import run_tasks

ODD_IDEAL_CONSTANTS = (0, 1, -2)
EVEN_IDEAL_CONSTANTS = (1, -2)
EXCEPTIONAL_CONSTANTS = (1, -1)


def parity_sign(k: int) -> int:
    """ (-1)^k. """
    return 1 if k % 2 == 0 else -1


# F_n^L.

def x_z_expected(ring: CRing, i: int, j: int) -> CPoly:
    """ {x_i, z_j} in F_n^L, case by case in the position of j against i. """

    x, z = ring.gen(i), commutative_z(ring, j)
    if j < i - 1:
        return (x * z).scale(parity_sign(i + 1)) if j % 2 == 1 else ring.zero()
    if j == i - 1:
        previous = commutative_z(ring, i - 2)
        return previous - commutative_z(ring, i - 1) * x if j % 2 == 1 else previous
    return ring.zero() if j % 2 == 1 else (x * z).scale(parity_sign(i - 1))


def x_z_difference(table: BracketTable, i: int, j: int) -> CPoly:
    ring = table.ring
    return bracket(table, ring.gen(i), commutative_z(ring, j)) - x_z_expected(ring, i, j)


def z_expansion_difference(ring: CRing, i: int) -> CPoly:
    """ z_i - (x_1 theta(z_(i-1)) - theta^2(z_(i-2))). """
    return commutative_z(ring, i) - (ring.gen(1) * commutative_z(ring, i - 1, shift=1) -
                                     commutative_z(ring, i - 2, shift=2))


def z_z_difference(table: BracketTable, i: int, j: int) -> CPoly:
    ring = table.ring
    zi, zj = commutative_z(ring, i), commutative_z(ring, j)
    expected = zi * zj if j % 2 == 0 and i % 2 == 1 else ring.zero()
    return bracket(table, zi, zj) - expected


def ideal_outcome(table: BracketTable, i: int, ideals: Sequence[Tuple[int, Fraction]],
                  j: int) -> Tuple[bool, Optional[str]]:
    """ Is {x_i, z_j} in one of the principal ideals (z_k - lam)? """
    value = bracket(table, table.ring.gen(i), commutative_z(table.ring, j))
    if any(principal_membership(value, k, lam) for k, lam in ideals):
        return True, None
    return False, str(value)


# F_n^C.

def theta_z(ring: CRing, i: int, times: int = 1) -> CPoly:
    """ theta^times(z_i) in F_n^C. """
    return commutative_z(ring, i, shift=times, cyclic=True)


def x_n_z_difference(table: BracketTable, j: int) -> CPoly:
    """ {x_n, z_j} against z_j x_n - theta(z_(j-1)) for odd j, -theta(z_(j-1)) for even j. """

    ring = table.ring
    n = ring.m
    x, z = ring.gen(n), commutative_z(ring, j)
    expected = -theta_z(ring, j - 1)
    if j % 2 == 1:
        expected = expected + z * x
    return bracket(table, x, z) - expected


def x_n_z_last_difference(table: BracketTable) -> CPoly:
    ring = table.ring
    n = ring.m
    return bracket(table, ring.gen(n), commutative_z(ring, n - 1)) - \
        (commutative_z(ring, n - 2) - theta_z(ring, n - 2))


def omega_theta_difference(ring: CRing) -> CPoly:
    omega = omega_commutative(ring)
    return theta(omega) - omega


def omega_central_difference(table: BracketTable, i: int) -> CPoly:
    return bracket(table, table.ring.gen(i), omega_commutative(table.ring))


def x1_theta_z_differences(table: BracketTable) -> Tuple[CPoly, CPoly]:
    """ Both right hand sides of {x_1, theta(z_(n-3))}. """

    ring = table.ring
    n = ring.m
    value = bracket(table, ring.gen(1), theta_z(ring, n - 3))
    first = value + theta_z(ring, n - 4, times=2)
    second = value - (commutative_z(ring, n - 2) - ring.gen(1) * theta_z(ring, n - 3))
    return first, second


def x1_theta_z_difference(table: BracketTable, which: int) -> CPoly:
    return x1_theta_z_differences(table)[which]


def x_theta_z_difference(table: BracketTable, i: int) -> CPoly:
    ring = table.ring
    x, t = ring.gen(i), theta_z(ring, ring.m - 3)
    return bracket(table, x, t) - (x * t).scale(parity_sign(i))


def z_theta_z_difference(table: BracketTable, i: int) -> CPoly:
    """ {z_i, theta(z_(n-3))} for 0 <= i <= n - 3. """

    ring = table.ring
    n = ring.m
    z, t = commutative_z(ring, i), theta_z(ring, n - 3)
    expected = -theta_z(ring, n - i - 3, times=i + 1)
    if i % 2 == 0:
        expected = expected + z * t
    return bracket(table, z, t) - expected


def z_theta_z_last_difference(table: BracketTable) -> CPoly:
    ring = table.ring
    z, t = commutative_z(ring, ring.m - 3), theta_z(ring, ring.m - 3)
    return bracket(table, z, t) - (z * t - 1)


class Exceptional(object):
    """
    The map tau: F_n -> F_(n-2) fixing x_1 .. x_(n-2) with
    x_(n-1) -> lam z_(n-3) and x_n -> lam theta(z_(n-3)), whose
    composite with the quotient by z_(n-2) - lam is Poisson.

    :param source: The bracket of F_n^C.
    :param lam: 1 or -1.
    """

    def __init__(self, source: BracketTable, lam: int):
        n = source.m
        self.source = source
        self.target = preset_FL(n - 2)
        self.lam = lam
        ring = self.target.ring
        self.images = [ ring.gen(i) for i in range(1, n - 1) ] + [
            commutative_z(ring, n - 3).scale(lam),
            commutative_z(ring, n - 3, shift=1).scale(lam),
        ]

    @property
    def k(self) -> int:
        """ Index of z_k - lam generating the ideal in F_(n-2). """
        return self.source.m - 2

    def tau(self, f: CPoly) -> CPoly:
        return f.substitute(self.images, self.target.ring)

    def defect(self, i: int, j: int) -> CPoly:
        """ tau({x_i, x_j}) - {tau(x_i), tau(x_j)}. """
        return self.tau(self.source.entry(i - 1, j - 1)) - \
            bracket(self.target, self.images[i - 1], self.images[j - 1])

    def kernel_elements(self) -> Dict[str, CPoly]:
        """ Elements of F_n^C expected in the kernel. """
        ring = self.source.ring
        n = ring.m
        return {
            f"z{n - 1}": commutative_z(ring, n - 1),
            f"theta(z{n - 2}) - ({self.lam})": theta_z(ring, n - 2) - self.lam,
            f"Omega + 2*({self.lam})": omega_commutative(ring) + 2 * self.lam,
        }

    def defect_outcome(self, i: int, j: int) -> Tuple[bool, Optional[str]]:
        value = self.defect(i, j)
        return principal_membership(value, self.k, self.lam), str(value)

    def kernel_outcome(self, label: str) -> Tuple[bool, Optional[str]]:
        value = self.tau(self.kernel_elements()[label])
        return principal_membership(value, self.k, self.lam), str(value)

    def oracle_outcome(self, label: str) -> Tuple[bool, Optional[str]]:
        """ Does the sympy division agree with principal_membership? """
        value = self.tau(self.kernel_elements()[label])
        fast, oracle = principal_membership(value, self.k, self.lam), \
            principal_membership_oracle(value, self.k, self.lam)
        return fast == oracle, f"principal_membership: {fast}, sympy: {oracle}"


# R, the Laurent ring of w_0 .. w_n.

class ClusterBrackets(object):
    """
    The commutative cluster variables w_i on [-2, n + 2] and x_i on
    [-1, n + 1] of P with the log-canonical parity bracket of R.

    :param n: Odd size, n >= 3.
    """

    def __init__(self, n: int):
        self.n = n
        self.table = preset_R(n)
        self.w = commutative_w(n, -2, n + 2)
        self.x = commutative_x(self.w, -1, n + 1)

    def b(self, f: CPoly, g: CPoly) -> CPoly:
        return bracket(self.table, f, g)

    def w_w_difference(self, i: int, j: int) -> CPoly:
        w = self.w
        expected = w[i] * w[j] if (i + j) % 2 == 1 else self.table.ring.zero()
        return self.b(w[i], w[j]) - expected

    def w_wrap_difference(self) -> CPoly:
        w, n = self.w, self.n
        return self.b(w[0], w[n + 1]) - (w[1] * w[n]).scale(2)

    def x_adjacent_difference(self, i: int) -> CPoly:
        x = self.x
        return self.b(x[i], x[i + 1]) - (x[i] * x[i + 1] - 1).scale(2)

    def x_distant_difference(self, i: int, j: int) -> CPoly:
        x = self.x
        return self.b(x[i], x[j]) - (x[j] * x[i]).scale(-2 if (j - i) % 2 == 0 else 2)

    def x_wrap_readings(self) -> Dict[str, CPoly]:
        x, n = self.x, self.n
        value = self.b(x[1], x[n])
        return {
            f"{{x1, x{n}}} = -2*x{n}*x1": value + (x[n] * x[1]).scale(2),
            f"{{x{n}, x1}} = 2*(x{n}*x1 - 1)": value + (x[n] * x[1] - 1).scale(2),
        }

    def x_w_product_difference(self, i: int) -> CPoly:
        w, x = self.w, self.x
        return w[i] * x[i] - (w[i - 1] + w[i + 1])

    def x_w_difference(self, i: int) -> CPoly:
        w, x = self.w, self.x
        return self.b(x[i], w[i]) - (x[i] * w[i] - w[i + 1].scale(2))

    def x_w_readings(self, i: int) -> Dict[str, CPoly]:
        w, x = self.w, self.x
        value = self.b(x[i], w[i])
        return {
            f"2*w{i + 1} - x{i}*w{i}": value - (w[i + 1].scale(2) - x[i] * w[i]),
            f"2*w{i - 1} - x{i}*w{i}": value - (w[i - 1].scale(2) - x[i] * w[i]),
        }

    @staticmethod
    def x_w_sign(i: int, j: int) -> int:
        if (i < j and (i + j) % 2 == 0) or (i > j and (i + j) % 2 == 1):
            return 1
        return -1

    def x_w_commutation_difference(self, i: int, j: int) -> CPoly:
        w, x = self.w, self.x
        return self.b(x[i], w[j]) - (x[i] * w[j]).scale(self.x_w_sign(i, j))

    def x_n_w0_readings(self) -> Dict[str, CPoly]:
        w, x, n = self.w, self.x, self.n
        value = self.b(x[n], w[0])
        return {
            f"{{x{n}, w0}} = x{n}*w0": value - x[n] * w[0],
            f"{{x{n}, w0}} = x{n}*w0 - 2*w1": value - (x[n] * w[0] - w[1].scale(2)),
        }

    def x_periodic_difference(self, i: int) -> CPoly:
        return self.x[self.n + i] - self.x[i]


# D and E.

def delta(ring: CRing) -> CPoly:
    """ W_0 W_(n+1) - W_1 W_n - 1. """
    W = ring.gens()
    n = ring.m - 2
    return W[0] * W[n + 1] - W[1] * W[n] - 1


def delta_central_difference(table: BracketTable, i: int) -> CPoly:
    return bracket(table, table.ring.gens()[i], delta(table.ring))


def delta_top_differences(table: BracketTable) -> Dict[str, CPoly]:
    """ The two halves of {W_(n+1), Delta} and of {W_0, Delta}. """

    W = table.ring.gens()
    n = table.m - 2
    top, bottom = W[n + 1], W[0]
    cross = W[1] * W[n]
    return {
        f"{{W{n + 1}, W0*W{n + 1}}} = -2*W1*W{n}*W{n + 1}":
            bracket(table, top, W[0] * top) + (cross * top).scale(2),
        f"{{W{n + 1}, -W1*W{n}}} = 2*W1*W{n}*W{n + 1}":
            bracket(table, top, -cross) - (cross * top).scale(2),
        f"{{W0, W0*W{n + 1}}} = 2*W0*W1*W{n}":
            bracket(table, bottom, bottom * W[n + 1]) - (bottom * cross).scale(2),
        f"{{W0, -W1*W{n}}} = -2*W0*W1*W{n}":
            bracket(table, bottom, -cross) + (bottom * cross).scale(2),
    }


def delta_top_difference(table: BracketTable, label: str) -> CPoly:
    return delta_top_differences(table)[label]


class LocalizedBrackets(object):
    """
    X_i = W_i^-1 (W_(i-1) + W_(i+1)), 1 <= i <= n, in E.

    :param n: Odd size, n >= 3.
    """

    def __init__(self, n: int):
        self.n = n
        self.table = preset_E(n)
        self.W = self.table.ring.gens()
        self.X = { i: cdivide(self.W[i], self.W[i - 1] + self.W[i + 1]) for i in range(1, n + 1) }

    def b(self, f: CPoly, g: CPoly) -> CPoly:
        return bracket(self.table, f, g)

    def adjacent_difference(self, i: int, j: int) -> CPoly:
        """ {X_i, X_j} - 2 (X_i X_j - 1) for j = i + 1 or (i, j) = (n, 1). """
        X = self.X
        return self.b(X[i], X[j]) - (X[i] * X[j] - 1).scale(2)

    def distant_difference(self, i: int, j: int) -> CPoly:
        X = self.X
        return self.b(X[i], X[j]) - (X[j] * X[i]).scale(-2 if (j - i) % 2 == 0 else 2)

    def wrap_readings(self) -> Dict[str, CPoly]:
        X, n = self.X, self.n
        value = self.b(X[1], X[n])
        return {
            f"{{X1, X{n}}} = -2*X{n}*X1": value + (X[n] * X[1]).scale(2),
            f"{{X{n}, X1}} = 2*(X{n}*X1 - 1)": value + (X[n] * X[1] - 1).scale(2),
        }

    def x_w_differences(self, i: int) -> Dict[str, CPoly]:
        X, W = self.X, self.W
        value = self.b(X[i], W[i])
        return {
            f"W{i - 1} - W{i + 1}": value - (W[i - 1] - W[i + 1]),
            f"X{i}*W{i} - 2*W{i + 1}": value - (X[i] * W[i] - W[i + 1].scale(2)),
            f"2*W{i - 1} - X{i}*W{i}": value - (W[i - 1].scale(2) - X[i] * W[i]),
        }

    def x_w_difference(self, i: int, label: str) -> CPoly:
        return self.x_w_differences(i)[label]

    def x_n_w0_difference(self) -> CPoly:
        X, W, n = self.X, self.W, self.n
        return self.b(X[n], W[0]) - (X[n] * W[0] - W[1].scale(2))

    def x_w_low_difference(self, i: int, j: int) -> CPoly:
        X, W = self.X, self.W
        return self.b(X[i], W[j]) - (X[i] * W[j]).scale(1 if (i + j) % 2 == 1 else -1)

    def x_n_w0_readings(self) -> Dict[str, CPoly]:
        X, W, n = self.X, self.W, self.n
        value = self.b(X[n], W[0])
        return {
            f"{{X{n}, W0}} = X{n}*W0": value - X[n] * W[0],
            f"{{X{n}, W0}} = X{n}*W0 - 2*W1": value - (X[n] * W[0] - W[1].scale(2)),
        }

    def factor_two_difference(self, cyclic: BracketTable, i: int, j: int) -> CPoly:
        """ {X_i, X_j} - 2 {x_i, x_j} evaluated at x -> X. """
        images = [ self.X[k] for k in range(1, self.n + 1) ]
        expected = cyclic.entry(i - 1, j - 1).substitute(images, self.table.ring)
        return self.b(self.X[i], self.X[j]) - expected.scale(2)


# Kernels and the quantum side.

def kernel_outcome(skew, expected: List[Tuple[int, ...]]) -> Tuple[bool, Optional[str]]:
    basis = lambda_kernel(skew)
    return sorted(basis) == sorted(expected), str(basis)


def kernel_oracle_outcome(skew) -> Tuple[bool, Optional[str]]:
    return kernel_matches_oracle(skew), str(lambda_kernel(skew))


def limit_outcome(family: str, n: int) -> Tuple[bool, Optional[str]]:
    if family == "L":
        table, expected = semiclassical_limit(preset_linear(n)), preset_FL(n)
    else:
        table, expected = semiclassical_limit(preset_cyclic(n)), preset_FC(n)
    return table == expected, str(table)


def coherence_difference(family: str, n: int, a: Sequence[int], b: Sequence[int]) -> CPoly:
    """ (fg - gf)/(q - 1) at v = 1 against the bracket of the limits, f, g standard monomials. """

    P = preset_linear(n) if family == "L" else preset_cyclic(n)
    table = preset_FL(n) if family == "L" else preset_FC(n)
    f, g = P.monomial(a), P.monomial(b)
    ring = table.ring
    return divided_commutator(P, f, g, ring) - \
        bracket(table, specialize_nc(f, ring), specialize_nc(g, ring))


def jacobi_task(table: BracketTable, triple: Tuple[int, int, int]) -> CheckTask:
    g, o = table.ring.generator, table.ring.offset
    a, b, c = (f"{g}{idx + o}" for idx in triple)
    return difference(f"Jacobi on {table.name}: ({a}, {b}, {c})", "jacobi", partial(jacobi_sum, table, *triple))


def linear_tasks(n: int) -> List[CheckTask]:
    """ Checks on F_n^L, any n >= 2. """

    table = preset_FL(n)
    ring = table.ring
    tasks = [ ]

    for i in range(1, n + 1):
        tasks.append(difference(f"z{i} = x1*theta(z{i - 1}) - theta^2(z{i - 2})", "z-expansion",
                                partial(z_expansion_difference, ring, i)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            tasks.append(difference(f"{{x{i}, z{j}}} in F{n}L", "x-z-bracket", partial(x_z_difference, table, i, j)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            tasks.append(difference(f"{{z{i}, z{j}}} in F{n}L", "z-z-bracket", partial(z_z_difference, table, i, j)))

    if n % 2 == 1:
        for lam in ODD_IDEAL_CONSTANTS:
            for i in range(1, n + 1):
                tasks.append(predicate(f"{{x{i}, z{n}}} in (z{n} - ({lam}))", "poisson-ideal",
                                       partial(ideal_outcome, table, i, [ (n, Fraction(lam)) ], n)))
    else:
        for i in range(1, n + 1):
            tasks.append(predicate(f"{{x{i}, z{n}}} in (z{n})", "poisson-ideal",
                                   partial(ideal_outcome, table, i, [ (n, Fraction(0)) ], n)))
        for lam in EVEN_IDEAL_CONSTANTS:
            ideals = [ (n, Fraction(0)), (n - 1, Fraction(lam)) ]
            for i in range(1, n + 1):
                for j in (n, n - 1):
                    tasks.append(predicate(f"{{x{i}, z{j}}} in (z{n}, z{n - 1} - ({lam}))", "poisson-ideal",
                                           partial(ideal_outcome, table, i, ideals, j)))

    for triple in itertools.combinations(range(n), 3):
        tasks.append(jacobi_task(table, triple))

    expected = [ unit_vector(n, n - 1) ] if n % 2 == 1 else [ ]
    skew = quasi_commutation_skew(n)
    tasks.append(predicate(f"kernel of the z bracket matrix, n = {n}", "lambda-kernel",
                           partial(kernel_outcome, skew, expected)))
    tasks.append(predicate(f"kernel of the z bracket matrix against sympy, n = {n}", "lambda-kernel",
                           partial(kernel_oracle_outcome, skew)))

    tasks.append(predicate(f"semiclassical limit of L{n} is F{n}L", "coherence", partial(limit_outcome, "L", n)))
    for a, b in random_exponent_pairs(n, WeylBenchConfig.COHERENCE_SAMPLES, WeylBenchConfig.RANDOM_SEED):
        tasks.append(difference(f"L{n}: (x^{list(a)}, x^{list(b)}) divided commutator", "coherence",
                                partial(coherence_difference, "L", n, a, b)))
    return tasks


def cyclic_tasks(n: int) -> List[CheckTask]:
    """ Checks on F_n^C and the exceptional primes, n odd >= 3. """

    table = preset_FC(n)
    ring = table.ring
    tasks = [ ]

    for j in range(1, n - 1):
        tasks.append(difference(f"{{x{n}, z{j}}} in F{n}C", "x-n-z-bracket", partial(x_n_z_difference, table, j)))
    tasks.append(difference(f"{{x{n}, z{n - 1}}} = z{n - 2} - theta(z{n - 2})", "x-n-z-bracket",
                            partial(x_n_z_last_difference, table)))
    tasks.append(difference("theta(Omega) = Omega", "omega", partial(omega_theta_difference, ring)))
    for i in range(1, n + 1):
        tasks.append(difference(f"{{x{i}, Omega}} = 0", "omega", partial(omega_central_difference, table, i)))

    for which, rhs in enumerate((f"-theta^2(z{n - 4})", f"-x1*theta(z{n - 3}) + z{n - 2}")):
        tasks.append(difference(f"{{x1, theta(z{n - 3})}} = {rhs}", "theta-z",
                                partial(x1_theta_z_difference, table, which)))
    for i in range(2, n - 1):
        tasks.append(difference(f"{{x{i}, theta(z{n - 3})}} = {parity_sign(i)}*x{i}*theta(z{n - 3})", "theta-z",
                                partial(x_theta_z_difference, table, i)))
    for i in range(0, n - 2):
        tasks.append(difference(f"{{z{i}, theta(z{n - 3})}}", "theta-z", partial(z_theta_z_difference, table, i)))
    tasks.append(difference(f"{{z{n - 3}, theta(z{n - 3})}} = z{n - 3}*theta(z{n - 3}) - 1", "theta-z",
                            partial(z_theta_z_last_difference, table)))

    for lam in EXCEPTIONAL_CONSTANTS:
        exceptional = Exceptional(table, lam)
        for i, j in itertools.combinations(range(1, n + 1), 2):
            tasks.append(predicate(f"tau_{lam} preserves {{x{i}, x{j}}} modulo z{n - 2} - ({lam})", "exceptional",
                                   partial(exceptional.defect_outcome, i, j)))
        for label in exceptional.kernel_elements():
            tasks.append(predicate(f"{label} in M_{lam}", "exceptional-kernel",
                                   partial(exceptional.kernel_outcome, label)))
            tasks.append(predicate(f"{label} in M_{lam} against sympy", "exceptional-kernel",
                                   partial(exceptional.oracle_outcome, label)))

    for triple in itertools.combinations(range(n), 3):
        tasks.append(jacobi_task(table, triple))

    tasks.append(predicate(f"semiclassical limit of C{n} is F{n}C", "coherence", partial(limit_outcome, "C", n)))
    for a, b in random_exponent_pairs(n, WeylBenchConfig.COHERENCE_SAMPLES, WeylBenchConfig.RANDOM_SEED + 1):
        tasks.append(difference(f"C{n}: (x^{list(a)}, x^{list(b)}) divided commutator", "coherence",
                                partial(coherence_difference, "C", n, a, b)))
    return tasks


def cluster_bracket_tasks(n: int) -> List[CheckTask]:
    """ Brackets of the commutative cluster variables in R, n odd >= 3. """

    c = ClusterBrackets(n)
    tasks = [ ]

    for i in (-1, 0, 1):
        for j in range(i + 1, i + n + 1):
            tasks.append(difference(f"{{w{i}, w{j}}}", "w-w-bracket", partial(c.w_w_difference, i, j)))
    tasks.append(difference(f"{{w0, w{n + 1}}} = 2*w1*w{n}", "w-w-bracket", c.w_wrap_difference))

    for i in range(-1, n + 1):
        tasks.append(difference(f"{{x{i}, x{i + 1}}} = 2*(x{i}*x{i + 1} - 1)", "x-bracket",
                                partial(c.x_adjacent_difference, i)))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if (i, j) == (1, n):
                tasks.append(candidates(f"{{x1, x{n}}}", "x-bracket-reading", c.x_wrap_readings))
                continue
            coefficient = -2 if (j - i) % 2 == 0 else 2
            tasks.append(difference(f"{{x{i}, x{j}}} = {coefficient}*x{j}*x{i}", "x-bracket",
                                    partial(c.x_distant_difference, i, j)))

    for i in range(-1, n + 2):
        tasks.append(difference(f"w{i}*x{i} = w{i - 1} + w{i + 1}", "x-w-bracket",
                                partial(c.x_w_product_difference, i)))
        tasks.append(difference(f"{{x{i}, w{i}}} = x{i}*w{i} - 2*w{i + 1}", "x-w-bracket",
                                partial(c.x_w_difference, i)))
        tasks.append(candidates(f"second form of {{x{i}, w{i}}}", "x-w-bracket-reading",
                                partial(c.x_w_readings, i)))

    for i in range(1, n + 1):
        for j in range(0, n + 1):
            if j == i:
                continue
            if (i, j) == (n, 0):
                tasks.append(candidates(f"{{x{n}, w0}}", "x-w-sign-reading", c.x_n_w0_readings))
                continue
            sign = "" if ClusterBrackets.x_w_sign(i, j) > 0 else "-"
            tasks.append(difference(f"{{x{i}, w{j}}} = {sign}x{i}*w{j}", "x-w-sign",
                                    partial(c.x_w_commutation_difference, i, j)))

    for i in (-1, 0, 1):
        tasks.append(difference(f"x{n + i} = x{i}", "x-periodic", partial(c.x_periodic_difference, i)))

    skew = parity_skew(n + 1)
    tasks.append(predicate("kernel of the R bracket matrix", "lambda-kernel", partial(kernel_outcome, skew, [ ])))
    tasks.append(predicate("kernel of the R bracket matrix against sympy", "lambda-kernel",
                           partial(kernel_oracle_outcome, skew)))
    return tasks


def delta_tasks(n: int) -> List[CheckTask]:
    """ Jacobi on D, Delta central, and the X_i brackets in E, n odd >= 3. """

    D = preset_D(n)
    tasks = [ jacobi_task(D, triple) for triple in itertools.combinations(range(n + 2), 3) ]
    for i in range(n + 2):
        tasks.append(difference(f"{{W{i}, Delta}} = 0", "delta-central", partial(delta_central_difference, D, i)))
    for label in delta_top_differences(D):
        tasks.append(difference(label, "delta-central", partial(delta_top_difference, D, label)))

    E = LocalizedBrackets(n)
    cyclic = preset_FC(n)
    for i in range(1, n):
        tasks.append(difference(f"{{X{i}, X{i + 1}}} = 2*(X{i}*X{i + 1} - 1)", "X-bracket",
                                partial(E.adjacent_difference, i, i + 1)))
    tasks.append(difference(f"{{X{n}, X1}} = 2*(X{n}*X1 - 1)", "X-bracket", partial(E.adjacent_difference, n, 1)))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if (i, j) == (1, n):
                tasks.append(candidates(f"{{X1, X{n}}}", "X-bracket-reading", E.wrap_readings))
                continue
            coefficient = -2 if (j - i) % 2 == 0 else 2
            tasks.append(difference(f"{{X{i}, X{j}}} = {coefficient}*X{j}*X{i}", "X-bracket",
                                    partial(E.distant_difference, i, j)))
    for i in range(1, n + 1):
        for label in E.x_w_differences(i):
            tasks.append(difference(f"{{X{i}, W{i}}} = {label}", "X-W-bracket", partial(E.x_w_difference, i, label)))
    tasks.append(difference(f"{{X{n}, W0}} = X{n}*W0 - 2*W1", "X-W-bracket", E.x_n_w0_difference))
    for i in range(1, n + 1):
        for j in (0, 1):
            if j == i:
                continue
            if (i, j) == (n, 0):
                tasks.append(candidates(f"{{X{n}, W0}}", "X-W-sign-reading", E.x_n_w0_readings))
                continue
            sign = "" if (i + j) % 2 == 1 else "-"
            tasks.append(difference(f"{{X{i}, W{j}}} = {sign}X{i}*W{j}", "X-W-sign",
                                    partial(E.x_w_low_difference, i, j)))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        tasks.append(difference(f"{{X{i}, X{j}}} = 2*{{x{i}, x{j}}} at x = X", "factor-two",
                                partial(E.factor_two_difference, cyclic, i, j)))
    return tasks


def poisson_tasks(n: int) -> List[CheckTask]:
    """
    The F_n^L checks at every n >= 2, followed at odd n >= 3 by the
    checks on F_n^C, R, D and E.
    """

    if n < 2:
        raise ValueError(f"The Poisson suite needs n >= 2, got {n}!")
    tasks = linear_tasks(n)
    if n % 2 == 1:
        tasks += cyclic_tasks(n) + cluster_bracket_tasks(n) + delta_tasks(n)
    return tasks


def suite_poisson(n: int, runner: Optional[SuiteRunner] = None) -> Report:
    """
    Poisson checks at n.

    :raises ValueError: Raised for n < 2.
    """
    return run_tasks("poisson", { "n": n }, poisson_tasks(n), runner)
