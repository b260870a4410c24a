# -*- coding: utf-8 -*-

"""
Cluster suite: exchange relations of the quiver P, the elements
x_i = w_i^-1 (q^-1/2 w_{i-1} + q^1/2 w_{i+1}) and their relations,
the type A seed and the specialization at v = 1.
"""

import itertools
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from weylbench.algebra.cluster import QuantumSeed
from weylbench.algebra.cluster import compatibility_walk_defects
from weylbench.algebra.cluster import mutate_seed
from weylbench.algebra.cluster import mutate_walk
from weylbench.algebra.cluster import preset_P
from weylbench.algebra.cluster import preset_dynkinA
from weylbench.algebra.cluster import rotation_check
from weylbench.algebra.cluster import w_family
from weylbench.algebra.cluster import x_family
from weylbench.algebra.poisson import CPoly
from weylbench.algebra.poisson import bracket
from weylbench.algebra.poisson import commutative_w
from weylbench.algebra.poisson import commutative_x
from weylbench.algebra.poisson import divided_commutator_torus
from weylbench.algebra.poisson import preset_R
from weylbench.algebra.poisson import specialize_torus
from weylbench.algebra.qtorus import TorusElement
from weylbench.algebra.qtorus import left_divide
from weylbench.algebra.report import Report
from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import Q
from weylbench.algebra.scalar import qpow
from weylbench.config import WeylBenchConfig
from weylbench.suites.runner import CheckTask
from weylbench.suites.runner import SuiteRunner
from weylbench.suites.runner import candidates
from weylbench.suites.runner import difference
from weylbench.suites.runner import predicate
from weylbench.suites.runner import run_tasks

Q_HALF = qpow("1/2")
Q_MINUS_HALF = qpow("-1/2")
Q2 = Q ** 2


def q_sign(k: int) -> LaurentScalar:
    """ q^((-1)^k). """
    return Q if k % 2 == 0 else Q.inverse()


class ClusterChecks(object):
    """
    The families w_i on [-2, 2n + 2] and x_i on [-1, 2n + 1] in the
    torus of the seed P, with the statements checked on them.

    :param n: Odd size, n >= 3.
    """

    def __init__(self, n: int):
        self.n = n
        self.seed = preset_P(n)
        self.torus = self.seed.torus
        self.w_lo, self.w_hi = -2, 2 * n + 2
        self.x_lo, self.x_hi = -1, 2 * n + 1
        self.w = w_family(n, self.w_lo, self.w_hi)
        self.x = x_family(n, self.w, self.x_lo, self.x_hi)
        self._commutative = None

    def one(self) -> TorusElement:
        return self.torus.one()

    # Exchange relations.

    def exchange_source(self) -> TorusElement:
        """ mu_0 gives w_0^-1 (1 + q w_1 w_n). """
        w, n = self.w, self.n
        expected = w[0].inverse() * (self.one() + (w[1] * w[n]).scale(Q))
        return mutate_seed(self.seed, 0).var(0) - expected

    def exchange_source_right(self) -> TorusElement:
        """ The same variable as (1 + q^-1 w_1 w_n) w_0^-1. """
        w, n = self.w, self.n
        return w[n + 1] - (self.one() + (w[1] * w[n]).scale(Q.inverse())) * w[0].inverse()

    def exchange_sink(self) -> TorusElement:
        """ mu_n gives w_n^-1 (1 + q^-1 w_0 w_{n-1}) = w_-1. """
        w, n = self.w, self.n
        expected = left_divide(w[n], self.one() + (w[0] * w[n - 1]).scale(Q.inverse()))
        return mutate_seed(self.seed, n).var(n) - expected

    def exchange_inner(self, i: int) -> TorusElement:
        """ mu_i, 1 <= i <= n-1, gives x_i. """
        w = self.w
        expected = left_divide(w[i], w[i - 1].scale(Q_MINUS_HALF) + w[i + 1].scale(Q_HALF))
        return mutate_seed(self.seed, i).var(i) - expected

    def family_matches_mutation(self) -> TorusElement:
        return mutate_seed(self.seed, self.n).var(self.n) - self.w[-1]

    def walk_step(self, k: int) -> TorusElement:
        """ Mutating at 0, 1, .., k gives w_{n+1+k} at vertex k. """
        return mutate_walk(self.seed, range(k + 1)).var(k) - self.w[self.n + 1 + k]

    # Relations among the w_i.

    def w0_w_next(self) -> TorusElement:
        w, n = self.w, self.n
        return w[0] * w[n + 1] - (self.one() + (w[1] * w[n]).scale(Q))

    def w_next_w0(self) -> TorusElement:
        w, n = self.w, self.n
        return w[n + 1] * w[0] - (self.one() + (w[1] * w[n]).scale(Q.inverse()))

    def w0_w_next_commutator(self) -> TorusElement:
        w, n = self.w, self.n
        return w[0] * w[n + 1] - w[n + 1] * w[0] - (w[1] * w[n]).scale(Q - Q.inverse())

    def w_commutation(self, i: int, j: int) -> TorusElement:
        """ w_i w_j = w_j w_i for i + j even, q w_j w_i for i + j odd. """
        w = self.w
        factor = Q if (i + j) % 2 == 1 else LaurentScalar.const(1)
        return w[i] * w[j] - (w[j] * w[i]).scale(factor)

    # Relations of the x_i.

    def x_adjacent(self, i: int) -> TorusElement:
        """ x_i x_{i+1} - q^2 x_{i+1} x_i = 1 - q^2. """
        x = self.x
        return x[i] * x[i + 1] - (x[i + 1] * x[i]).scale(Q2) - (1 - Q2)

    def x_distant(self, i: int, j: int) -> TorusElement:
        """ x_i x_j = q^-2 x_j x_i for j - i even, q^2 x_j x_i for j - i odd. """
        x = self.x
        factor = Q2.inverse() if (j - i) % 2 == 0 else Q2
        return x[i] * x[j] - (x[j] * x[i]).scale(factor)

    def x_wrap_readings(self) -> Dict[str, TorusElement]:
        """ The pair x_1, x_n read as an even distance or as adjacent through x_n = x_0. """
        x, n = self.x, self.n
        return {
            f"x1*x{n} = q^-2*x{n}*x1": x[1] * x[n] - (x[n] * x[1]).scale(Q2.inverse()),
            f"x{n}*x1 = q^2*x1*x{n} + 1 - q^2": x[n] * x[1] - (x[1] * x[n]).scale(Q2) - (1 - Q2),
        }

    def w_x_product(self, i: int) -> TorusElement:
        """ w_i x_i = q^-1/2 w_{i-1} + q^1/2 w_{i+1}. """
        w, x = self.w, self.x
        return w[i] * x[i] - (w[i - 1].scale(Q_MINUS_HALF) + w[i + 1].scale(Q_HALF))

    def x_w_product(self, i: int) -> TorusElement:
        """ x_i w_i = q^1/2 w_{i-1} + q^-1/2 w_{i+1}. """
        w, x = self.w, self.x
        return x[i] * w[i] - (w[i - 1].scale(Q_HALF) + w[i + 1].scale(Q_MINUS_HALF))

    def x_w_upper(self, i: int) -> TorusElement:
        """ x_i w_i - q w_i x_i = q^1/2 (q^-1 - q) w_{i+1}. """
        w, x = self.w, self.x
        return x[i] * w[i] - (w[i] * x[i]).scale(Q) - w[i + 1].scale(Q_HALF * (Q.inverse() - Q))

    def x_w_lower(self, i: int) -> TorusElement:
        """ x_i w_i - q^-1 w_i x_i = q^1/2 (1 - q^-2) w_{i-1}. """
        w, x = self.w, self.x
        return x[i] * w[i] - (w[i] * x[i]).scale(Q.inverse()) - w[i - 1].scale(Q_HALF * (1 - Q2.inverse()))

    @staticmethod
    def x_w_exponent(i: int, j: int) -> int:
        """ x_i w_j = q^e w_j x_i, e = 1 when i < j with i + j even or i > j with i + j odd. """
        odd = (i + j) % 2 == 1
        return 1 if (i < j and not odd) or (i > j and odd) else -1

    def x_w_commutation(self, i: int, j: int) -> TorusElement:
        w, x = self.w, self.x
        return x[i] * w[j] - (w[j] * x[i]).scale(Q ** self.x_w_exponent(i, j))

    def x_n_w0_correction(self) -> TorusElement:
        """ x_n w_0 = q w_0 x_n + q^-1/2 (1 - q^2) w_1. """
        w, x, n = self.w, self.x, self.n
        return x[n] * w[0] - (w[0] * x[n]).scale(Q) - w[1].scale(Q_MINUS_HALF * (1 - Q2))

    def x_n_w0_readings(self) -> Dict[str, TorusElement]:
        w, x, n = self.w, self.x, self.n
        return {
            f"x{n}*w0 = q*w0*x{n}": x[n] * w[0] - (w[0] * x[n]).scale(Q),
            f"x{n}*w0 = q*w0*x{n} + q^-1/2*(1 - q^2)*w1": self.x_n_w0_correction(),
        }

    def x_periodic(self, i: int) -> TorusElement:
        return self.x[self.n + i] - self.x[i]

    # The relation list of the algebra generated by w_0, w_1, x_1 .. x_n.

    def w0_w1(self) -> TorusElement:
        w = self.w
        return w[0] * w[1] - (w[1] * w[0]).scale(Q)

    def x_w0(self, j: int) -> TorusElement:
        """ x_j w_0 = q^((-1)^(j+1)) w_0 x_j, 1 <= j < n. """
        w, x = self.w, self.x
        return x[j] * w[0] - (w[0] * x[j]).scale(q_sign(j + 1))

    def x_w1(self, j: int) -> TorusElement:
        """ x_j w_1 = q^((-1)^j) w_1 x_j, 1 < j <= n. """
        w, x = self.w, self.x
        return x[j] * w[1] - (w[1] * x[j]).scale(q_sign(j))

    def x1_w1_readings(self) -> Dict[str, TorusElement]:
        w, x = self.w, self.x
        base = x[1] * w[1] - (w[1] * x[1]).scale(Q.inverse())
        return {
            "x1*w1 = q^-1*w1*x1 + q^1/2*(1 - q^2)*w0": base - w[0].scale(Q_HALF * (1 - Q2)),
            "x1*w1 = q^-1*w1*x1 + q^1/2*(1 - q^-2)*w0": base - w[0].scale(Q_HALF * (1 - Q2.inverse())),
        }

    def x_wrap(self) -> TorusElement:
        """ x_n x_1 = q^2 x_1 x_n + 1 - q^2. """
        x, n = self.x, self.n
        return x[n] * x[1] - (x[1] * x[n]).scale(Q2) - (1 - Q2)

    def w0_w_next_list(self) -> TorusElement:
        """ w_0 w_{n+1} = q w_1 w_n + 1. """
        w, n = self.w, self.n
        return w[0] * w[n + 1] - (w[1] * w[n]).scale(Q) - 1

    def w_minus_one(self) -> TorusElement:
        """ w_-1 = q^1/2 (w_0 x_n - q^1/2 w_1). """
        w, x, n = self.w, self.x, self.n
        return w[-1] - (w[0] * x[n] - w[1].scale(Q_HALF)).scale(Q_HALF)

    def recursion_readings(self, j: int) -> Dict[str, TorusElement]:
        """ w_j = q^-1/2 w_{j-1} x_{j-1} -+ q^-1 w_{j-2}. """
        w, x = self.w, self.x
        head = (w[j - 1] * x[j - 1]).scale(Q_MINUS_HALF)
        tail = w[j - 2].scale(Q.inverse())
        return {
            "minus": w[j] - (head - tail),
            "plus": w[j] - (head + tail),
        }

    # Seeds.

    def compatibility_outcome(self, seed: QuantumSeed, length: int) -> Tuple[bool, Optional[str]]:
        defects = compatibility_walk_defects(seed.B, seed.skew, seed.d, length)
        if defects:
            return False, f"walk {list(defects[0])}"
        return True, None

    def involution_outcome(self, seed: QuantumSeed, walk: Sequence[int]) -> Tuple[bool, Optional[str]]:
        """ Every seed on the walk is compatible and mutating twice at the end restores it. """
        current = seed
        for k in walk:
            current = mutate_seed(current, k)
            if not current.is_compatible():
                return False, f"incompatible after {k}"
        for k in range(current.m):
            if mutate_seed(mutate_seed(current, k), k) != current:
                return False, f"mu_{k + current.offset} is not an involution"
        return True, None

    # Specialization at v = 1.

    @property
    def commutative(self) -> Tuple[Dict[int, CPoly], Dict[int, CPoly]]:
        if self._commutative is None:
            w = commutative_w(self.n, self.w_lo, self.w_hi)
            self._commutative = (w, commutative_x(w, self.x_lo, self.x_hi))
        return self._commutative

    def w_specialization(self, i: int) -> CPoly:
        w, _ = self.commutative
        return specialize_torus(self.w[i], w[i].ring) - w[i]

    def x_specialization(self, i: int) -> CPoly:
        _, x = self.commutative
        return specialize_torus(self.x[i], x[i].ring) - x[i]

    def divided_commutator(self, f: TorusElement, g: TorusElement,
                           cf: CPoly, cg: CPoly) -> CPoly:
        """ (fg - gf)/(q - 1) at v = 1 against the bracket of R. """
        table = preset_R(self.n)
        return divided_commutator_torus(f, g, table.ring) - bracket(table, cf, cg)


def dynkin_expected(seed: QuantumSeed, k: int, constant: Optional[LaurentScalar] = None) -> TorusElement:
    """ z_k^-1 (z_{k-1} + z_{k+1}), with z_n replaced by the constant. """

    torus = seed.torus
    m = seed.m
    z = lambda i: torus.one() if i == 0 else torus.gen(i)
    upper = torus.scalar(constant) if k == m else z(k + 1)
    return z(k).inverse() * (z(k - 1) + upper)


def dynkin_difference(seed: QuantumSeed, k: int) -> TorusElement:
    return mutate_seed(seed, k - 1).var(k) - dynkin_expected(seed, k)


def dynkin_last_readings(seed: QuantumSeed, n: int) -> Dict[str, TorusElement]:
    """ The constant of the mutation at the last vertex, q^((n-1)/2) against q^((n-1)/4). """
    m = seed.m
    mutated = mutate_seed(seed, m - 1).var(m)
    return {
        f"q^({n - 1}/2)": mutated - dynkin_expected(seed, m, qpow(Fraction(n - 1, 2))),
        f"q^({n - 1}/4)": mutated - dynkin_expected(seed, m, qpow(Fraction(n - 1, 4))),
    }


def walks(m: int, length: int) -> List[Tuple[int, ...]]:
    """ Vertex sequences up to the given length without immediate repetition. """
    result = [ ]
    for size in range(1, length + 1):
        for walk in itertools.product(range(m), repeat=size):
            if all(a != b for a, b in zip(walk, walk[1:])):
                result.append(walk)
    return result


def cluster_tasks(n: int, walk_length: Optional[int] = None) -> List[CheckTask]:
    """
    Every check of the cluster suite.

    :raises ValueError: Raised unless n is odd and n >= 3.
    """

    if walk_length is None:
        walk_length = WeylBenchConfig.SEED_WALK_LENGTH
    c = ClusterChecks(n)
    tasks = [ ]

    tasks.append(difference(f"mu_0: w{n + 1} = w0^-1*(1 + q*w1*w{n})", "exchange", c.exchange_source))
    tasks.append(difference(f"w{n + 1} = (1 + q^-1*w1*w{n})*w0^-1", "exchange", c.exchange_source_right))
    tasks.append(difference(f"mu_{n}: w-1 = w{n}^-1*(1 + q^-1*w0*w{n - 1})", "exchange", c.exchange_sink))
    for i in range(1, n):
        tasks.append(difference(f"mu_{i}: x{i} = w{i}^-1*(q^-1/2*w{i - 1} + q^1/2*w{i + 1})", "exchange",
                                partial(c.exchange_inner, i)))
    tasks.append(difference("mutation at the sink agrees with the generated w-1", "exchange",
                            c.family_matches_mutation))
    for k in range(n + 1):
        tasks.append(difference(f"mu_{k} ... mu_0: w{n + 1 + k}", "walk", partial(c.walk_step, k)))

    tasks.append(difference(f"w0*w{n + 1} = 1 + q*w1*w{n}", "w0-w-next", c.w0_w_next))
    tasks.append(difference(f"w{n + 1}*w0 = 1 + q^-1*w1*w{n}", "w0-w-next", c.w_next_w0))
    tasks.append(difference(f"w0*w{n + 1} - w{n + 1}*w0 = (q - q^-1)*w1*w{n}", "w0-w-next",
                            c.w0_w_next_commutator))
    for i in range(-1, 3):
        for j in range(i + 1, i + n + 1):
            power = "q*" if (i + j) % 2 == 1 else ""
            tasks.append(difference(f"w{i}*w{j} = {power}w{j}*w{i}", "w-commute", partial(c.w_commutation, i, j)))

    for i in range(c.x_lo, c.x_hi):
        tasks.append(difference(f"x{i}*x{i + 1} - q^2*x{i + 1}*x{i} = 1 - q^2", "x-adjacent",
                                partial(c.x_adjacent, i)))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if (i, j) == (1, n):
                tasks.append(candidates(f"x1, x{n}", "x-distant-reading", c.x_wrap_readings))
                continue
            power = "q^-2" if (j - i) % 2 == 0 else "q^2"
            tasks.append(difference(f"x{i}*x{j} = {power}*x{j}*x{i}", "x-distant", partial(c.x_distant, i, j)))

    for i in range(-1, n + 2):
        tasks.append(difference(f"w{i}*x{i} = q^-1/2*w{i - 1} + q^1/2*w{i + 1}", "w-x",
                                partial(c.w_x_product, i)))
        tasks.append(difference(f"x{i}*w{i} = q^1/2*w{i - 1} + q^-1/2*w{i + 1}", "x-w",
                                partial(c.x_w_product, i)))
        tasks.append(difference(f"x{i}*w{i} - q*w{i}*x{i} = q^1/2*(q^-1 - q)*w{i + 1}", "x-w-upper",
                                partial(c.x_w_upper, i)))
        tasks.append(difference(f"x{i}*w{i} - q^-1*w{i}*x{i} = q^1/2*(1 - q^-2)*w{i - 1}", "x-w-lower",
                                partial(c.x_w_lower, i)))

    for i in range(1, n + 1):
        for j in range(0, n + 1):
            if j == i:
                continue
            if (i, j) == (n, 0):
                tasks.append(candidates(f"x{n}*w0", "x-w-commute-reading", c.x_n_w0_readings))
                continue
            e = ClusterChecks.x_w_exponent(i, j)
            tasks.append(difference(f"x{i}*w{j} = q^{e}*w{j}*x{i}", "x-w-commute",
                                    partial(c.x_w_commutation, i, j)))

    for i in range(-1, n + 2):
        tasks.append(difference(f"x{n + i} = x{i}", "x-periodic", partial(c.x_periodic, i)))

    tasks.append(difference("w0*w1 = q*w1*w0", "relation-list", c.w0_w1))
    for j in range(1, n):
        tasks.append(difference(f"x{j}*w0 = q^{1 if j % 2 == 1 else -1}*w0*x{j}", "relation-list",
                                partial(c.x_w0, j)))
    for j in range(2, n + 1):
        tasks.append(difference(f"x{j}*w1 = q^{1 if j % 2 == 0 else -1}*w1*x{j}", "relation-list",
                                partial(c.x_w1, j)))
    tasks.append(candidates("coefficient of w0 in x1*w1", "relation-list-reading", c.x1_w1_readings))
    tasks.append(difference(f"x{n}*w0 = q*w0*x{n} + q^-1/2*(1 - q^2)*w1", "relation-list",
                            c.x_n_w0_correction))
    for i in range(1, n):
        tasks.append(difference(f"x{i}*x{i + 1} = q^2*x{i + 1}*x{i} + 1 - q^2", "relation-list",
                                partial(c.x_adjacent, i)))
    tasks.append(difference(f"x{n}*x1 = q^2*x1*x{n} + 1 - q^2", "relation-list", c.x_wrap))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if (j - i) % 2 == 1:
                tasks.append(difference(f"x{i}*x{j} = q^2*x{j}*x{i}", "relation-list", partial(c.x_distant, i, j)))
            elif j < n:
                tasks.append(difference(f"x{i}*x{j} = q^-2*x{j}*x{i}", "relation-list", partial(c.x_distant, i, j)))
    tasks.append(difference(f"w0*w{n + 1} = q*w1*w{n} + 1", "relation-list", c.w0_w_next_list))

    tasks.append(difference(f"w-1 = q^1/2*(w0*x{n} - q^1/2*w1)", "generators", c.w_minus_one))
    tasks.append(difference("x1*w1 - q^-1*w1*x1 = q^1/2*(1 - q^-2)*w0", "generators", partial(c.x_w_lower, 1)))
    for j in range(2, n + 2):
        tasks.append(candidates(f"sign in w{j} = q^-1/2*w{j - 1}*x{j - 1} -+ q^-1*w{j - 2}", "w-recursion",
                                partial(c.recursion_readings, j)))

    dynkin = preset_dynkinA(n)
    for k in range(1, n - 1):
        tasks.append(difference(f"type A mu_{k}: z{k}^-1*(z{k - 1} + z{k + 1})", "type-a",
                                partial(dynkin_difference, dynkin, k)))
    tasks.append(candidates(f"type A mu_{n - 1}: constant in z{n - 1}^-1*(z{n - 2} + c)", "type-a-reading",
                            partial(dynkin_last_readings, dynkin, n)))

    tasks.append(predicate("mutation at 0 rotates P", "rotation", partial(rotation_check, n)))
    for seed in (c.seed, dynkin):
        label = "P" if seed is c.seed else "A"
        length = WeylBenchConfig.COMPATIBILITY_WALK_LENGTH
        tasks.append(predicate(f"{label} matrix walks up to length {length} keep B^T Lambda = {seed.d} I",
                               "compatibility", partial(c.compatibility_outcome, seed, length)))
        for walk in walks(seed.m, walk_length):
            text = ", ".join(str(k + seed.offset) for k in walk)
            tasks.append(predicate(f"{label} walk ({text})", "involution",
                                   partial(c.involution_outcome, seed, walk)))

    for i in range(c.w_lo, c.w_hi + 1):
        tasks.append(difference(f"w{i} at v = 1", "specialization", partial(c.w_specialization, i)))
    for i in range(c.x_lo, c.x_hi + 1):
        tasks.append(difference(f"x{i} at v = 1", "specialization", partial(c.x_specialization, i)))

    w, x = c.commutative
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            tasks.append(difference(f"(x{i}*x{j} - x{j}*x{i})/(q - 1) = {{x{i}, x{j}}}", "coherence",
                                    partial(c.divided_commutator, c.x[i], c.x[j], x[i], x[j])))
        for j in (0, 1):
            tasks.append(difference(f"(x{i}*w{j} - w{j}*x{i})/(q - 1) = {{x{i}, w{j}}}", "coherence",
                                    partial(c.divided_commutator, c.x[i], c.w[j], x[i], w[j])))
    return tasks


def suite_cluster(n: int, runner: Optional[SuiteRunner] = None, walk_length: Optional[int] = None) -> Report:
    """
    Cluster checks at odd n >= 3.

    :raises ValueError: Raised unless n is odd and n >= 3.
    """
    return run_tasks("cluster", { "n": n }, cluster_tasks(n, walk_length), runner)
