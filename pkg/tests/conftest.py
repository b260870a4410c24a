# -*- coding: utf-8 -*-

import json
import random

import pytest

from weylbench.algebra import LaurentScalar
from weylbench.algebra import Presentation
from weylbench.algebra import Q
from weylbench.algebra import V
from weylbench.algebra import preset_cyclic
from weylbench.algebra import preset_linear
from weylbench.algebra.classify import relabel
from weylbench.algebra.codec import presentation_to_json
from weylbench.suites import SuiteRunner


@pytest.fixture
def linear2():
    return preset_linear(2)


@pytest.fixture
def linear3():
    return preset_linear(3)


@pytest.fixture
def cyclic3():
    return preset_cyclic(3)


@pytest.fixture
def runner():
    return SuiteRunner(workers=1)


@pytest.fixture
def scrambled_linear4():
    """ L_4 behind a permutation and unit rescaling of its generators. """
    return relabel(preset_linear(4), (3, 1, 4, 2),
                   (LaurentScalar.const(1), V, Q.inverse(), LaurentScalar.v_power(3, 2)))


@pytest.fixture
def presentation_file(tmp_path, scrambled_linear4):
    path = tmp_path / "scrambled.json"
    path.write_text(json.dumps(presentation_to_json(scrambled_linear4)))
    return str(path)


def random_presentation(n: int, seed: int) -> Presentation:
    """ Random single or two parameter tables, about half of them PBW. """

    rng = random.Random(seed)
    units = [ Q, Q.inverse(), LaurentScalar.const(1), Q * Q ]
    constants = [ LaurentScalar(), LaurentScalar(), 1 - Q, LaurentScalar.const(1) ]
    q = { }
    r = { }
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            q[(i, j)] = rng.choice(units)
            r[(i, j)] = rng.choice(constants)
    return Presentation.from_upper(n, q, r)


@pytest.fixture(name="random_presentation")
def random_presentation_fixture():
    return random_presentation
