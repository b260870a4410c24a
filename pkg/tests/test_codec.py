# -*- coding: utf-8 -*-

import json

import pytest

from weylbench.algebra import Q
from weylbench.algebra import mutate_walk
from weylbench.algebra import preset_cyclic
from weylbench.algebra import preset_P
from weylbench.algebra.codec import bracket_from_json
from weylbench.algebra.codec import bracket_to_json
from weylbench.algebra.codec import dumps
from weylbench.algebra.codec import load_presentation
from weylbench.algebra.codec import presentation_from_json
from weylbench.algebra.codec import presentation_to_json
from weylbench.algebra.codec import seed_from_json
from weylbench.algebra.codec import seed_to_json
from weylbench.algebra.poisson import preset_E
from weylbench.common.errors import IncompatibleSeed


def test_presentation_tables(linear2):
    data = presentation_to_json(linear2)
    assert data["n"] == 2
    assert data["q"][0][0] is None
    assert data["q"][0][1] == [ [ 2, "1" ] ]
    assert data["r"][1][0] == [ [ -2, "-1" ], [ 0, "1" ] ]


def test_presentation_through_text():
    P = preset_cyclic(5)
    restored = presentation_from_json(json.loads(dumps(presentation_to_json(P))))
    assert restored == P
    assert restored.family is None


def test_inconsistent_tables_are_rejected(linear2):
    data = presentation_to_json(linear2)
    data["q"][1][0] = Q.to_json()
    with pytest.raises(ValueError):
        presentation_from_json(data)


def test_malformed_tables_are_rejected(linear2):
    data = presentation_to_json(linear2)
    data["q"] = data["q"][:1]
    with pytest.raises(ValueError):
        presentation_from_json(data)


def test_unknown_schema_is_rejected(linear2):
    data = presentation_to_json(linear2)
    data["schema"] = 99
    with pytest.raises(ValueError):
        presentation_from_json(data)


def test_load_presentation(presentation_file, scrambled_linear4):
    assert load_presentation(presentation_file) == scrambled_linear4


def test_mutated_seed_through_text():
    seed = mutate_walk(preset_P(3), (0, 2))
    data = json.loads(dumps(seed_to_json(seed)))
    assert data["rendered"] == [ str(variable) for variable in seed.variables ]
    assert seed_from_json(data) == seed


def test_incompatible_seed_document():
    data = seed_to_json(preset_P(3))
    data["d"] = 3
    with pytest.raises(IncompatibleSeed):
        seed_from_json(data)


def test_bracket_table_through_text():
    table = preset_E(3)
    restored = bracket_from_json(json.loads(dumps(bracket_to_json(table))))
    assert restored == table
    assert restored.name == "E"
    assert restored.ring.generator == "W"
