# -*- coding: utf-8 -*-

"""
JSON codecs of presentations, quantum seeds and bracket tables.
Scalars are coefficient lists over v-exponents, rationals are
strings, so that every value round-trips exactly.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from weylbench.algebra.cluster import ExchangeMatrix
from weylbench.algebra.cluster import QuantumSeed
from weylbench.algebra.pbw import Presentation
from weylbench.algebra.poisson import BracketTable
from weylbench.algebra.poisson import CPoly
from weylbench.algebra.poisson import CRing
from weylbench.algebra.qtorus import QuantumTorus
from weylbench.algebra.qtorus import SkewMatrix
from weylbench.algebra.qtorus import TorusElement
from weylbench.algebra.scalar import LaurentScalar
from weylbench.common.util import rational_str
from weylbench.config import WeylBenchConfig


def _check_schema(data: Dict[str, Any], what: str):
    schema = data.get("schema", WeylBenchConfig.SEED_SCHEMA_VERSION)
    if schema != WeylBenchConfig.SEED_SCHEMA_VERSION:
        raise ValueError(f"Unsupported {what} schema {schema}!")


def presentation_to_json(presentation: Presentation) -> Dict[str, Any]:
    """ Full q and r tables, null on the diagonal. """

    n = presentation.n
    q = [ [ None if i == j else presentation.q(i, j).to_json() for j in range(1, n + 1) ]
          for i in range(1, n + 1) ]
    r = [ [ None if i == j else presentation.r(i, j).to_json() for j in range(1, n + 1) ]
          for i in range(1, n + 1) ]
    return { "schema": WeylBenchConfig.SEED_SCHEMA_VERSION, "n": n, "q": q, "r": r }


def presentation_from_json(data: Dict[str, Any]) -> Presentation:
    """
    :raises ValueError: Raised on malformed tables or when the full
        tables are not the ones generated by their upper halves.
    """

    _check_schema(data, "presentation")
    n = int(data["n"])
    q_table, r_table = data["q"], data.get("r")
    if len(q_table) != n or any(len(row) != n for row in q_table):
        raise ValueError(f"Table q must be {n}x{n}!")
    if r_table is not None and (len(r_table) != n or any(len(row) != n for row in r_table)):
        raise ValueError(f"Table r must be {n}x{n}!")

    q, r = { }, { }
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            q[(i, j)] = LaurentScalar.from_json(q_table[i - 1][j - 1])
            cell = r_table[i - 1][j - 1] if r_table is not None else None
            r[(i, j)] = LaurentScalar.from_json(cell) if cell else LaurentScalar()

    upper_q = { pair: value for pair, value in q.items() if pair[0] < pair[1] }
    upper_r = { pair: value for pair, value in r.items() if pair[0] < pair[1] }
    presentation = Presentation.from_upper(n, upper_q, upper_r)
    for pair in q:
        if presentation.q(*pair) != q[pair] or presentation.r(*pair) != r[pair]:
            raise ValueError(f"Relation tables are inconsistent at {pair}!")
    return presentation


def torus_element_to_json(element: TorusElement) -> List[List[Any]]:
    return [ [ list(exponent), coefficient.to_json() ] for exponent, coefficient in sorted(element.items()) ]


def torus_element_from_json(torus: QuantumTorus, data: List[List[Any]]) -> TorusElement:
    result = torus.zero()
    for exponent, coefficient in data:
        result = result + torus.monomial(exponent, LaurentScalar.from_json(coefficient))
    return result


def seed_to_json(seed: QuantumSeed) -> Dict[str, Any]:
    torus = seed.torus
    return {
        "schema": WeylBenchConfig.SEED_SCHEMA_VERSION,
        "B": seed.B.to_list(),
        "Lambda": seed.skew.to_list(),
        "d": seed.d,
        "offset": seed.offset,
        "torus": {
            "Lambda": torus.skew.to_list(),
            "generator": torus.generator,
            "offset": torus.offset,
        },
        "vars": [ torus_element_to_json(variable) for variable in seed.variables ],
        "rendered": [ str(variable) for variable in seed.variables ],
    }


def seed_from_json(data: Dict[str, Any]) -> QuantumSeed:
    """
    :raises IncompatibleSeed: Raised when B and Lambda are not compatible.
    """

    _check_schema(data, "seed")
    torus_data = data.get("torus", { })
    torus = QuantumTorus(SkewMatrix(torus_data.get("Lambda", data["Lambda"])),
                         torus_data.get("generator", "x"), int(torus_data.get("offset", 0)))
    variables = [ torus_element_from_json(torus, variable) for variable in data["vars"] ]
    return QuantumSeed(ExchangeMatrix(data["B"]), SkewMatrix(data["Lambda"]), variables,
                       int(data["d"]), int(data.get("offset", 0)))


def cpoly_to_json(f: CPoly) -> List[List[Any]]:
    return [ [ list(exponent), rational_str(coefficient) ] for exponent, coefficient in sorted(f.terms.items()) ]


def cpoly_from_json(ring: CRing, data: List[List[Any]]) -> CPoly:
    return CPoly(ring, { tuple(int(e) for e in exponent): Fraction(coefficient) for exponent, coefficient in data })


def bracket_to_json(table: BracketTable) -> Dict[str, Any]:
    ring = table.ring
    return {
        "schema": WeylBenchConfig.SEED_SCHEMA_VERSION,
        "m": ring.m,
        "ambient": ring.ambient,
        "generator": ring.generator,
        "offset": ring.offset,
        "name": table.name,
        "entries": [ { "i": i, "j": j, "poly": cpoly_to_json(value) }
                     for (i, j), value in sorted(table.entries.items()) ],
    }


def bracket_from_json(data: Dict[str, Any]) -> BracketTable:
    _check_schema(data, "bracket table")
    ring = CRing(int(data["m"]), data.get("generator", "x"), int(data.get("offset", 1)), data["ambient"])
    entries = { (int(entry["i"]), int(entry["j"])): cpoly_from_json(ring, entry["poly"]) for entry in data["entries"] }
    return BracketTable(ring, entries, data.get("name"))


def dumps(data: Dict[str, Any], indent: Optional[int] = 2) -> str:
    return json.dumps(data, indent=indent, sort_keys=False)


def load_presentation(path: str) -> Presentation:
    with open(path, "r") as f:
        return presentation_from_json(json.load(f))
