# -*- coding: utf-8 -*-

import json

import pytest

from weylbench.algebra import Q
from weylbench.algebra.report import Check
from weylbench.algebra.report import FAIL
from weylbench.algebra.report import PASS
from weylbench.algebra.report import Report
from weylbench.algebra.report import merge_reports
from weylbench.config import WeylBenchConfig


@pytest.fixture
def report():
    result = Report("structure", { "family": "L", "n": 2 })
    result.add("x2*x1 = v^-2*x1*x2 + 1 - v^-2", "relations", True)
    result.add_difference("z2 = x1*x2 - 1", "z-recursion", Q - 1)
    return result


def test_report_dictionary(report):
    assert report.to_dict() == {
        "schema": WeylBenchConfig.REPORT_SCHEMA_VERSION,
        "suite": "structure",
        "params": { "family": "L", "n": 2 },
        "passed": False,
        "checks": [
            { "id": 1, "name": "x2*x1 = v^-2*x1*x2 + 1 - v^-2", "tag": "relations",
              "status": PASS, "witness": None, "detail": None },
            { "id": 2, "name": "z2 = x1*x2 - 1", "tag": "z-recursion",
              "status": FAIL, "witness": "v^2 - 1", "detail": None },
        ],
    }


def test_report_survives_json(report):
    restored = Report.from_dict(json.loads(json.dumps(report.to_dict())))
    assert restored.to_dict() == report.to_dict()


def test_unknown_schema_is_rejected(report):
    data = report.to_dict()
    data["schema"] = WeylBenchConfig.REPORT_SCHEMA_VERSION + 1
    with pytest.raises(ValueError):
        Report.from_dict(data)


def test_failure_always_carries_a_witness():
    check = Check(1, "x = y", "tag", FAIL)
    assert check.witness == "false"
    with pytest.raises(ValueError):
        Check(1, "x = y", "tag", "maybe")


def test_passing_difference_has_no_witness():
    report = Report("poisson")
    check = report.add_difference("{x1, x1} = 0", "bracket", 0)
    assert check.passed
    assert check.witness is None


@pytest.mark.parametrize(("differences", "passed"), [
    ({ "a": 0, "b": Q }, True),
    ({ "a": 0, "b": 0 }, False),
    ({ "a": Q, "b": Q - 1 }, False),
])
def test_exactly_one_candidate_must_hold(differences, passed):
    report = Report("cluster")
    check = report.add_candidates("x1*x2 sign", "x-commutation", differences)
    assert check.passed == passed
    if passed:
        assert check.detail == "holds: a"
    else:
        assert "a: " in check.witness


def test_merge_prefixes_tags(report):
    other = Report("poisson", { "n": 3 })
    other.add("{x1, x2} = x1*x2 - 1", "bracket", True)
    merged = merge_reports("all", [ report, other ], { "n": 3 })
    assert [ check.tag for check in merged.checks ] == [
        "structure.relations", "structure.z-recursion", "poisson.bracket"
    ]
    assert [ check.id for check in merged.checks ] == [ 1, 2, 3 ]
    assert not merged.passed


def test_frame_and_summary(report):
    frame = report.to_frame()
    assert list(frame.index) == [ 1, 2 ]
    assert list(frame["status"]) == [ PASS, FAIL ]
    assert report.summary().endswith("1/2 checks passed")
    assert "z-recursion" in report.to_string()
