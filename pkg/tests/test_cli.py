# -*- coding: utf-8 -*-

import json

import pytest

from weylbench.algebra import mutate_walk
from weylbench.algebra import preset_P
from weylbench.algebra.codec import seed_from_json
from weylbench.algebra.report import Report
from weylbench.run.weylbench_main import WeylBenchMain


def run(*args) -> int:
    return WeylBenchMain().main([ "weylbench", "Logging", "-q", *args ])


def test_no_command():
    assert run() == 0


def test_normal_form(capsys):
    assert run("nf", "--family", "L", "--n", "2", "x2*x1") == 0
    assert capsys.readouterr().out.strip() == "v^-2*x1*x2 + 1 - v^-2"


def test_normal_form_with_inverse_parameter(capsys):
    assert run("nf", "--n", "2", "--param", "q^-1", "x2*x1") == 0
    assert capsys.readouterr().out.strip() == "v^2*x1*x2 - v^2 + 1"


@pytest.mark.parametrize("expr", [ "x1^-1", "x1 x2", "x3" ])
def test_parse_errors_fail_the_run(expr):
    assert run("nf", "--n", "2", expr) == -1


def test_bracket(capsys):
    assert run("bracket", "--preset", "FL", "--n", "3", "x1", "x2") == 0
    assert capsys.readouterr().out.strip() == "x1*x2 - 1"


def test_mutation_as_json(capsys):
    assert run("mutate", "--quiver", "P", "--n", "3", "--at", "0,2", "--json") == 0
    seed = seed_from_json(json.loads(capsys.readouterr().out))
    assert seed == mutate_walk(preset_P(3), (0, 2))


def test_mutation_outside_the_quiver():
    assert run("mutate", "--n", "3", "--at", "9") == -1


def test_classify(capsys, presentation_file):
    assert run("classify", "--file", presentation_file, "--json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["shape"] == "Linear"
    assert data["order"] == [ 2, 4, 1, 3 ]


def test_suite_report_file(tmp_path):
    output = tmp_path / "reports" / "cluster.json"
    assert run("suite", "--name", "cluster", "--n", "3", "--workers", "2",
               "--json", "--output", str(output)) == 0
    report = Report.from_dict(json.loads(output.read_text()))
    assert report.suite == "cluster"
    assert report.passed
    assert report.checks
