# -*- coding: utf-8 -*-

import threading
import time

import pytest

from weylbench.suites import SuiteRunner
from weylbench.suites import check_splitting
from weylbench.suites import check_v_embedding
from weylbench.suites import suite_all
from weylbench.suites import suite_cluster
from weylbench.suites import suite_embedding
from weylbench.suites import suite_poisson
from weylbench.suites import suite_structure
from weylbench.suites.runner import candidates
from weylbench.suites.runner import difference
from weylbench.suites.runner import predicate


def _describe(report) -> str:
    return "\n".join(str(check) for check in report.failures())


@pytest.mark.parametrize(("family", "n"), [ ("L", 2), ("L", 3), ("L", 4), ("C", 3), ("C", 5) ])
def test_structure(runner, family, n):
    report = suite_structure(family, n, runner)
    assert report.checks
    assert report.passed, _describe(report)


def test_structure_rejects_sizes(runner):
    with pytest.raises(ValueError):
        suite_structure("C", 4, runner)
    with pytest.raises(ValueError):
        suite_structure("X", 3, runner)


@pytest.mark.parametrize("n", [ 2, 3, 4 ])
def test_embedding(runner, n):
    report = suite_embedding(n, runner=runner)
    assert report.passed, _describe(report)


def test_v_embedding_relations(runner):
    report = check_v_embedding(3, runner)
    assert report.suite == "embedding"
    assert any(check.tag == "v-relation" for check in report.checks)
    assert report.passed, _describe(report)
    with pytest.raises(ValueError):
        check_v_embedding(1, runner)


def test_embedding_with_constants(runner):
    report = suite_embedding(5, [ "0", "q^-1", "3/2" ], runner)
    assert report.params["lam"] == [ "0", "q^-1", "3/2" ]
    assert len([ check for check in report.checks if check.tag == "splitting" ]) == 3
    assert report.passed, _describe(report)


@pytest.mark.parametrize("lam", [ 0, 1, -2 ])
def test_splitting_identity(lam):
    assert check_splitting(3, lam)
    assert check_splitting(7, lam)


def test_splitting_identity_needs_odd_size():
    with pytest.raises(ValueError):
        check_splitting(4, 0)


@pytest.mark.parametrize("n", [ 3, 5 ])
def test_cluster(runner, n):
    report = suite_cluster(n, runner)
    assert report.passed, _describe(report)
    assert len([ check for check in report.checks if check.tag == "compatibility" ]) == 2


def test_cluster_rejects_even_size(runner):
    with pytest.raises(ValueError):
        suite_cluster(4, runner)


@pytest.mark.parametrize("n", [ 2, 3, 4 ])
def test_poisson(runner, n):
    report = suite_poisson(n, runner)
    assert report.passed, _describe(report)


def test_poisson_rejects_small_size(runner):
    with pytest.raises(ValueError):
        suite_poisson(1, runner)


def test_all_at_one_size():
    report = suite_all(3, runner=SuiteRunner(workers=2))
    suites = { check.tag.split(".")[0] for check in report.checks }
    assert suites == { "structure", "embedding", "cluster", "poisson" }
    assert report.params == { "n": 3 }
    assert report.passed, _describe(report)


def test_all_skips_suites_outside_their_sizes():
    report = suite_all(2, runner=SuiteRunner(workers=1))
    suites = { check.tag.split(".")[0] for check in report.checks }
    assert suites == { "structure", "embedding", "poisson" }


# --- Runner ---


def _slow(delay: float, value: int) -> int:
    time.sleep(delay)
    return value


def test_runner_keeps_task_order():
    tasks = [ difference(f"task {k}", "order", lambda k=k: _slow(0.01 * (5 - k), 0)) for k in range(5) ]
    report = SuiteRunner(workers=3).run("order", { }, tasks)
    assert [ check.name for check in report.checks ] == [ f"task {k}" for k in range(5) ]
    assert [ check.id for check in report.checks ] == [ 1, 2, 3, 4, 5 ]


def test_runner_uses_several_threads():
    seen = set()
    barrier = threading.Barrier(2, timeout=5)

    def record():
        seen.add(threading.get_ident())
        barrier.wait()
        return 0

    tasks = [ difference(f"task {k}", "threads", record) for k in range(2) ]
    assert SuiteRunner(workers=2).run("threads", { }, tasks).passed
    assert len(seen) == 2


def test_exceptions_fail_their_check(runner):
    def broken():
        raise ZeroDivisionError("division by zero")

    tasks = [
        difference("ok", "mixed", lambda: 0),
        difference("broken", "mixed", broken),
        predicate("predicate", "mixed", lambda: (False, "x1 != x2")),
        candidates("readings", "mixed", lambda: { "a": 1, "b": 0 }),
    ]
    report = runner.run("mixed", { }, tasks)
    statuses = [ check.passed for check in report.checks ]
    assert statuses == [ True, False, False, True ]
    assert report.checks[1].witness == "ZeroDivisionError: division by zero"
    assert report.checks[2].witness == "x1 != x2"
    assert report.checks[3].detail == "holds: b"


def test_runner_needs_a_worker():
    with pytest.raises(ValueError):
        SuiteRunner(workers=0)
