# -*- coding: utf-8 -*-

"""
Deferred checks and the runner which evaluates them on a worker
pool, collecting the outcomes into a report in task order.
"""

import traceback
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import as_completed
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence

from weylbench.algebra.report import Report
from weylbench.logging import CheckingBar
from weylbench.logging import Logger

DIFFERENCE = "difference"
PREDICATE = "predicate"
CANDIDATES = "candidates"


class Outcome(NamedTuple):
    passed: bool
    witness: Optional[str] = None
    detail: Optional[str] = None


def _is_zero(value: Any) -> bool:
    return value.is_zero() if hasattr(value, "is_zero") else value == 0


class CheckTask(object):
    """
    One statement to verify, evaluated lazily.

    :param name: Concrete instance of the statement.
    :param tag: Anchor of the statement family.
    :param compute: Callable without arguments. Returns the difference
        "LHS - RHS" for DIFFERENCE tasks, a bool or a (bool, witness)
        pair for PREDICATE tasks and a mapping label -> difference for
        CANDIDATES tasks.
    :param kind: One of DIFFERENCE, PREDICATE, CANDIDATES.
    :param detail: Free text copied into the check.
    """

    def __init__(self, name: str, tag: str, compute: Callable[[], Any],
                 kind: str = DIFFERENCE, detail: Optional[str] = None):
        if kind not in (DIFFERENCE, PREDICATE, CANDIDATES):
            raise ValueError(f"Unknown check kind \"{kind}\"!")
        self.name = name
        self.tag = tag
        self.compute = compute
        self.kind = kind
        self.detail = detail

    def evaluate(self) -> Outcome:
        """ Run the computation, an exception fails the check. """

        try:
            value = self.compute()
        except Exception as e:
            return Outcome(False, f"{type(e).__name__}: {e}", "raised")

        if self.kind == DIFFERENCE:
            return Outcome(_is_zero(value), str(value), self.detail)
        if self.kind == PREDICATE:
            passed, witness = value if isinstance(value, tuple) else (value, None)
            return Outcome(bool(passed), witness, self.detail)

        holding = [ label for label, difference in value.items() if _is_zero(difference) ]
        if len(holding) == 1:
            return Outcome(True, None, f"holds: {holding[0]}")
        witness = "; ".join(f"{label}: {difference}" for label, difference in value.items())
        return Outcome(False, witness, f"{len(holding)} readings hold")


def difference(name: str, tag: str, compute: Callable[[], Any], detail: Optional[str] = None) -> CheckTask:
    return CheckTask(name, tag, compute, DIFFERENCE, detail)


def predicate(name: str, tag: str, compute: Callable[[], Any], detail: Optional[str] = None) -> CheckTask:
    return CheckTask(name, tag, compute, PREDICATE, detail)


def candidates(name: str, tag: str, compute: Callable[[], Dict[str, Any]]) -> CheckTask:
    return CheckTask(name, tag, compute, CANDIDATES)


class SuiteRunner(Logger):
    """
    Evaluates check tasks, optionally on a thread pool. Checks
    are numbered by their position in the task list whatever
    the completion order.

    :param workers: Number of worker threads, 1 runs inline.
    :param progress: Display a progress bar.
    """

    def __init__(self, workers: int = 1, progress: bool = False):
        super().__init__()
        if workers < 1:
            raise ValueError(f"Number of workers must be positive, got {workers}!")
        self._workers = workers
        self._progress = progress

    @property
    def workers(self) -> int:
        return self._workers

    def evaluate(self, tasks: Sequence[CheckTask]) -> List[Outcome]:
        """ Outcomes of the tasks, in task order. """

        outcomes: List[Optional[Outcome]] = [ None ] * len(tasks)
        bar = CheckingBar(max=len(tasks)) if self._progress and tasks else None

        if self._workers == 1:
            for idx, task in enumerate(tasks):
                outcomes[idx] = task.evaluate()
                if bar is not None:
                    bar.next()
        else:
            with ThreadPoolExecutor(max_workers=self._workers) as pool:
                futures = { pool.submit(task.evaluate): idx for idx, task in enumerate(tasks) }
                for future in as_completed(futures):
                    idx = futures[future]
                    try:
                        outcomes[idx] = future.result()
                    except Exception as e:
                        self.__l.error(f"Check \"{tasks[idx].name}\" crashed: {e}\n{traceback.format_exc()}")
                        outcomes[idx] = Outcome(False, f"{type(e).__name__}: {e}", "raised")
                    if bar is not None:
                        bar.next()

        if bar is not None:
            bar.finish()
        return outcomes

    def run(self, suite: str, params: Dict[str, Any], tasks: Sequence[CheckTask]) -> Report:
        """ Evaluate the tasks into a new report. """

        self.__l.info(f"Running suite {suite} {params} with {len(tasks)} checks...")
        report = Report(suite, params)
        for task, outcome in zip(tasks, self.evaluate(tasks)):
            self.__l.debug(f"\t[{'pass' if outcome.passed else 'fail'}] {task.tag}: {task.name}")
            report.add(task.name, task.tag, outcome.passed, outcome.witness, outcome.detail)

        failed = len(report.failures())
        if failed:
            self.__l.warning(f"\tSuite {suite} {params}: {failed} checks failed!")
        else:
            self.__l.info(f"\tSuite {suite} {params}: all {len(tasks)} checks passed.")
        return report


def run_tasks(suite: str, params: Dict[str, Any], tasks: Sequence[CheckTask],
              runner: Optional[SuiteRunner] = None) -> Report:
    """ Run with the given runner or inline. """
    return (runner or SuiteRunner()).run(suite, params, tasks)
