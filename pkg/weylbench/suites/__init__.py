# -*- coding: utf-8 -*-

"""
Verification suites over the algebra kernels and the
runner evaluating their checks.
"""

__all__ = [
    "CheckTask",
    "Outcome",
    "SuiteRunner",
    "run_tasks",

    "suite_structure",
    "suite_embedding",
    "check_v_embedding",
    "check_splitting",
    "suite_cluster",
    "suite_poisson",
    "suite_all",
    "SUITE_NAMES",
]

from typing import List, Optional, Sequence

from weylbench.algebra.report import Report
from weylbench.algebra.report import merge_reports
from weylbench.config import WeylBenchConfig

from weylbench.suites.runner import CheckTask
from weylbench.suites.runner import Outcome
from weylbench.suites.runner import SuiteRunner
from weylbench.suites.runner import run_tasks

from weylbench.suites.structure import suite_structure
from weylbench.suites.embedding import suite_embedding
from weylbench.suites.embedding import check_v_embedding
from weylbench.suites.embedding import check_splitting
from weylbench.suites.cluster import suite_cluster
from weylbench.suites.poisson import suite_poisson

SUITE_NAMES = ("structure", "embedding", "cluster", "poisson", "all")


def suite_all(n: Optional[int] = None, constants: Optional[Sequence[str]] = None,
              runner: Optional[SuiteRunner] = None) -> Report:
    """
    Every suite, merged into one report. With n given, each suite
    runs at n where its size and parity preconditions hold, otherwise
    over the configured size sets.
    """

    def sizes(configured: Sequence[int], odd: bool, lowest: int) -> List[int]:
        if n is None:
            return list(configured)
        return [ n ] if n >= lowest and (not odd or n % 2 == 1) else [ ]

    reports = [ ]
    for k in sizes(WeylBenchConfig.STRUCTURE_SIZES_L, odd=False, lowest=2):
        reports.append(suite_structure("L", k, runner))
    for k in sizes(WeylBenchConfig.STRUCTURE_SIZES_C, odd=True, lowest=3):
        reports.append(suite_structure("C", k, runner))
    for k in sizes(WeylBenchConfig.EMBEDDING_SIZES, odd=False, lowest=2):
        reports.append(suite_embedding(k, constants, runner))
    for k in sizes(WeylBenchConfig.CLUSTER_SIZES, odd=True, lowest=3):
        reports.append(suite_cluster(k, runner))
    for k in sizes(WeylBenchConfig.POISSON_SIZES, odd=False, lowest=2):
        reports.append(suite_poisson(k, runner))

    params = { } if n is None else { "n": n }
    return merge_reports("all", reports, params)
