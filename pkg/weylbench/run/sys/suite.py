# -*- coding: utf-8 -*-

"""
Suite system: runs the verification suites and renders their reports.
"""

import pathlib
from typing import List, Optional

from weylbench.algebra.codec import dumps
from weylbench.algebra.report import Report
from weylbench.algebra.report import merge_reports
from weylbench.common import parse_list_string
from weylbench.config import Config
from weylbench.config import Configurable
from weylbench.config import WeylBenchConfig
from weylbench.logging import Logger
from weylbench.suites import SUITE_NAMES
from weylbench.suites import SuiteRunner
from weylbench.suites import suite_all
from weylbench.suites import suite_cluster
from weylbench.suites import suite_embedding
from weylbench.suites import suite_poisson
from weylbench.suites import suite_structure


class SuiteSystem(Logger, Configurable):
    """
    Suite system, runs one or all suites and reports the outcome.
    """

    COMMAND_NAME = "suite"
    """ Name of this command, used for configuration. """

    COMMAND_HELP = "Run verification suites."
    """ Description of this command. """

    def __init__(self, config: Config):
        super().__init__(config=config)
        self._set_instance()

        self.__l.info("Initializing suite system...")

        self._report = None

    @classmethod
    def register_options(cls, parser: Config.Parser):
        """ Register configuration options for this class. """

        option_name = cls._add_config_parameter("name")
        parser.add_argument("--name",
                            action="store",
                            default="all", type=str,
                            choices=SUITE_NAMES,
                            dest=option_name,
                            help="Suite to run.")

        option_name = cls._add_config_parameter("family")
        parser.add_argument("--family",
                            action="store",
                            default=None, type=str,
                            choices=("L", "C"),
                            dest=option_name,
                            help="Family for the structure suite, both when not given.")

        option_name = cls._add_config_parameter("n")
        parser.add_argument("--n",
                            action="store",
                            default=None, type=int,
                            metavar=("N"),
                            dest=option_name,
                            help="Size to run at, the configured sizes when not given.")

        option_name = cls._add_config_parameter("lam")
        parser.add_argument("--lam",
                            action="store",
                            default=None, type=parse_list_string(str),
                            metavar=("EXPR1,EXPR2,..."),
                            dest=option_name,
                            help="Constants of the splitting identity.")

        option_name = cls._add_config_parameter("workers")
        parser.add_argument("--workers",
                            action="store",
                            default=WeylBenchConfig.DEFAULT_WORKERS, type=int,
                            metavar=("W"),
                            dest=option_name,
                            help="Number of worker threads evaluating the checks.")

        option_name = cls._add_config_parameter("json")
        parser.add_argument("--json",
                            action="store_true",
                            default=False,
                            dest=option_name,
                            help="Render the report as JSON.")

        option_name = cls._add_config_parameter("output")
        parser.add_argument("--output",
                            action="store",
                            default=None, type=str,
                            metavar=("PATH"),
                            dest=option_name,
                            help="Write the report to the given file instead of the standard output.")

    @property
    def report(self) -> Optional[Report]:
        """ Report of the last run. """
        return self._report

    def _sizes(self, configured) -> List[int]:
        return list(configured) if self.c.n is None else [ self.c.n ]

    def run_suite(self, runner: SuiteRunner) -> Report:
        """ Run the requested suite at the requested sizes. """

        name = self.c.name
        if name == "all":
            return suite_all(self.c.n, self.c.lam, runner)

        if name == "structure":
            families = [ self.c.family ] if self.c.family else [ "L", "C" ]
            reports = [ ]
            for family in families:
                configured = WeylBenchConfig.STRUCTURE_SIZES_L if family == "L" else WeylBenchConfig.STRUCTURE_SIZES_C
                reports += [ suite_structure(family, n, runner) for n in self._sizes(configured) ]
        elif name == "embedding":
            reports = [ suite_embedding(n, self.c.lam, runner) for n in self._sizes(WeylBenchConfig.EMBEDDING_SIZES) ]
        elif name == "cluster":
            reports = [ suite_cluster(n, runner) for n in self._sizes(WeylBenchConfig.CLUSTER_SIZES) ]
        else:
            reports = [ suite_poisson(n, runner) for n in self._sizes(WeylBenchConfig.POISSON_SIZES) ]

        if len(reports) == 1:
            return reports[0]
        return merge_reports(name, reports)

    def render(self, report: Report) -> str:
        return dumps(report.to_dict()) if self.c.json else report.to_string()

    def process(self) -> int:
        """ Run, render and return 0 when every check passed, 1 otherwise. """

        runner = SuiteRunner(workers=self.c.workers, progress=True)
        self._report = self.run_suite(runner)
        text = self.render(self._report)

        if self.c.output:
            pathlib.Path(self.c.output).parent.mkdir(parents=True, exist_ok=True)
            with open(self.c.output, "w") as f:
                f.write(text + "\n")
            self.__l.info(f"\tReport written to {self.c.output}.")
        else:
            print(text)

        if self._report.passed:
            self.__l.info(f"\t{self._report.summary()}")
            return 0
        self.__l.warning(f"\t{self._report.summary()}, {len(self._report.failures())} failed!")
        return 1
