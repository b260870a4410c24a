# -*- coding: utf-8 -*-

"""
Command line front end: normal forms, mutations, brackets,
classification and the verification suites.
"""

__license__ = "MIT"
__version__ = "0.1.0"
__status__ = "Development"

# Common:
import logging
import sys
from typing import List
import traceback

# Utilities:
from weylbench.config import Config
from weylbench.config import Configurable
from weylbench.logging import Logger

# Systems:
from weylbench.logging import LoggingConfigurator
from weylbench.run.sys import BracketSystem
from weylbench.run.sys import ClassifySystem
from weylbench.run.sys import MutationSystem
from weylbench.run.sys import NormalFormSystem
from weylbench.run.sys import SuiteSystem


class WeylBenchMain(Logger, Configurable):
    """
    Wrapper for the main function and parameter parsing.
    """

    COMMAND_NAME = "root"
    """ Name of this command, used for configuration. Using the root namespace. """

    SYSTEMS = (
        NormalFormSystem,
        MutationSystem,
        BracketSystem,
        SuiteSystem,
        ClassifySystem,
    )
    """ Systems in the order they are run. """

    def __init__(self):
        pass

    @classmethod
    def register_options(cls, parser: Config.Parser):
        """ Register configuration options for this class. """

    def print_banner(self):
        print("""
        WeylBench - exact verification workbench for connected quantized
                    Weyl algebras, quantum cluster algebras and their
                    Poisson limits.

        Version:    0.1.0
        License:    MIT

        For further information about script parameters, please see the
          --help or -h parameter, or <command> --help for a sub-command.

        Requires following libraries to run:
          * numpy, pandas, progress, sympy
        """, file=sys.stderr)

    def main(self, argv: List[str]) -> int:
        """
        Main function which contains:
            * Parameter processing
            * Running the requested systems in order
            * Error reporting

        :param argv: Argument vector including the app name.

        :return: Returns 0 on success, 1 when some check failed
            and -1 when an exception occurred.
        """

        # Initialize configuration.
        config = Config()

        # Register systems.
        WeylBenchMain.register_config(config)
        LoggingConfigurator.register_config(config)
        for system in self.SYSTEMS:
            system.register_config(config)

        config.init_options()

        # Parse arguments passed from the command line.
        argv = argv[1:]
        config.parse_args(argv)

        # Initialize configuration of this application.
        super().__init__(config=config)
        self._set_instance()

        # Enable requested logging.
        logging_config = LoggingConfigurator(config)

        # Display banner if very verbose.
        if logging_config.logging_level <= logging.DEBUG:
            self.print_banner()

        # Initialize systems.
        try:
            systems = [ system(config) for system in self.SYSTEMS ]
        except Exception as e:
            self.__l.error(f"Exception occurred when initializing systems! : " \
                           f"\n{e}\n{traceback.format_exc()}")
            return -1

        requested = [ system for system in systems if system.was_requested() ]
        if not requested:
            self.__l.warning("No command specified, see --help for the available commands.")
            return 0

        # Run the requested systems.
        status = 0
        for system in requested:
            try:
                status = max(status, system.process())
            except Exception as e:
                self.__l.error(f"Exception occurred when running {system.COMMAND_NAME}!\n"
                               f"{LoggingConfigurator.generate_exception_info(e)}")
                return -1

        return status


def main() -> int:
    weylbench_main = WeylBenchMain()
    return weylbench_main.main(sys.argv)


if __name__ == "__main__":
    exit(main())
