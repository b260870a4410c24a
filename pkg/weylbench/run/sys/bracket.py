# -*- coding: utf-8 -*-

"""
Bracket system: Poisson brackets in the preset Poisson algebras.
"""

from typing import Optional

from weylbench.algebra.parser import parse_expression
from weylbench.algebra.parser import poisson_namespace
from weylbench.algebra.poisson import BRACKET_PRESETS
from weylbench.algebra.poisson import CPoly
from weylbench.algebra.poisson import bracket
from weylbench.algebra.poisson import preset_bracket
from weylbench.config import Config
from weylbench.config import Configurable
from weylbench.logging import Logger


class BracketSystem(Logger, Configurable):
    """
    Bracket system, prints {f, g} in one of the bracket presets.
    """

    COMMAND_NAME = "bracket"
    """ Name of this command, used for configuration. """

    COMMAND_HELP = "Evaluate a Poisson bracket in a preset Poisson algebra."
    """ Description of this command. """

    def __init__(self, config: Config):
        super().__init__(config=config)
        self._set_instance()

        self.__l.info("Initializing bracket system...")

        self._result = None

    @classmethod
    def register_options(cls, parser: Config.Parser):
        """ Register configuration options for this class. """

        option_name = cls._add_config_parameter("preset")
        parser.add_argument("--preset",
                            action="store",
                            default="FL", type=str,
                            choices=sorted(BRACKET_PRESETS),
                            dest=option_name,
                            help="Bracket preset to use.")

        option_name = cls._add_config_parameter("n")
        parser.add_argument("--n",
                            action="store",
                            default=3, type=int,
                            metavar=("N"),
                            dest=option_name,
                            help="Size of the preset.")

        option_name = cls._add_config_parameter("f")
        parser.add_argument(option_name,
                            action="store",
                            nargs="?", default="", type=str,
                            metavar=("F"),
                            help="First operand, such as \"x1*x2\".")

        option_name = cls._add_config_parameter("g")
        parser.add_argument(option_name,
                            action="store",
                            nargs="?", default="", type=str,
                            metavar=("G"),
                            help="Second operand, such as \"z2\".")

    @property
    def result(self) -> Optional[CPoly]:
        """ Bracket computed by the last run. """
        return self._result

    def process(self) -> int:
        """ Evaluate the bracket and print it. """

        table = preset_bracket(self.c.preset, self.c.n)
        self.__l.info(f"Evaluating {{{self.c.f}, {self.c.g}}} in {self.c.preset}, n = {self.c.n}...")
        namespace = poisson_namespace(table)
        f = parse_expression(self.c.f, namespace)
        g = parse_expression(self.c.g, namespace)
        self._result = bracket(table, f, g)
        print(self._result)
        return 0
