# -*- coding: utf-8 -*-

"""
Normal form system: PBW normal forms of expressions in L_n and C_n.
"""

from typing import Optional

from weylbench.algebra.parser import parse_expression
from weylbench.algebra.parser import parse_scalar
from weylbench.algebra.parser import pbw_namespace
from weylbench.algebra.pbw import NCPoly
from weylbench.algebra.pbw import Presentation
from weylbench.algebra.pbw import preset_cyclic
from weylbench.algebra.pbw import preset_linear
from weylbench.config import Config
from weylbench.config import Configurable
from weylbench.logging import Logger


class NormalFormSystem(Logger, Configurable):
    """
    Normal form system, prints the normal form of one expression.
    """

    COMMAND_NAME = "nf"
    """ Name of this command, used for configuration. """

    COMMAND_HELP = "Print the PBW normal form of an expression."
    """ Description of this command. """

    def __init__(self, config: Config):
        super().__init__(config=config)
        self._set_instance()

        self.__l.info("Initializing normal form system...")

        self._result = None

    @classmethod
    def register_options(cls, parser: Config.Parser):
        """ Register configuration options for this class. """

        option_name = cls._add_config_parameter("family")
        parser.add_argument("--family",
                            action="store",
                            default="L", type=str,
                            choices=("L", "C"),
                            dest=option_name,
                            help="Use the linear L_n or the cyclic C_n presentation.")

        option_name = cls._add_config_parameter("n")
        parser.add_argument("--n",
                            action="store",
                            default=2, type=int,
                            metavar=("N"),
                            dest=option_name,
                            help="Number of generators.")

        option_name = cls._add_config_parameter("param")
        parser.add_argument("--param",
                            action="store",
                            default="q", type=str,
                            metavar=("EXPR"),
                            dest=option_name,
                            help="Parameter of the presentation, such as q^-1.")

        option_name = cls._add_config_parameter("expr")
        parser.add_argument(option_name,
                            action="store",
                            nargs="?", default="", type=str,
                            metavar=("EXPR"),
                            help="Expression to normalize, such as \"x3*x2*x1\".")

    @property
    def result(self) -> Optional[NCPoly]:
        """ Normal form computed by the last run. """
        return self._result

    def presentation(self) -> Presentation:
        parameter = parse_scalar(self.c.param)
        if self.c.family == "L":
            return preset_linear(self.c.n, parameter)
        return preset_cyclic(self.c.n, parameter)

    def process(self) -> int:
        """ Normalize the expression and print it. """

        presentation = self.presentation()
        self.__l.info(f"Normalizing \"{self.c.expr}\" in {presentation}...")
        self._result = parse_expression(self.c.expr, pbw_namespace(presentation))
        print(self._result)
        return 0
