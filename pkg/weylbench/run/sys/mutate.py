# -*- coding: utf-8 -*-

"""
Mutation system: walks of mutations on the P and type A seeds.
"""

from typing import List, Optional

from weylbench.algebra.cluster import QuantumSeed
from weylbench.algebra.cluster import mutate_seed
from weylbench.algebra.cluster import preset_P
from weylbench.algebra.cluster import preset_dynkinA
from weylbench.algebra.codec import dumps
from weylbench.algebra.codec import seed_to_json
from weylbench.common import parse_list_string
from weylbench.config import Config
from weylbench.config import Configurable
from weylbench.logging import Logger
from weylbench.logging import MutatingBar


class MutationSystem(Logger, Configurable):
    """
    Mutation system, prints the seed reached by a walk of mutations.
    """

    COMMAND_NAME = "mutate"
    """ Name of this command, used for configuration. """

    COMMAND_HELP = "Mutate the P or type A seed along a walk of vertices."
    """ Description of this command. """

    def __init__(self, config: Config):
        super().__init__(config=config)
        self._set_instance()

        self.__l.info("Initializing mutation system...")

        self._seed = None

    @classmethod
    def register_options(cls, parser: Config.Parser):
        """ Register configuration options for this class. """

        option_name = cls._add_config_parameter("quiver")
        parser.add_argument("--quiver",
                            action="store",
                            default="P", type=str,
                            choices=("A", "P"),
                            dest=option_name,
                            help="Start from the seed of the quiver P or of the type A path.")

        option_name = cls._add_config_parameter("n")
        parser.add_argument("--n",
                            action="store",
                            default=3, type=int,
                            metavar=("N"),
                            dest=option_name,
                            help="Odd size of the quiver.")

        option_name = cls._add_config_parameter("at")
        parser.add_argument("--at",
                            action="store",
                            default=[ ], type=parse_list_string(int),
                            metavar=("K1,K2,..."),
                            dest=option_name,
                            help="Vertex labels to mutate at, in order.")

        option_name = cls._add_config_parameter("json")
        parser.add_argument("--json",
                            action="store_true",
                            default=False,
                            dest=option_name,
                            help="Print the seed as JSON.")

    @property
    def seed(self) -> Optional[QuantumSeed]:
        """ Seed reached by the last run. """
        return self._seed

    def initial_seed(self) -> QuantumSeed:
        return preset_P(self.c.n) if self.c.quiver == "P" else preset_dynkinA(self.c.n)

    def walk(self, seed: QuantumSeed, labels: List[int]) -> QuantumSeed:
        """ Mutate at the printed vertex labels in order. """

        for label in labels:
            if not 0 <= label - seed.offset < seed.m:
                raise IndexError(f"Vertex {label} is not one of "
                                 f"{seed.offset} .. {seed.offset + seed.m - 1}!")

        bar = MutatingBar(max=len(labels)) if labels else None
        for label in labels:
            seed = mutate_seed(seed, label - seed.offset)
            if bar is not None:
                bar.next()
        if bar is not None:
            bar.finish()
        return seed

    def process(self) -> int:
        """ Mutate and print the resulting seed. """

        self.__l.info(f"Mutating the {self.c.quiver} seed, n = {self.c.n}, at {self.c.at}...")
        self._seed = self.walk(self.initial_seed(), self.c.at)
        print(dumps(seed_to_json(self._seed)) if self.c.json else self._seed)
        return 0
