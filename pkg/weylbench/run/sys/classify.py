# -*- coding: utf-8 -*-

"""
Classification system: recognizes presentations read from JSON files.
"""

from typing import Optional

from weylbench.algebra.classify import ClassificationResult
from weylbench.algebra.classify import classify
from weylbench.algebra.codec import dumps
from weylbench.algebra.codec import load_presentation
from weylbench.config import Config
from weylbench.config import Configurable
from weylbench.logging import Logger


class ClassifySystem(Logger, Configurable):
    """
    Classification system, recognizes a presentation as linear or
    cyclic and prints the change of variables.
    """

    COMMAND_NAME = "classify"
    """ Name of this command, used for configuration. """

    COMMAND_HELP = "Classify a presentation given as a JSON file."
    """ Description of this command. """

    def __init__(self, config: Config):
        super().__init__(config=config)
        self._set_instance()

        self.__l.info("Initializing classification system...")

        self._result = None

    @classmethod
    def register_options(cls, parser: Config.Parser):
        """ Register configuration options for this class. """

        option_name = cls._add_config_parameter("file")
        parser.add_argument("--file",
                            action="store",
                            default=None, type=str,
                            metavar=("PATH"),
                            dest=option_name,
                            help="Presentation in the JSON schema.")

        option_name = cls._add_config_parameter("json")
        parser.add_argument("--json",
                            action="store_true",
                            default=False,
                            dest=option_name,
                            help="Print the result as JSON.")

    @property
    def result(self) -> Optional[ClassificationResult]:
        """ Classification computed by the last run. """
        return self._result

    def process(self) -> int:
        """ Load the presentation, classify it and print the result. """

        if not self.c.file:
            self.__l.warning("\tNo presentation file specified!")
            return 0

        self.__l.info(f"Classifying presentation from {self.c.file}...")
        presentation = load_presentation(self.c.file)
        self._result = classify(presentation)
        self.__l.info(f"\tRecognized {self._result.shape} presentation.")
        print(dumps(self._result.to_dict()) if self.c.json else self._result)
        return 0
