# -*- coding: utf-8 -*-

"""
Logging utilities and classes.
"""

__all__ = [
    "LoggingConfigurator",

    "LogMeta",
    "Logger",
    "profiled",

    "CheckingBar",
    "LoggingBar",
    "MutatingBar",
]

from weylbench.logging.logging import LoggingConfigurator

from weylbench.logging.logger import LogMeta
from weylbench.logging.logger import Logger
from weylbench.logging.logger import profiled

from weylbench.logging.logger import CheckingBar
from weylbench.logging.logger import LoggingBar
from weylbench.logging.logger import MutatingBar
