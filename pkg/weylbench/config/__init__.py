# -*- coding: utf-8 -*-

"""
Workbench configuration.
"""

__all__ = [
    "Config",
    "Configurable",

    "WeylBenchConfig",
]

from weylbench.config.config import Config
from weylbench.config.config import Configurable

from weylbench.config.static import WeylBenchConfig
