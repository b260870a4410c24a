# -*- coding: utf-8 -*-

"""
Command line front end of the workbench.
"""

__all__ = [
    "WeylBenchMain",
]

from weylbench.run.weylbench_main import WeylBenchMain
