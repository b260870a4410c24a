# -*- coding: utf-8 -*-

"""
Systems of the command line front end, one per sub-command.
"""

__all__ = [
    "NormalFormSystem",
    "MutationSystem",
    "BracketSystem",
    "SuiteSystem",
    "ClassifySystem",
]

from weylbench.run.sys.normal_form import NormalFormSystem
from weylbench.run.sys.mutate import MutationSystem
from weylbench.run.sys.bracket import BracketSystem
from weylbench.run.sys.suite import SuiteSystem
from weylbench.run.sys.classify import ClassifySystem
