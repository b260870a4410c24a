# -*- coding: utf-8 -*-

"""
Workbench common utilities and classes.
"""

__all__ = [
    "Cache",
    "update_dict_recursively",

    "Profiler",
    "ProfTimer",

    "WorkbenchError",
    "NotDivisible",
    "NonPBW",
    "NotSingleParameter",
    "NotConnected",
    "DegreeExceeded",
    "NotRescalable",
    "IncompatibleSeed",
    "NotCommutativeAtOne",
    "ParseError",

    "parse_bool_string",
    "parse_list",
    "parse_list_string",
    "parse_odd_int",
    "rational_str",
    "sorted_exponents",
    "unit_vector",
    "vector_add",
    "vector_sub",
]

from weylbench.common.cache import Cache
from weylbench.common.cache import update_dict_recursively

from weylbench.common.profiler import Profiler
from weylbench.common.profiler import ProfTimer

from weylbench.common.errors import WorkbenchError
from weylbench.common.errors import NotDivisible
from weylbench.common.errors import NonPBW
from weylbench.common.errors import NotSingleParameter
from weylbench.common.errors import NotConnected
from weylbench.common.errors import DegreeExceeded
from weylbench.common.errors import NotRescalable
from weylbench.common.errors import IncompatibleSeed
from weylbench.common.errors import NotCommutativeAtOne
from weylbench.common.errors import ParseError

from weylbench.common.util import parse_bool_string
from weylbench.common.util import parse_list
from weylbench.common.util import parse_list_string
from weylbench.common.util import parse_odd_int
from weylbench.common.util import rational_str
from weylbench.common.util import sorted_exponents
from weylbench.common.util import unit_vector
from weylbench.common.util import vector_add
from weylbench.common.util import vector_sub
