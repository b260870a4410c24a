# -*- coding: utf-8 -*-

"""
Exceptions raised by the workbench kernels.
"""

from typing import Optional


class WorkbenchError(Exception):
    """ Base class of all errors raised by the workbench. """
    pass


class NotDivisible(WorkbenchError, ArithmeticError):
    """
    Raised when an exact division has no solution in the
    coefficient ring or in the quantum torus.
    """
    pass


class NonPBW(WorkbenchError):
    """ Raised when a presentation fails the PBW criterion. """
    pass


class NotSingleParameter(WorkbenchError):
    """ Raised when the q-table does not reduce to {p, p^-1}. """
    pass


class NotConnected(WorkbenchError):
    """ Raised when the generator graph is disconnected. """
    pass


class DegreeExceeded(WorkbenchError):
    """ Raised when a vertex of the generator graph has degree above two. """
    pass


class NotRescalable(WorkbenchError):
    """ Raised when a relation constant is not a unit multiple of 1 - p. """
    pass


class IncompatibleSeed(WorkbenchError):
    """ Raised when B and Lambda do not form a compatible pair. """
    pass


class NotCommutativeAtOne(WorkbenchError):
    """ Raised when a presentation does not become commutative at q = 1. """
    pass


class ParseError(WorkbenchError):
    """
    Syntax error produced by the expression parser.

    :param code: Short machine readable error code.
    :param position: Byte offset of the offending token.
    :param message: Human readable description.
    """

    def __init__(self, code: str, position: Optional[int], message: str):
        self.code = code
        self.position = position
        self.message = message
        where = f" at offset {position}" if position is not None else ""
        super().__init__(f"{code}{where}: {message}")
