# -*- coding: utf-8 -*-

"""
Utility functions and classes.
"""

from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple

import argparse as ap


def parse_bool_string(val: str) -> bool:
    """
    Parse string representation of a boolean and
    return its presumed truth value.

    Following inputs are valid "True" values:
        - "True", "true", "T", "t",
        - "Yes", "yes", "Y", "y"
        - "1"

    Following inputs are valid "False" values:
        - "False", "false", "F", "f",
        - "No", "no", "N", "n"
        - "0"

    :param val: String representation of the boolean.

    :raises argparse.ArgumentTypeError: Raised when
        given string is not any of the valid options.

    :return: Returns boolean value of given string.
    """

    if val.lower() in ("true", "t", "yes", "y", "1"):
        return True
    elif val.lower() in ("false", "f", "no", "n", "0"):
        return False
    else:
        raise ap.ArgumentTypeError(f"Unknown boolean value \"{val}\"!")


def parse_list(val: str, typ: Callable, sep: str = ",") -> list:
    """
    Parse separated list of objects into python list.

    :param val: List of object, separated using separator.
    :param typ: Parser for the type used as typ(str).
    :param sep: Separator of list elements.

    :raises argparse.ArgumentTypeError: Raised when
        given string does not represent valid list.

    :return: Returns list of types produced by typ(str).
    """

    try:
        if val == sep:
            return [ ]
        items = val.split(sep)
        result = [ typ(item) for item in items ]
    except Exception:
        raise ap.ArgumentTypeError(f"Invalid list value \"{val}\"!")

    return result


def parse_list_string(typ: Callable, sep: str = ",") -> Callable:
    """ Construct a list parser for given type and separator. """

    def parser(val: str) -> list:
        return parse_list(val=val, typ=typ, sep=sep)

    return parser


def parse_odd_int(val: str) -> int:
    """
    Parse an odd positive integer, used for the cyclic sizes.

    :param val: String representation of the integer.

    :raises argparse.ArgumentTypeError: Raised when the value
        is not an odd positive integer.

    :return: Returns the parsed integer.
    """

    try:
        result = int(val)
    except ValueError:
        raise ap.ArgumentTypeError(f"Invalid integer value \"{val}\"!")

    if result < 1 or result % 2 == 0:
        raise ap.ArgumentTypeError(f"Expected an odd positive integer, got {result}!")

    return result


def rational_str(val: Fraction) -> str:
    """ Render a rational as "num" or "num/den". """
    val = Fraction(val)
    if val.denominator == 1:
        return str(val.numerator)
    return f"{val.numerator}/{val.denominator}"


def unit_vector(m: int, i: int, scale: int = 1) -> Tuple[int, ...]:
    """ Exponent vector with a single non-zero entry. """
    return tuple(scale if k == i else 0 for k in range(m))


def vector_add(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """ Element-wise sum of two exponent vectors. """
    return tuple(x + y for x, y in zip(a, b))


def vector_sub(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """ Element-wise difference of two exponent vectors. """
    return tuple(x - y for x, y in zip(a, b))


def sorted_exponents(exponents: Iterable[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """ Display order for exponent vectors: total degree descending, then lexicographic descending. """
    return sorted(exponents, key=lambda a: (sum(a), a), reverse=True)
