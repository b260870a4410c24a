# -*- coding: utf-8 -*-

import argparse

import pytest

from weylbench.common import parse_bool_string
from weylbench.common import parse_list_string
from weylbench.common.util import parse_odd_int
from weylbench.common.util import rational_str
from weylbench.common.util import sorted_exponents
from weylbench.config.config import split_with_keywords


def test_split_with_keywords():
    argv = [ "Logging", "-q", "nf", "--n", "3", "x1", "suite", "--name", "cluster" ]
    assert split_with_keywords(argv, [ "nf", "suite", "Logging" ]) == [
        [ "Logging", "-q" ], [ "nf", "--n", "3", "x1" ], [ "suite", "--name", "cluster" ]
    ]


def test_split_keeps_repeated_keywords():
    assert split_with_keywords([ "nf", "nf" ], [ "nf" ]) == [ [ "nf", "nf" ] ]


@pytest.mark.parametrize(("text", "expected"), [
    ("1,2,3", [ 1, 2, 3 ]),
    ("4", [ 4 ]),
    (",", [ ]),
])
def test_int_lists(text, expected):
    assert parse_list_string(int)(text) == expected


def test_invalid_int_list():
    with pytest.raises(argparse.ArgumentTypeError):
        parse_list_string(int)("1,x")


@pytest.mark.parametrize("text", [ "yes", "T", "1" ])
def test_true_strings(text):
    assert parse_bool_string(text)


def test_unknown_bool_string():
    with pytest.raises(argparse.ArgumentTypeError):
        parse_bool_string("maybe")


@pytest.mark.parametrize(("text", "valid"), [ ("3", True), ("7", True), ("4", False), ("-1", False), ("x", False) ])
def test_odd_sizes(text, valid):
    if valid:
        assert parse_odd_int(text) == int(text)
    else:
        with pytest.raises(argparse.ArgumentTypeError):
            parse_odd_int(text)


def test_rational_rendering():
    assert rational_str(3) == "3"
    assert rational_str(-0.5) == "-1/2"


def test_display_order():
    assert sorted_exponents([ (1, 0), (0, 0), (0, 2), (1, 1) ]) == [ (1, 1), (0, 2), (1, 0), (0, 0) ]
