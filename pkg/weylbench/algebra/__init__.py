# -*- coding: utf-8 -*-

"""
Exact algebra kernels: Laurent scalars, PBW presentations,
quantum tori and seeds, Poisson brackets, the expression parser
and the JSON codecs.
"""

__all__ = [
    "LaurentScalar",
    "Q",
    "V",
    "qpow",
    "exact_divide",
    "specialize",

    "Presentation",
    "NCPoly",
    "HomSpec",
    "multiply",
    "normal_form",
    "pbw_check",
    "diamond_oracle",
    "single_parameter",
    "preset_linear",
    "preset_cyclic",
    "z_element",
    "omega",
    "commutator",
    "q_commutator",
    "apply_hom",
    "check_hom",

    "ClassificationResult",
    "classify",

    "SkewMatrix",
    "QuantumTorus",
    "TorusElement",
    "torus_mul",
    "normalized_monomial",
    "left_divide",
    "right_divide",

    "ExchangeMatrix",
    "QuantumSeed",
    "mutate_matrix",
    "mutate_seed",
    "mutate_walk",
    "preset_P",
    "preset_dynkinA",
    "generate_w",
    "rotation_check",

    "CRing",
    "CPoly",
    "BracketTable",
    "bracket",
    "jacobi_check",
    "preset_bracket",
    "semiclassical_limit",
    "lambda_kernel",
    "principal_membership",
    "principal_membership_oracle",
    "kernel_matches_oracle",

    "Check",
    "Report",
    "merge_reports",

    "parse",
    "parse_expression",
    "parse_scalar",
    "pbw_namespace",
    "torus_namespace",
    "poisson_namespace",
]

from weylbench.algebra.scalar import LaurentScalar
from weylbench.algebra.scalar import Q
from weylbench.algebra.scalar import V
from weylbench.algebra.scalar import qpow
from weylbench.algebra.scalar import exact_divide
from weylbench.algebra.scalar import specialize

from weylbench.algebra.pbw import Presentation
from weylbench.algebra.pbw import NCPoly
from weylbench.algebra.pbw import HomSpec
from weylbench.algebra.pbw import multiply
from weylbench.algebra.pbw import normal_form
from weylbench.algebra.pbw import pbw_check
from weylbench.algebra.pbw import diamond_oracle
from weylbench.algebra.pbw import single_parameter
from weylbench.algebra.pbw import preset_linear
from weylbench.algebra.pbw import preset_cyclic
from weylbench.algebra.pbw import z_element
from weylbench.algebra.pbw import omega
from weylbench.algebra.pbw import commutator
from weylbench.algebra.pbw import q_commutator
from weylbench.algebra.pbw import apply_hom
from weylbench.algebra.pbw import check_hom

from weylbench.algebra.classify import ClassificationResult
from weylbench.algebra.classify import classify

from weylbench.algebra.qtorus import SkewMatrix
from weylbench.algebra.qtorus import QuantumTorus
from weylbench.algebra.qtorus import TorusElement
from weylbench.algebra.qtorus import torus_mul
from weylbench.algebra.qtorus import normalized_monomial
from weylbench.algebra.qtorus import left_divide
from weylbench.algebra.qtorus import right_divide

from weylbench.algebra.cluster import ExchangeMatrix
from weylbench.algebra.cluster import QuantumSeed
from weylbench.algebra.cluster import mutate_matrix
from weylbench.algebra.cluster import mutate_seed
from weylbench.algebra.cluster import mutate_walk
from weylbench.algebra.cluster import preset_P
from weylbench.algebra.cluster import preset_dynkinA
from weylbench.algebra.cluster import generate_w
from weylbench.algebra.cluster import rotation_check

from weylbench.algebra.poisson import CRing
from weylbench.algebra.poisson import CPoly
from weylbench.algebra.poisson import BracketTable
from weylbench.algebra.poisson import bracket
from weylbench.algebra.poisson import jacobi_check
from weylbench.algebra.poisson import preset_bracket
from weylbench.algebra.poisson import semiclassical_limit
from weylbench.algebra.poisson import lambda_kernel
from weylbench.algebra.poisson import principal_membership
from weylbench.algebra.poisson import principal_membership_oracle
from weylbench.algebra.poisson import kernel_matches_oracle

from weylbench.algebra.report import Check
from weylbench.algebra.report import Report
from weylbench.algebra.report import merge_reports

from weylbench.algebra.parser import parse
from weylbench.algebra.parser import parse_expression
from weylbench.algebra.parser import parse_scalar
from weylbench.algebra.parser import pbw_namespace
from weylbench.algebra.parser import torus_namespace
from weylbench.algebra.parser import poisson_namespace
