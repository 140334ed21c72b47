"""catminors: exact-arithmetic toolkit for catalecticant matrices, their minor
ideals, and the symmetric-group tableau calculus that certifies when those
ideals coincide."""

from .cat import (
    FormCoefficients,
    GenericCatalecticant,
    build_generic,
    compare_ideals,
    hilbert_function,
    ideal_graded_piece,
    power_sum_form,
    rewrite_2x2_minor,
    secant_vanishing_check,
    specialize,
)
from .combinat import (
    canonical_tableau,
    enumerate_generic_monomials,
    enumerate_multisets,
    irrep_dimension,
    multiset_union,
    partitions_up_to,
)
from .linalg import EXACT, RowSpace, SparseVector, compare, rank
from .poly import GradedBasis, Poly, minor_det, to_vector
from .symgrp import (
    GenericFlattening,
    WElement,
    act,
    check_1flattening,
    circled_expand,
    compare_generic,
    generic_flattening,
    generic_ideal_space,
    multiplicity,
    specialize_weight,
    tableau_normalize,
    young_apply,
)

__version__ = "0.1.0"

__all__ = [
    "EXACT",
    "FormCoefficients",
    "GenericCatalecticant",
    "GenericFlattening",
    "GradedBasis",
    "Poly",
    "RowSpace",
    "SparseVector",
    "WElement",
    "act",
    "build_generic",
    "canonical_tableau",
    "check_1flattening",
    "circled_expand",
    "compare",
    "compare_generic",
    "compare_ideals",
    "enumerate_generic_monomials",
    "enumerate_multisets",
    "generic_flattening",
    "generic_ideal_space",
    "hilbert_function",
    "ideal_graded_piece",
    "irrep_dimension",
    "minor_det",
    "multiplicity",
    "multiset_union",
    "partitions_up_to",
    "power_sum_form",
    "rank",
    "rewrite_2x2_minor",
    "secant_vanishing_check",
    "specialize",
    "specialize_weight",
    "tableau_normalize",
    "to_vector",
    "young_apply",
]
