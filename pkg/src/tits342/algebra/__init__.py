"""Exact arithmetic kernels."""

from .cyclotomic import (
    CyclotomicNumber,
    ONE,
    SQRT2,
    SQRT3,
    SQRT6,
    I,
    ZERO,
    UnknownConstant,
    cyc_constant,
    two_cos,
    zeta,
)
from .matrix import DUAL_ONE, DUAL_ZERO, EPSILON, DualNumber, Matrix2, dual_matrix_pow
from .polynomial import Polynomial, poly_divrem
from .snf import AbelianGroupStructure, in_row_lattice, smith_diagonal, snf

__all__ = [
    "AbelianGroupStructure",
    "CyclotomicNumber",
    "DUAL_ONE",
    "DUAL_ZERO",
    "DualNumber",
    "EPSILON",
    "I",
    "Matrix2",
    "ONE",
    "Polynomial",
    "SQRT2",
    "SQRT3",
    "SQRT6",
    "UnknownConstant",
    "ZERO",
    "cyc_constant",
    "dual_matrix_pow",
    "in_row_lattice",
    "poly_divrem",
    "smith_diagonal",
    "snf",
    "two_cos",
    "zeta",
]
