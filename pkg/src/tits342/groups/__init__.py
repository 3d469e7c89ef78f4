"""Combinatorial group theory engines."""

from .cosets import (
    DEFAULT_MAX_COSETS,
    CosetLimitExceeded,
    CosetTable,
    InconsistentTable,
    group_order,
    subgroup_index,
    todd_coxeter,
)
from .freeprod import free_product_normal_form, format_normal_form, same_element
from .lowindex import SearchLimitExceeded, low_index_subgroups, subgroups_up_to_index
from .presentation import (
    Presentation,
    PresentationSyntaxError,
    cyclic_reduce,
    free_reduce,
    inverse,
    parse_presentation,
    parse_word_expr,
    triangle_presentation,
)
from .rewriting import SchreierData, abelianization, reidemeister_schreier
from .stallings import StallingsGraph, f2_witness_check, f2_witness_search, fold

__all__ = [
    "DEFAULT_MAX_COSETS",
    "CosetLimitExceeded",
    "CosetTable",
    "InconsistentTable",
    "Presentation",
    "PresentationSyntaxError",
    "SchreierData",
    "SearchLimitExceeded",
    "StallingsGraph",
    "abelianization",
    "cyclic_reduce",
    "f2_witness_check",
    "f2_witness_search",
    "fold",
    "format_normal_form",
    "free_product_normal_form",
    "free_reduce",
    "group_order",
    "inverse",
    "low_index_subgroups",
    "parse_presentation",
    "parse_word_expr",
    "reidemeister_schreier",
    "same_element",
    "subgroup_index",
    "subgroups_up_to_index",
    "todd_coxeter",
    "triangle_presentation",
]
