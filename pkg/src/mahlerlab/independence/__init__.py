"""Integer relation searches corroborating algebraic independence."""
from .lattice import lll_reduce
from .relations import (
    DEFAULT_MAX_MONOMIALS, MonomialLimitError, PrecisionError, RelationQuery, RelationReport,
    RelationValue, find_integer_relation, monomial_count, monomial_exponents, monomial_vector,
    normalize_relation, precision_floor, residual, search_algebraic_relation, verify_relation,
)

__all__ = [
    "DEFAULT_MAX_MONOMIALS", "MonomialLimitError", "PrecisionError", "RelationQuery",
    "RelationReport", "RelationValue", "find_integer_relation", "lll_reduce", "monomial_count",
    "monomial_exponents", "monomial_vector", "normalize_relation", "precision_floor", "residual",
    "search_algebraic_relation", "verify_relation",
]
