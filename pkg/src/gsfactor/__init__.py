"""Closed-form factorization of g_s(y) = y^n + (1-y)^n - s over F_q, n = (q+1)/2.

The library builds finite fields with deterministic canonical choices,
factors every member of the family by case analysis (no polynomial
factorization involved), and ships a generic seeded factorization engine
used solely to cross-check the closed forms.
"""

from .dickson import DicksonCtx, build_ctx, build_f, build_g
from .errors import DomainError, InvariantError
from .factorizer import (
    TABLE_DEGREES,
    CaseKind,
    CaseTag,
    NormClass,
    SignClass,
    classify,
    constant_terms,
    cubic_norm_complement,
    degree_table_check,
    factor_closed_form,
    factor_shape_poly,
    half_sum_s_values,
    irreducible_s_values,
    is_irreducible_gs,
    norm_residuacity,
    sign_class,
    verify_against_oracle,
)
from .ffield import (
    FieldCtx,
    FieldElement,
    elements,
    make_field,
    make_field_q,
    mult_order,
    quad_char,
    quadratic_extension,
    sqrt,
)
from .polyring import (
    DEFAULT_SEED,
    Factorization,
    Poly,
    decompose_by,
    factorize,
    is_irreducible,
    poly,
    poly_str,
    roots_in_field,
)
from .recurrence import (
    RecurrenceProfile,
    adjacent_pair,
    build_profile,
    full_period_sequence,
    term,
)

__version__ = "0.1.0"

__all__ = [
    "CaseKind",
    "CaseTag",
    "DicksonCtx",
    "DomainError",
    "DEFAULT_SEED",
    "Factorization",
    "FieldCtx",
    "FieldElement",
    "InvariantError",
    "NormClass",
    "Poly",
    "RecurrenceProfile",
    "SignClass",
    "TABLE_DEGREES",
    "adjacent_pair",
    "build_ctx",
    "build_f",
    "build_g",
    "build_profile",
    "classify",
    "constant_terms",
    "cubic_norm_complement",
    "decompose_by",
    "degree_table_check",
    "elements",
    "factor_closed_form",
    "factor_shape_poly",
    "factorize",
    "full_period_sequence",
    "half_sum_s_values",
    "irreducible_s_values",
    "is_irreducible",
    "is_irreducible_gs",
    "make_field",
    "make_field_q",
    "mult_order",
    "norm_residuacity",
    "poly",
    "poly_str",
    "quad_char",
    "quadratic_extension",
    "roots_in_field",
    "sign_class",
    "sqrt",
    "term",
    "verify_against_oracle",
]
