"""Monomial ideal calculus: contractedness, saturated-family classes,
integral closure via Newton polyhedra, staircase factorization, and
power-filtration Hilbert functions."""

from .classes import (
    CFactorization,
    FamilyError,
    GForm,
    GSimpleFactorization,
    Membership,
    QFamily,
    alphas_to_staircase,
    closure_in_class,
    equiv,
    factor_C,
    gform_closure,
    gform_product,
    gform_simple_factorization,
    gform_to_monomial,
    goto_form,
    ideal_of_family,
    is_contracted,
    is_in_C,
    is_in_D,
    is_in_G,
    mu_class_check,
    q_family,
    staircase_alphas,
)
from .hilbert import (
    DEFAULT_TERM_BUDGET,
    BudgetError,
    HilbertSeries,
    h_degree_check,
    h_polynomial,
    hf_filtration,
    hs_via_factorization,
    multiplicity_e,
)
from .ideals import (
    AmbientMismatch,
    CoordinatePrime,
    MonomialIdeal,
    localize_power,
    reg_dim1_saturated,
)
from .newton import is_integrally_closed, newton_closure
from .staircases import (
    SimpleFactorization,
    Staircase,
    closure_seq,
    factor_simple,
    jdt_seq,
    minplus_power,
    minplus_product,
    recognize_simple,
)
from .textio import IdealDocument, ParseError, format_document, format_monomial, parse_document
from .verify import ExampleResult, run_examples

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BudgetError",
    "CFactorization",
    "CoordinatePrime",
    "DEFAULT_TERM_BUDGET",
    "ExampleResult",
    "FamilyError",
    "GForm",
    "GSimpleFactorization",
    "HilbertSeries",
    "IdealDocument",
    "Membership",
    "MonomialIdeal",
    "ParseError",
    "QFamily",
    "SimpleFactorization",
    "Staircase",
    "alphas_to_staircase",
    "closure_in_class",
    "closure_seq",
    "equiv",
    "factor_C",
    "factor_simple",
    "format_document",
    "format_monomial",
    "gform_closure",
    "gform_product",
    "gform_simple_factorization",
    "gform_to_monomial",
    "goto_form",
    "h_degree_check",
    "h_polynomial",
    "hf_filtration",
    "hs_via_factorization",
    "ideal_of_family",
    "is_contracted",
    "is_in_C",
    "is_in_D",
    "is_in_G",
    "is_integrally_closed",
    "jdt_seq",
    "localize_power",
    "minplus_power",
    "minplus_product",
    "mu_class_check",
    "multiplicity_e",
    "newton_closure",
    "parse_document",
    "q_family",
    "recognize_simple",
    "reg_dim1_saturated",
    "run_examples",
    "staircase_alphas",
]
