"""Exact closed-form arithmetic terms for C-recursive integer sequences.

The package turns a linear recurrence with constant rational coefficients
and integer values into a single arithmetic term E over +, truncated -, *,
floor division, powers and remainders, together with a base b and shift c
such that s(n) = E(n) - c^(n+1) for all n >= 1.  Everything is exact big
integer / Fraction arithmetic; verification replays terms against the
recurrence.
"""

from .polys import (
    AlgebraError,
    Polynomial,
    RationalFunction,
    clear_denominators,
    poly_gcd,
    series_coefficients,
    split_signs,
)
from .recurrence import (
    NonIntegerTermError,
    Recurrence,
    SequenceWindow,
    eval_oracle,
    floor_root,
    generating_function,
    gf_shift,
    growth_constant,
    is_provably_nonnegative,
    recurrence_from_denominator,
)
from .terms import (
    DEFAULT_BIT_BUDGET,
    BinOp,
    BudgetExceededError,
    Const,
    EvalStats,
    ParseError,
    Term,
    UnboundVariableError,
    Var,
    build_extraction_term,
    evaluate,
    parse,
    render,
    term_from_json,
    term_to_json,
    variables,
)
from .synthesis import (
    AllZeroSequenceError,
    BoundsCertificate,
    SynthesisError,
    SynthesisResult,
    find_b1_m,
    find_b2,
    find_shift,
    minimal_valid_b,
    radius_lower_bound,
    synthesize,
)
from .catalog import (
    Fixture,
    LucasParameterError,
    LucasParams,
    fibonacci_binomial_oracle,
    fibonacci_convolution,
    fixtures,
    get_fixture,
    lucas_closed_form_oracle,
    lucas_gf,
    lucas_U,
    lucas_V,
    pell_fundamental,
    pell_recurrences,
)
from .verify import (
    Failure,
    VerificationReport,
    extraction_direct,
    verify_catalog,
    verify_term,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "Polynomial",
    "RationalFunction",
    "clear_denominators",
    "poly_gcd",
    "series_coefficients",
    "split_signs",
    "NonIntegerTermError",
    "Recurrence",
    "SequenceWindow",
    "eval_oracle",
    "floor_root",
    "generating_function",
    "gf_shift",
    "growth_constant",
    "is_provably_nonnegative",
    "recurrence_from_denominator",
    "DEFAULT_BIT_BUDGET",
    "BinOp",
    "BudgetExceededError",
    "Const",
    "EvalStats",
    "ParseError",
    "Term",
    "UnboundVariableError",
    "Var",
    "build_extraction_term",
    "evaluate",
    "parse",
    "render",
    "term_from_json",
    "term_to_json",
    "variables",
    "AllZeroSequenceError",
    "BoundsCertificate",
    "SynthesisError",
    "SynthesisResult",
    "find_b1_m",
    "find_b2",
    "find_shift",
    "minimal_valid_b",
    "radius_lower_bound",
    "synthesize",
    "Fixture",
    "LucasParameterError",
    "LucasParams",
    "fibonacci_binomial_oracle",
    "fibonacci_convolution",
    "fixtures",
    "get_fixture",
    "lucas_closed_form_oracle",
    "lucas_gf",
    "lucas_U",
    "lucas_V",
    "pell_fundamental",
    "pell_recurrences",
    "Failure",
    "VerificationReport",
    "extraction_direct",
    "verify_catalog",
    "verify_term",
    "__version__",
]
