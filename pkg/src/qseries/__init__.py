"""Exact formal power series over the rationals.

Polynomials and precision-tracked truncated series with exact rational
coefficients; infinite sums, products, and sequence limits evaluated to any
requested precision; quantum integers and the twisted product under which
their indices multiply; and two cross-checking solvers for the fixed-point
equation f(q) * F(q^m) = F(q).
"""

from .errors import (
    BaseTooSmall,
    BoundViolation,
    CannotNormalize,
    CompositionUndefined,
    ConstantTermNotOne,
    DegenerateModulus,
    DegreeTooLarge,
    EmptySupport,
    ExponentTooLarge,
    ExpressionSyntaxError,
    IncompatiblePrimeData,
    InsufficientPrecision,
    MalformedSolution,
    NotASubsemigroup,
    NotCauchy,
    NotInvertible,
    QSeriesError,
)
from .expressions import Expression, evaluate, parse, parse_polynomial
from .limits import TermGenerator, product_limit, sequence_limit, sum_limit
from .quantum import (
    QuantumSequence,
    SequenceDecomposition,
    decompose,
    extend_from_primes,
    qmul,
    quantum_integer,
    quantum_limit,
    restrict,
    value_at,
)
from .series import (
    INFINITY,
    AtLeast,
    Coefficient,
    Finite,
    NormalizationResult,
    Polynomial,
    TruncatedSeries,
    Valuation,
    add,
    compose,
    congruent,
    format_coefficient,
    format_polynomial,
    format_series,
    invert,
    monomial,
    mul,
    normalize,
    parse_coefficient,
    substitute_power,
    truncate,
    valuation,
)
from .solver import (
    DigitProfile,
    madic_digits,
    solution_coefficient,
    solve_digits,
    solve_product,
    verify_solution,
)

__all__ = [
    # series
    "Polynomial", "TruncatedSeries", "Coefficient", "Valuation",
    "Finite", "AtLeast", "INFINITY", "NormalizationResult",
    "truncate", "add", "mul", "invert", "valuation", "congruent",
    "substitute_power", "compose", "normalize", "monomial",
    "format_coefficient", "parse_coefficient",
    "format_polynomial", "format_series",
    # limits
    "TermGenerator", "sum_limit", "product_limit", "sequence_limit",
    # quantum
    "QuantumSequence", "SequenceDecomposition", "quantum_integer", "qmul",
    "extend_from_primes", "value_at", "restrict", "decompose", "quantum_limit",
    # solver
    "DigitProfile", "madic_digits", "solution_coefficient",
    "solve_product", "solve_digits", "verify_solution",
    # expressions
    "Expression", "parse", "evaluate", "parse_polynomial",
    # errors
    "QSeriesError", "NotInvertible", "InsufficientPrecision",
    "CompositionUndefined", "CannotNormalize", "BoundViolation",
    "ConstantTermNotOne", "NotCauchy", "IncompatiblePrimeData",
    "NotASubsemigroup", "MalformedSolution", "EmptySupport",
    "BaseTooSmall", "DegreeTooLarge", "DegenerateModulus",
    "ExponentTooLarge", "ExpressionSyntaxError",
]
