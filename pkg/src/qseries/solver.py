"""Two exact solvers for the fixed-point equation f(q) * F(q^m) = F(q).

For any f with constant term 1 the equation has exactly one power-series
solution F with F(0) = 1.  ``solve_product`` evaluates it as the product of
f(q^(m^i)) over i >= 0, which works for any f.  When deg(f) <= m - 1 the
coefficients also have a closed form read off the base-m digits of the index,
implemented by ``solve_digits``; the two must agree, which makes them natural
cross-checks for each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BaseTooSmall,
    ConstantTermNotOne,
    DegenerateModulus,
    DegreeTooLarge,
    InsufficientPrecision,
)
from .series import (
    Coefficient,
    Polynomial,
    SeriesLike,
    TruncatedSeries,
    _coeff,
    congruent,
    mul,
    substitute_power,
    truncate,
)


@dataclass(frozen=True)
class DigitProfile:
    """How often each nonzero digit value occurs in k written in base m.

    ``counts[i-1]`` is the number of base-m digits of k equal to i, for
    i = 1 .. m-1; zeros are not counted.
    """

    k: int
    base: int
    counts: tuple[int, ...]

    def count(self, digit: int) -> int:
        if not 1 <= digit < self.base:
            raise ValueError(f"digit must be in 1..{self.base - 1}")
        return self.counts[digit - 1]

    @property
    def nonzero_digits(self) -> int:
        return sum(self.counts)


def madic_digits(k: int, base: int) -> DigitProfile:
    """Digit-value counts of k in base m (k >= 0, m >= 2)."""
    if base < 2:
        raise BaseTooSmall("digit counting requires base >= 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    counts = [0] * (base - 1)
    n = k
    while n:
        n, d = divmod(n, base)
        if d:
            counts[d - 1] += 1
    return DigitProfile(k, base, tuple(counts))


def _check_modulus(m: int) -> None:
    if m == 1:
        raise DegenerateModulus(
            "m = 1 forces f = 1 and leaves the solution unconstrained"
        )
    if m < 1:
        raise ValueError("m must be a positive integer")


def solve_product(f: SeriesLike, m: int, precision: int) -> TruncatedSeries:
    """The unique solution with constant term 1, via the factor product.

    Multiplies f(q^(m^i)) for every i with m^i < precision; each later factor
    differs from 1 only at or beyond q^(m^i) and is skipped.  Accepts a
    polynomial or a truncated series with at least ``precision`` coefficients.
    """
    _check_modulus(m)
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if _coeff(f, 0) != 1:
        raise ConstantTermNotOne(f"f has constant term {_coeff(f, 0)}, need 1")
    if isinstance(f, TruncatedSeries) and f.precision < precision:
        raise InsufficientPrecision(
            f"f has precision {f.precision}, need {precision}"
        )
    acc = truncate(Polynomial((1,)), precision)
    step = 1
    while step < precision:
        acc = mul(acc, substitute_power(f, step, precision))
        step *= m
    return acc


def solution_coefficient(f: Polynomial, m: int, k: int) -> Coefficient:
    """Coefficient k of the solution, straight from the base-m digits of k.

    Requires deg(f) <= m - 1.  Each base-m digit d of k contributes a factor
    f[d]; absent digit values contribute nothing (so a zero coefficient of f
    kills exactly the indices whose expansion uses that digit).  Exact for
    arbitrarily large k.
    """
    _check_modulus(m)
    if not isinstance(f, Polynomial):
        raise TypeError("the digit formula applies to polynomials only")
    if f[0] != 1:
        raise ConstantTermNotOne(f"f has constant term {f[0]}, need 1")
    if f.degree >= m:
        raise DegreeTooLarge(
            f"digit formula needs deg(f) <= {m - 1}, got {f.degree}"
        )
    profile = madic_digits(k, m)
    b: Coefficient = 1
    for digit, times in enumerate(profile.counts, start=1):
        if times:
            c = f[digit]
            if c == 0:
                return 0
            b *= c**times
    return b


def solve_digits(f: Polynomial, m: int, precision: int) -> TruncatedSeries:
    """The unique solution with constant term 1, one coefficient per digit profile.

    Polynomial-only and requires deg(f) <= m - 1; must agree exactly with
    :func:`solve_product` wherever both apply.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    return TruncatedSeries(
        solution_coefficient(f, m, k) for k in range(precision)
    )


def verify_solution(f: SeriesLike, m: int, series: TruncatedSeries, precision: int) -> bool:
    """Check f(q) * F(q^m) = F(q) holds mod q^precision."""
    _check_modulus(m)
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if series.precision < precision:
        raise InsufficientPrecision(
            f"candidate has precision {series.precision}, need {precision}"
        )
    if isinstance(f, TruncatedSeries) and f.precision < precision:
        raise InsufficientPrecision(
            f"f has precision {f.precision}, need {precision}"
        )
    lhs = mul(truncate(f, precision), substitute_power(series, m, precision))
    return congruent(lhs, series, precision)
