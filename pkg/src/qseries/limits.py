"""Finite-precision evaluation of infinite sums, products, and sequence limits.

An infinite object is described by a term generator together with a declared
valuation bound.  The bound is what makes evaluation finite: once the bound
reaches the target precision, every remaining term is too deep in powers of q
to touch the result.  Declared bounds are spot-checked against the actual
valuation of every term that gets generated, so a wrong declaration surfaces
as an error instead of a wrong answer.
"""

from __future__ import annotations

from typing import Callable, Union

from .errors import BoundViolation, ConstantTermNotOne, InsufficientPrecision, NotCauchy
from .series import (
    Finite,
    Polynomial,
    SeriesLike,
    TruncatedSeries,
    _coeff,
    add,
    congruent,
    mul,
    truncate,
    valuation,
)

_SUM = "sum"
_PRODUCT = "product"


class TermGenerator:
    """Terms term(0), term(1), ... with a declared valuation bound.

    The bound must be nondecreasing and unbounded.  In sum mode the contract
    is v(term(k)) >= bound(k); in product mode every term has constant term 1
    and v(term(k) - 1) >= bound(k).  Terms are memoized, so term(k) is
    computed once and the generator is deterministic by construction.
    """

    def __init__(self, term, valuation_bound, mode):
        if mode not in (_SUM, _PRODUCT):
            raise ValueError(f"unknown mode {mode!r}")
        self._term = term
        self._bound = valuation_bound
        self._mode = mode
        self._term_cache: dict[int, SeriesLike] = {}
        self._bound_cache: dict[int, int] = {}

    @classmethod
    def series(cls, term: Callable[[int], SeriesLike], valuation_bound: Callable[[int], int]) -> "TermGenerator":
        """Generator for an infinite sum: v(term(k)) >= valuation_bound(k)."""
        return cls(term, valuation_bound, _SUM)

    @classmethod
    def product(cls, term: Callable[[int], SeriesLike], valuation_bound: Callable[[int], int]) -> "TermGenerator":
        """Generator for an infinite product: v(term(k) - 1) >= valuation_bound(k)."""
        return cls(term, valuation_bound, _PRODUCT)

    @property
    def mode(self) -> str:
        return self._mode

    def term(self, k: int) -> SeriesLike:
        got = self._term_cache.get(k)
        if got is None:
            got = self._term(k)
            if not isinstance(got, (Polynomial, TruncatedSeries)):
                raise TypeError(
                    f"term({k}) must be a Polynomial or TruncatedSeries, "
                    f"got {type(got).__name__}"
                )
            self._term_cache[k] = got
        return got

    def bound(self, k: int) -> int:
        got = self._bound_cache.get(k)
        if got is None:
            got = int(self._bound(k))
            self._bound_cache[k] = got
        return got

    def checked_term(self, k: int, precision: int) -> SeriesLike:
        """term(k), after verifying its contract at the given working precision."""
        t = self.term(k)
        if isinstance(t, TruncatedSeries) and t.precision < precision:
            raise InsufficientPrecision(
                f"term({k}) has precision {t.precision}, need {precision}"
            )
        if self._mode == _PRODUCT:
            if _coeff(t, 0) != 1:
                raise ConstantTermNotOne(f"term({k}) has constant term {_coeff(t, 0)}")
            probe = t - 1
        else:
            probe = t
        v = valuation(probe)
        if isinstance(v, Finite) and v.n < self.bound(k):
            raise BoundViolation(
                f"term({k}) has valuation {v.n}, below its declared bound {self.bound(k)}"
            )
        return t


def _cutoff(gen_bound, precision: int, max_terms: int) -> int:
    """Least k whose declared bound reaches the precision."""
    previous = None
    for k in range(max_terms):
        b = gen_bound(k)
        if previous is not None and b < previous:
            raise ValueError(f"valuation bound decreases at k={k}: {previous} -> {b}")
        if b >= precision:
            return k
        previous = b
    raise ValueError(
        f"valuation bound did not reach {precision} within {max_terms} terms"
    )


def sum_limit(gen: TermGenerator, precision: int, max_terms: int = 100_000) -> TruncatedSeries:
    """Sum of all the generator's terms, exact mod q^precision.

    Adds terms up to (excluding) the first index whose declared bound reaches
    the precision; beyond that index every term has valuation >= precision.
    """
    if gen.mode != _SUM:
        raise ValueError("sum_limit requires a generator in sum mode")
    if precision < 1:
        raise ValueError("precision must be at least 1")
    stop = _cutoff(gen.bound, precision, max_terms)
    out = [0] * precision
    for k in range(stop):
        t = gen.checked_term(k, precision)
        cs = t.coeffs
        for i in range(min(precision, len(cs))):
            if cs[i]:
                out[i] += cs[i]
    return TruncatedSeries(out)


def product_limit(gen: TermGenerator, precision: int, max_terms: int = 100_000) -> TruncatedSeries:
    """Product of all the generator's terms, exact mod q^precision.

    Every term must have constant term 1; factors past the cutoff index are
    congruent to 1 mod q^precision and are skipped.
    """
    if gen.mode != _PRODUCT:
        raise ValueError("product_limit requires a generator in product mode")
    if precision < 1:
        raise ValueError("precision must be at least 1")
    stop = _cutoff(gen.bound, precision, max_terms)
    acc = truncate(Polynomial((1,)), precision)
    for k in range(stop):
        t = gen.checked_term(k, precision)
        acc = mul(acc, truncate(t, precision))
    return acc


def sequence_limit(
    seq: Callable[[int], SeriesLike],
    stabilization_bound: Callable[[int], int],
    precision: int,
    max_terms: int = 100_000,
) -> TruncatedSeries:
    """Common limit of a stabilizing sequence, exact mod q^precision.

    The declared contract is v(seq(k') - seq(k)) >= stabilization_bound(min(k, k'))
    for all k, k'.  Evaluation picks the first index K whose bound reaches the
    precision and returns seq(K) truncated; as a guard against misdeclared
    bounds it also demands that seq(K) and seq(K+1) agree mod q^precision.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    stop = _cutoff(stabilization_bound, precision, max_terms)
    candidate = seq(stop)
    follower = seq(stop + 1)
    if not congruent(candidate, follower, precision):
        raise NotCauchy(
            f"entries {stop} and {stop + 1} disagree below q^{precision}; "
            "the declared stabilization bound is wrong"
        )
    return truncate(candidate, precision)
