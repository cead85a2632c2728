"""Quantum integers, the twisted product f(q)*g(q^m), and solution families.

A family here assigns one polynomial to every positive integer, is 1 at
index 1, and satisfies value(m*n) = value(m)(q) * value(n)(q^m).  Such a
family is determined by its values at a set of primes; indices outside the
semigroup generated by those primes carry the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import (
    ConstantTermNotOne,
    EmptySupport,
    IncompatiblePrimeData,
    MalformedSolution,
    NotASubsemigroup,
)
from .limits import TermGenerator, product_limit
from .series import Coefficient, Polynomial, TruncatedSeries, normalize

_ONE = Polynomial((1,))
_ZERO = Polynomial()


def quantum_integer(n: int) -> Polynomial:
    """The polynomial 1 + q + ... + q^(n-1), the q-analog of n (n >= 1)."""
    if n < 1:
        raise ValueError("quantum integers are defined for n >= 1")
    return Polynomial._raw((1,) * n)


def qmul(f: Polynomial, g: Polynomial, m: int) -> Polynomial:
    """Twisted product f(q) * g(q^m); exact on polynomials.

    With f and g the q-analogs of m and n, the result is the q-analog of m*n.
    """
    if m < 1:
        raise ValueError("twist exponent must be >= 1")
    return f * g.subst_power(m)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_pairwise(seeds: dict[int, Polynomial]) -> None:
    primes = sorted(seeds)
    for i, p in enumerate(primes):
        for r in primes[i + 1 :]:
            lhs = qmul(seeds[p], seeds[r], p)
            rhs = qmul(seeds[r], seeds[p], r)
            if lhs != rhs:
                index = next(
                    k
                    for k in range(max(len(lhs.coeffs), len(rhs.coeffs)))
                    if lhs[k] != rhs[k]
                )
                raise IncompatiblePrimeData(p, r, lhs, rhs, index)


class QuantumSequence:
    """A solution family determined by per-prime seed polynomials.

    value(1) = 1.  For n inside the semigroup generated by the primes, the
    value is assembled along the nondecreasing prime factorization of n by
    repeatedly splitting off the largest factor:
    value(n) = value(n/p)(q) * seed(p)(q^(n/p)).  Off the semigroup the value
    is the zero polynomial.

    Construction validates the seeds pairwise by default: for primes p < r
    the two assembly orders of value(p*r) must agree exactly.  ``validate=False``
    skips that check (used by :func:`restrict`, whose inputs were already
    checked, and by tests that need deliberately broken families).  ``values``
    pre-populates the derived cache without validation.

    After construction the object is logically immutable: the cache only
    ever gains entries, recomputation is deterministic, and concurrent reads
    are safe.
    """

    def __init__(
        self,
        prime_values: Mapping[int, Polynomial],
        *,
        validate: bool = True,
        values: Optional[Mapping[int, Polynomial]] = None,
    ):
        seeds = {}
        for p, f in prime_values.items():
            if not _is_prime(p):
                raise ValueError(f"{p} is not a prime number")
            if not isinstance(f, Polynomial):
                raise TypeError("seed values must be Polynomial instances")
            if f.is_zero:
                raise ValueError(f"seed for prime {p} must be nonzero")
            seeds[p] = f
        if validate:
            _check_pairwise(seeds)
        self._seeds = dict(sorted(seeds.items()))
        self._primes = tuple(self._seeds)
        self._values: dict[int, Polynomial] = {1: _ONE}
        if values:
            self._values.update(values)

    @property
    def primes(self) -> tuple[int, ...]:
        return self._primes

    def seed(self, p: int) -> Polynomial:
        return self._seeds[p]

    def _factor(self, n: int) -> Optional[list[int]]:
        """Prime factorization in nondecreasing order, or None if n leaves S(P)."""
        factors = []
        m = n
        for p in self._primes:
            while m % p == 0:
                factors.append(p)
                m //= p
        return factors if m == 1 else None

    def value(self, n: int) -> Polynomial:
        """The family's polynomial at index n (n >= 1); zero off the semigroup."""
        if n < 1:
            raise ValueError("indices are positive integers")
        got = self._values.get(n)
        if got is not None:
            return got
        factors = self._factor(n)
        if factors is None:
            result = _ZERO
        else:
            m = n // factors[-1]
            result = qmul(self.value(m), self._seeds[factors[-1]], m)
        self._values[n] = result
        return result

    def restrict(self, primes: Iterable[int]) -> "QuantumSequence":
        """The family that agrees with this one on the semigroup generated by
        ``primes`` and is zero elsewhere."""
        subset = tuple(sorted(set(primes)))
        missing = [p for p in subset if p not in self._seeds]
        if missing:
            raise NotASubsemigroup(
                f"primes {missing} are not part of this family"
            )
        return QuantumSequence(
            {p: self._seeds[p] for p in subset}, validate=False
        )

    def __repr__(self) -> str:
        return f"QuantumSequence(primes={list(self._primes)!r})"


def extend_from_primes(prime_values: Mapping[int, Polynomial]) -> QuantumSequence:
    """Build a family from per-prime seeds, verifying pairwise compatibility.

    Raises IncompatiblePrimeData naming the offending pair, both expanded
    sides of the identity, and the first differing coefficient.
    """
    return QuantumSequence(prime_values)


def value_at(seq: QuantumSequence, n: int) -> Polynomial:
    """value(n) of the family; zero off its semigroup."""
    return seq.value(n)


def restrict(seq: QuantumSequence, primes: Iterable[int]) -> QuantumSequence:
    """Restriction of the family to a subset of its primes."""
    return seq.restrict(primes)


@dataclass(frozen=True)
class SequenceDecomposition:
    """Split of a family into scales, a shift rate, and unit-constant values.

    Every sampled value factors as scales[n] * q^(shift_rate*(n-1)) * units.value(n)
    with units.value(n)(0) = 1, and the scales multiply like the indices do.
    """

    scales: dict[int, Coefficient]
    shift_rate: Fraction
    units: QuantumSequence


def decompose(seq: QuantumSequence, bound: int = 60) -> SequenceDecomposition:
    """Factor each family value into scale * q^shift * unit across the support.

    Samples the support up to ``bound``.  The shift of value(n) must equal a
    fixed rational rate times n - 1 with an integer result, and the scales
    must be completely multiplicative; any violation raises MalformedSolution,
    signalling that the input does not actually satisfy the product rule.
    """
    support = [n for n in range(1, bound + 1) if not seq.value(n).is_zero]
    scales: dict[int, Coefficient] = {}
    rate: Optional[Fraction] = None
    for n in support:
        parts = normalize(seq.value(n))
        scales[n] = parts.scale
        if n > 1:
            t = Fraction(parts.shift, n - 1)
            if rate is None:
                rate = t
            elif rate != t:
                raise MalformedSolution(
                    f"shift of entry {n} gives rate {t}, but earlier entries gave {rate}"
                )
    if rate is None:
        rate = Fraction(0)
    for n in support:
        if (rate * (n - 1)).denominator != 1:
            raise MalformedSolution(
                f"rate {rate} does not give an integer shift at index {n}"
            )
    for i, m in enumerate(support):
        for n in support[i:]:
            if m * n <= bound and m > 1:
                if scales[m * n] != scales[m] * scales[n]:
                    raise MalformedSolution(
                        f"scales are not multiplicative: "
                        f"scale({m * n}) != scale({m})*scale({n})"
                    )
    try:
        units = QuantumSequence(
            {p: normalize(seq.seed(p)).unit_part for p in seq.primes}
        )
    except IncompatiblePrimeData as exc:
        raise MalformedSolution(f"unit parts are not a solution family: {exc}") from exc
    return SequenceDecomposition(scales, rate, units)


def quantum_limit(
    seq: QuantumSequence, precision: int, prime: Optional[int] = None
) -> TruncatedSeries:
    """Limit of the family along its semigroup, exact mod q^precision.

    Requires every seed to have constant term 1.  Computed as the product of
    seed(p)(q^(p^i)) over i >= 0 for a single prime p: the factor at step i
    differs from 1 only beyond q^(p^i), so the product needs just the steps
    with p^i below the precision.  Any prime of the family yields the same
    series; the smallest is used unless ``prime`` picks another.
    """
    if not seq.primes:
        raise EmptySupport("the family has no primes, only the trivial index 1")
    for p in seq.primes:
        if seq.seed(p)[0] != 1:
            raise ConstantTermNotOne(
                f"seed for prime {p} has constant term {seq.seed(p)[0]}"
            )
    if prime is None:
        prime = seq.primes[0]
    elif prime not in seq.primes:
        raise ValueError(f"{prime} is not one of the family's primes {list(seq.primes)}")
    base = seq.seed(prime)
    gen = TermGenerator.product(
        lambda i: base.subst_power(prime**i),
        lambda i: prime**i,
    )
    return product_limit(gen, precision)
