"""Exact arithmetic for polynomials and precision-tracked power series in q.

Coefficients are Python ints or ``fractions.Fraction`` values, so every
operation is exact; there is no floating point anywhere.  A
``TruncatedSeries`` represents a residue class mod q^N and carries its
precision N explicitly: binary operations return the minimum of the operand
precisions, and nothing ever pretends to know coefficients it does not have.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    CannotNormalize,
    CompositionUndefined,
    InsufficientPrecision,
    NotInvertible,
)

Coefficient = Union[int, Fraction]


def _canonical(value) -> Coefficient:
    # Fractions with denominator 1 collapse to int so integer-only data
    # stays on the fast int path.
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"coefficients must be int or Fraction, got {type(value).__name__}")


def format_coefficient(c: Coefficient) -> str:
    """Render a coefficient as ``p`` or ``p/q`` with q > 0, gcd-reduced."""
    return str(_canonical(c))


def parse_coefficient(text: str) -> Coefficient:
    """Inverse of :func:`format_coefficient`."""
    return _canonical(Fraction(text))


class Polynomial:
    """Immutable polynomial in q with exact rational coefficients.

    Stored densely; the coefficient list never ends in a zero, so the zero
    polynomial is the empty tuple.  Instances hash and compare by value and
    are safe to share between threads.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = [_canonical(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # Trusted constructor: caller guarantees canonical coefficients and
        # a nonzero final entry (or an empty tuple).
        p = object.__new__(cls)
        p._coeffs = coeffs
        return p

    @property
    def coeffs(self) -> tuple[Coefficient, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree of the polynomial; ``-inf`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> Coefficient:
        if i < 0:
            raise IndexError("coefficient index must be nonnegative")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self._coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _ZERO
            return Polynomial(c * other for c in self._coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return _ZERO
        # Iterate the factor with fewer nonzero terms on the outside.
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Polynomial._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def subst_power(self, m: int) -> "Polynomial":
        """Exact substitution q -> q^m for m >= 1."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if m == 1 or self.is_zero:
            return self
        out = [0] * (m * (len(self._coeffs) - 1) + 1)
        for j, c in enumerate(self._coeffs):
            if c:
                out[m * j] = c
        return Polynomial._raw(tuple(out))

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


_ZERO = Polynomial()
_ONE = Polynomial((1,))


def monomial(power: int, coefficient: Coefficient = 1) -> Polynomial:
    """The polynomial ``coefficient * q^power``."""
    if power < 0:
        raise ValueError("power must be nonnegative")
    return Polynomial([0] * power + [coefficient])


class TruncatedSeries:
    """A power series known modulo q^N; exactly N coefficients are stored.

    Instances are immutable.  Equality is strict: same precision and the
    same coefficients.  Use :func:`congruent` to compare modulo a smaller
    power of q.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient]):
        cs = tuple(_canonical(c) for c in coeffs)
        if not cs:
            raise ValueError("precision must be at least 1")
        self._coeffs = cs

    @classmethod
    def _raw(cls, coeffs: tuple) -> "TruncatedSeries":
        s = object.__new__(cls)
        s._coeffs = coeffs
        return s

    @property
    def coeffs(self) -> tuple[Coefficient, ...]:
        return self._coeffs

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, i: int) -> Coefficient:
        if not 0 <= i < len(self._coeffs):
            raise IndexError(
                f"coefficient {i} is outside the known precision {len(self._coeffs)}"
            )
        return self._coeffs[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(tuple(-c for c in self._coeffs))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if isinstance(other, Polynomial):
            return truncate(other, self.precision)
        if isinstance(other, TruncatedSeries):
            return other
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return add(self, rhs)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return add(self, -rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return add(rhs, -self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return mul(self, rhs)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return format_series(self)


SeriesLike = Union[Polynomial, TruncatedSeries]


@dataclass(frozen=True)
class Finite:
    """Valuation of an object whose first nonzero coefficient is known."""

    n: int


@dataclass(frozen=True)
class AtLeast:
    """All known coefficients vanish; the true valuation is >= bound."""

    bound: int


@dataclass(frozen=True)
class Infinite:
    """Valuation of the exact zero polynomial."""


INFINITY = Infinite()

Valuation = Union[Finite, AtLeast, Infinite]


def _coeff(f: SeriesLike, i: int) -> Coefficient:
    return f.coeffs[i] if i < len(f.coeffs) else 0


def _valuation_floor(v: Valuation):
    """Greatest k such that the valuation is certainly >= k."""
    if isinstance(v, Finite):
        return v.n
    if isinstance(v, AtLeast):
        return v.bound
    return float("inf")


def truncate(f: SeriesLike, precision: int) -> TruncatedSeries:
    """First ``precision`` coefficients of f, as a residue class mod q^precision.

    Polynomials truncate at any precision >= 1 (zero-padding as needed); a
    TruncatedSeries can only lose precision, never gain it.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if isinstance(f, TruncatedSeries):
        if precision > f.precision:
            raise InsufficientPrecision(
                f"cannot raise precision from {f.precision} to {precision}"
            )
        return TruncatedSeries._raw(f.coeffs[:precision])
    if isinstance(f, Polynomial):
        cs = f.coeffs[:precision]
        return TruncatedSeries._raw(cs + (0,) * (precision - len(cs)))
    raise TypeError(f"cannot truncate {type(f).__name__}")


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum at the smaller of the two precisions."""
    n = min(f.precision, g.precision)
    a, b = f.coeffs, g.coeffs
    return TruncatedSeries._raw(tuple(a[i] + b[i] for i in range(n)))


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product at the smaller of the two precisions."""
    n = min(f.precision, g.precision)
    a, b = f.coeffs[:n], g.coeffs[:n]
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a
    out = [0] * n
    for i, ca in enumerate(a):
        if ca:
            for j in range(n - i):
                cb = b[j]
                if cb:
                    out[i + j] += ca * cb
    return TruncatedSeries._raw(tuple(out))


def invert(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse mod q^precision.

    Built by the standard recurrence: b_0 = 1/a_0 and
    b_n = -a_0^{-1} * sum_{i=1..n} a_i b_{n-i}.  Requires a nonzero
    constant term; over the rationals that is the only obstruction.
    """
    a = f.coeffs
    if a[0] == 0:
        raise NotInvertible("constant term is zero")
    inv0 = _canonical(Fraction(1) / a[0])
    b = [inv0]
    for n in range(1, f.precision):
        s = 0
        for i in range(1, n + 1):
            if a[i]:
                s += a[i] * b[n - i]
        b.append(_canonical(-inv0 * s) if s else 0)
    return TruncatedSeries._raw(tuple(b))


def valuation(f: SeriesLike) -> Valuation:
    """Index of the first nonzero coefficient.

    The exact zero polynomial has valuation ``INFINITY``; an all-zero
    truncation only certifies ``AtLeast(precision)``.
    """
    for i, c in enumerate(f.coeffs):
        if c:
            return Finite(i)
    if isinstance(f, Polynomial):
        return INFINITY
    return AtLeast(f.precision)


def congruent(f: SeriesLike, g: SeriesLike, precision: int) -> bool:
    """True iff f and g agree on coefficients 0 .. precision-1."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    for h in (f, g):
        if isinstance(h, TruncatedSeries) and h.precision < precision:
            raise InsufficientPrecision(
                f"operand precision {h.precision} is below the requested {precision}"
            )
    return all(_coeff(f, i) == _coeff(g, i) for i in range(precision))


def substitute_power(f: SeriesLike, m: int, precision: int) -> TruncatedSeries:
    """q -> q^m: the coefficient of q^(m*j) in the result is f's coefficient j.

    Exact for polynomial input; a truncated input must satisfy
    prec(f) * m >= precision so that every contributing coefficient is known.
    """
    if m < 1:
        raise ValueError("substitution power must be >= 1")
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if isinstance(f, TruncatedSeries) and f.precision * m < precision:
        raise InsufficientPrecision(
            f"need {precision} coefficients of f(q^{m}) but only "
            f"{f.precision * m} are determined"
        )
    out = [0] * precision
    for j, c in enumerate(f.coeffs):
        idx = m * j
        if idx >= precision:
            break
        out[idx] = c
    return TruncatedSeries._raw(tuple(out))


def compose(f: SeriesLike, h: SeriesLike, precision: int) -> TruncatedSeries:
    """f(h(q)) mod q^precision, defined when h has zero constant term.

    Evaluates the partial sum of a_n * h^n for n below the first K with
    K * v(h) >= precision; all later terms have valuation >= precision and
    cannot touch the result.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if _coeff(h, 0) != 0:
        raise CompositionUndefined("inner series must have zero constant term")
    if isinstance(h, TruncatedSeries) and h.precision < precision:
        raise InsufficientPrecision(
            f"inner series precision {h.precision} is below the requested {precision}"
        )
    v = _valuation_floor(valuation(h))
    if v == float("inf"):
        # h is exactly zero: f(0) is the whole composition.
        return truncate(Polynomial((_coeff(f, 0),)), precision)
    terms = -(-precision // v)  # ceil(precision / v)
    if isinstance(f, TruncatedSeries) and f.precision < terms:
        raise InsufficientPrecision(
            f"need {terms} coefficients of the outer series, have {f.precision}"
        )
    coeffs = f.coeffs[:terms]
    ht = truncate(h, precision)
    acc = truncate(_ZERO, precision)
    for c in reversed(coeffs):
        acc = mul(acc, ht)
        if c:
            acc = add(acc, truncate(Polynomial((c,)), precision))
    return acc


@dataclass(frozen=True)
class NormalizationResult:
    """Factorization input = scale * q^shift * unit_part with unit_part(0) = 1."""

    scale: Coefficient
    shift: int
    unit_part: Polynomial

    def reconstruct(self) -> Polynomial:
        return monomial(self.shift, self.scale) * self.unit_part


def normalize(p: Polynomial) -> NormalizationResult:
    """Unique factorization of a nonzero polynomial as scale * q^shift * unit."""
    if p.is_zero:
        raise CannotNormalize("the zero polynomial cannot be normalized")
    v = next(i for i, c in enumerate(p.coeffs) if c)
    a = p.coeffs[v]
    unit = Polynomial(_canonical(Fraction(c) / a) for c in p.coeffs[v:])
    return NormalizationResult(a, v, unit)


def _format_terms(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = -c if c < 0 else c
        if k == 0:
            body = format_coefficient(mag)
        else:
            power = "q" if k == 1 else f"q^{k}"
            body = power if mag == 1 else f"{format_coefficient(mag)}*{power}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    text = body if sign == "+" else f"-{body}"
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_polynomial(p: Polynomial) -> str:
    """Human- and parser-readable rendering, e.g. ``1 - 3/2*q + q^4``."""
    return _format_terms(p.coeffs)


def format_series(s: TruncatedSeries) -> str:
    """Like :func:`format_polynomial` with an explicit ``+ O(q^N)`` tail."""
    return f"{_format_terms(s.coeffs)} + O(q^{s.precision})"
