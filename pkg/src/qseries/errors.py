"""Exception types shared across the package."""

from __future__ import annotations


class QSeriesError(Exception):
    """Base class for every domain error raised by this package."""


class NotInvertible(QSeriesError):
    """Constant term is zero, so no multiplicative inverse exists."""


class InsufficientPrecision(QSeriesError):
    """An operand does not carry enough coefficients for the request."""


class CompositionUndefined(QSeriesError):
    """Inner series of a composition has a nonzero constant term."""


class CannotNormalize(QSeriesError):
    """The zero polynomial has no scale/shift/unit factorization."""


class BoundViolation(QSeriesError):
    """A generated term's valuation fell short of its declared bound."""


class ConstantTermNotOne(QSeriesError):
    """Operation requires constant term 1 and the input lacks it."""


class NotCauchy(QSeriesError):
    """Consecutive sequence entries disagree inside the target precision."""


class IncompatiblePrimeData(QSeriesError):
    """Two prime seed polynomials fail the cross-substitution identity.

    Carries the offending prime pair, both fully expanded sides of the
    identity, and the index of the first coefficient where they differ.
    """

    def __init__(self, p: int, r: int, lhs, rhs, index: int):
        self.primes = (p, r)
        self.lhs = lhs
        self.rhs = rhs
        self.index = index
        super().__init__(
            f"seeds for primes {p} and {r} are incompatible: "
            f"seed({p})(q)*seed({r})(q^{p}) = {lhs} but "
            f"seed({r})(q)*seed({p})(q^{r}) = {rhs}; "
            f"first difference at the coefficient of q^{index}"
        )


class NotASubsemigroup(QSeriesError):
    """Restriction target is not a subset of the sequence's primes."""


class MalformedSolution(QSeriesError):
    """Family values violate the product rule they are required to satisfy."""


class EmptySupport(QSeriesError):
    """No primes available, so there is no limit to take."""


class BaseTooSmall(QSeriesError):
    """Digit counting requires a base of at least 2."""


class DegreeTooLarge(QSeriesError):
    """The digit-formula solver requires deg(f) <= m - 1."""


class DegenerateModulus(QSeriesError):
    """m = 1 collapses the equation to f*F = F, leaving F unconstrained."""


class ExponentTooLarge(QSeriesError):
    """An integer argument in an expression exceeds the size cap."""

    def __init__(self, value: int, cap: int, offset: int):
        self.value = value
        self.cap = cap
        self.offset = offset
        super().__init__(
            f"integer {value} at offset {offset} exceeds the size cap {cap}"
        )


class ExpressionSyntaxError(QSeriesError):
    """Malformed expression text, with a byte offset and expected tokens."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        if len(expected) > 1:
            wanted = ", ".join(expected[:-1]) + " or " + expected[-1]
        else:
            wanted = expected[0]
        super().__init__(
            f"syntax error at offset {offset}: expected {wanted}, found {found}"
        )
