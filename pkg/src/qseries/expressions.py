"""Text expressions that evaluate to exact polynomials in q.

Grammar (whitespace-insensitive; implicit multiplication is not allowed):

    expr   := '-'? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := uint ('/' uint)?
            | 'q'
            | 'qint' '(' uint ')'
            | 'subst' '(' expr ',' uint ')'
            | '(' expr ')'

``qint(n)`` is the q-analog 1 + q + ... + q^(n-1); ``subst(e, m)`` substitutes
q -> q^m into the value of e.  Syntax errors carry a 0-based byte offset and
the set of tokens that would have been accepted there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExponentTooLarge, ExpressionSyntaxError
from .quantum import quantum_integer
from .series import Polynomial

# Cap on exponents and other size-driving integer arguments (qint index,
# subst power): keeps a typo from allocating gigabytes of coefficients.
MAX_SIZE_LITERAL = 10**6


class Expression:
    """Base class for parsed expression trees."""

    __slots__ = ()


@dataclass(frozen=True)
class Literal(Expression):
    value: Fraction


@dataclass(frozen=True)
class Variable(Expression):
    pass


@dataclass(frozen=True)
class Negation(Expression):
    operand: Expression


@dataclass(frozen=True)
class Sum(Expression):
    left: Expression
    right: Expression


@dataclass(frozen=True)
class Difference(Expression):
    left: Expression
    right: Expression


@dataclass(frozen=True)
class Product(Expression):
    left: Expression
    right: Expression


@dataclass(frozen=True)
class Power(Expression):
    base: Expression
    exponent: int


@dataclass(frozen=True)
class QuantumIntegerNode(Expression):
    n: int


@dataclass(frozen=True)
class PowerSubstitution(Expression):
    operand: Expression
    power: int


def evaluate(expr: Expression) -> Polynomial:
    """Evaluate a parsed tree to an exact polynomial."""
    if isinstance(expr, Literal):
        return Polynomial((expr.value,))
    if isinstance(expr, Variable):
        return Polynomial((0, 1))
    if isinstance(expr, Negation):
        return -evaluate(expr.operand)
    if isinstance(expr, Sum):
        return evaluate(expr.left) + evaluate(expr.right)
    if isinstance(expr, Difference):
        return evaluate(expr.left) - evaluate(expr.right)
    if isinstance(expr, Product):
        return evaluate(expr.left) * evaluate(expr.right)
    if isinstance(expr, Power):
        return evaluate(expr.base) ** expr.exponent
    if isinstance(expr, QuantumIntegerNode):
        return quantum_integer(expr.n)
    if isinstance(expr, PowerSubstitution):
        return evaluate(expr.operand).subst_power(expr.power)
    raise TypeError(f"not an expression node: {type(expr).__name__}")


_SINGLE = {
    "+": "'+'",
    "-": "'-'",
    "*": "'*'",
    "^": "'^'",
    "/": "'/'",
    "(": "'('",
    ")": "')'",
    ",": "','",
}

_KEYWORDS = ("q", "qint", "subst")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "q", "qint", "subst", one of _SINGLE, or "end"
    text: str
    offset: int  # byte offset of the first character


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    size = len(text)
    while pos < size:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        start = pos
        if ch.isdigit():
            while pos < size and text[pos].isdigit():
                pos += 1
            tokens.append(_Token("int", text[start:pos], _byte_offset(text, start)))
        elif ch.isalpha() or ch == "_":
            while pos < size and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            word = text[start:pos]
            if word not in _KEYWORDS:
                raise ExpressionSyntaxError(
                    _byte_offset(text, start),
                    ("'q'", "'qint'", "'subst'"),
                    f"identifier '{word}'",
                )
            tokens.append(_Token(word, word, _byte_offset(text, start)))
        elif ch in _SINGLE:
            pos += 1
            tokens.append(_Token(ch, ch, _byte_offset(text, start)))
        else:
            raise ExpressionSyntaxError(
                _byte_offset(text, start), ("a valid token",), f"character {ch!r}"
            )
    tokens.append(_Token("end", "", _byte_offset(text, size)))
    return tokens


_ATOM_STARTS = ("an integer", "'('", "'q'", "'qint'", "'subst'")


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._pos = 0

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _fail(self, expected: tuple[str, ...]):
        tok = self._peek()
        found = "end of input" if tok.kind == "end" else f"{tok.text!r}"
        raise ExpressionSyntaxError(tok.offset, expected, found)

    def _expect(self, kind: str) -> _Token:
        if self._peek().kind != kind:
            self._fail((_SINGLE.get(kind, kind),))
        return self._advance()

    def _uint(self, *, capped: bool) -> int:
        if self._peek().kind != "int":
            self._fail(("an integer",))
        tok = self._advance()
        value = int(tok.text)
        if capped and value > MAX_SIZE_LITERAL:
            raise ExponentTooLarge(value, MAX_SIZE_LITERAL, tok.offset)
        return value

    def parse(self) -> Expression:
        expr = self._expr()
        if self._peek().kind != "end":
            self._fail(("'+'", "'-'", "'*'", "'^'", "end of input"))
        return expr

    def _expr(self) -> Expression:
        if self._peek().kind == "-":
            self._advance()
            node: Expression = Negation(self._term())
        else:
            node = self._term()
        while self._peek().kind in ("+", "-"):
            op = self._advance().kind
            rhs = self._term()
            node = Sum(node, rhs) if op == "+" else Difference(node, rhs)
        return node

    def _term(self) -> Expression:
        node = self._factor()
        while self._peek().kind == "*":
            self._advance()
            node = Product(node, self._factor())
        return node

    def _factor(self) -> Expression:
        node = self._atom()
        if self._peek().kind == "^":
            self._advance()
            node = Power(node, self._uint(capped=True))
        return node

    def _atom(self) -> Expression:
        tok = self._peek()
        if tok.kind == "int":
            numerator = int(self._advance().text)
            if self._peek().kind == "/":
                self._advance()
                den_tok = self._peek()
                denominator = self._uint(capped=False)
                if denominator == 0:
                    raise ExpressionSyntaxError(
                        den_tok.offset, ("a nonzero denominator",), "'0'"
                    )
                return Literal(Fraction(numerator, denominator))
            return Literal(Fraction(numerator))
        if tok.kind == "q":
            self._advance()
            return Variable()
        if tok.kind == "qint":
            self._advance()
            self._expect("(")
            n = self._uint(capped=True)
            self._expect(")")
            return QuantumIntegerNode(n)
        if tok.kind == "subst":
            self._advance()
            self._expect("(")
            inner = self._expr()
            self._expect(",")
            power = self._uint(capped=True)
            self._expect(")")
            return PowerSubstitution(inner, power)
        if tok.kind == "(":
            self._advance()
            inner = self._expr()
            self._expect(")")
            return inner
        self._fail(_ATOM_STARTS)


def parse(text: str) -> Expression:
    """Parse expression text into a tree; raises ExpressionSyntaxError with a
    0-based byte offset and the accepted-token set on malformed input."""
    return _Parser(_tokenize(text)).parse()


def parse_polynomial(text: str) -> Polynomial:
    """Parse and evaluate in one step."""
    return evaluate(parse(text))
