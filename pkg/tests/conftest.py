"""Shared helpers: plain-list oracles kept independent of the library code."""

from __future__ import annotations

import random
from fractions import Fraction

from qseries import Polynomial


def conv(a: list, b: list) -> list:
    """Schoolbook convolution of coefficient lists; oracle for products."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def spread(a: list, m: int) -> list:
    """Coefficient list of f(q^m) given the list of f; oracle for substitution."""
    if not a:
        return []
    out = [0] * (m * (len(a) - 1) + 1)
    for j, c in enumerate(a):
        out[m * j] = c
    return out


def recurrence_solution(a: list, m: int, n: int) -> list:
    """First n coefficients of the fixed point of f(q)*F(q^m) = F(q).

    Independent construction: matching coefficients on both sides forces
    b[i + m*j] = a[i] * b[j] for 0 <= i < m, and b[0] = 1.  Requires the
    coefficient list ``a`` to be 1 at index 0 and have length <= m.
    """
    assert a and a[0] == 1 and len(a) <= m
    padded = a + [0] * (m - len(a))
    b = [0] * n
    b[0] = 1
    for k in range(1, n):
        j, i = divmod(k, m)
        b[k] = padded[i] * b[j]
    return b


def rand_coeff(rng: random.Random) -> Fraction:
    """Nonzero rational with numerator and denominator drawn from 1..9."""
    num = rng.choice([s * v for s in (1, -1) for v in range(1, 10)])
    den = rng.randint(1, 9)
    return Fraction(num, den)


def rand_polynomial(rng: random.Random, max_degree: int, zero_ok: bool = False) -> Polynomial:
    """Random polynomial with small rational coefficients."""
    if zero_ok and rng.random() < 0.1:
        return Polynomial()
    degree = rng.randint(0, max_degree)
    coeffs = [rand_coeff(rng) if rng.random() < 0.7 else 0 for _ in range(degree)]
    coeffs.append(rand_coeff(rng))  # leading coefficient nonzero
    return Polynomial(coeffs)
