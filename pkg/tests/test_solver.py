"""Digit counting and the two solvers for f(q)*F(q^m) = F(q)."""

import random
from fractions import Fraction

import pytest

from conftest import rand_coeff, recurrence_solution
from qseries import (
    BaseTooSmall,
    ConstantTermNotOne,
    DegenerateModulus,
    DegreeTooLarge,
    InsufficientPrecision,
    Polynomial,
    TruncatedSeries,
    madic_digits,
    solution_coefficient,
    solve_digits,
    solve_product,
    truncate,
    verify_solution,
)

ALL_ONES_16 = TruncatedSeries([1] * 16)


# --- madic_digits -----------------------------------------------------------------

def test_digit_counts_of_71_base_3():
    # 71 = 2 + 2*3 + 1*9 + 2*27
    profile = madic_digits(71, 3)
    assert profile.count(1) == 1
    assert profile.count(2) == 3
    assert profile.counts == (1, 3)
    assert profile.nonzero_digits == 4


def test_zero_has_no_digits():
    assert madic_digits(0, 5).counts == (0, 0, 0, 0)


def test_digit_counts_of_5_base_2():
    assert madic_digits(5, 2).counts == (2,)  # 101 in binary


def test_base_must_be_at_least_two():
    with pytest.raises(BaseTooSmall):
        madic_digits(10, 1)


def test_digit_counts_match_direct_expansion():
    rng = random.Random(3)
    for _ in range(200):
        base = rng.randint(2, 12)
        k = rng.randint(0, 10**6)
        digits = []
        n = k
        while n:
            n, d = divmod(n, base)
            digits.append(d)
        profile = madic_digits(k, base)
        assert sum(d * base**t for t, d in enumerate(digits)) == k
        for i in range(1, base):
            assert profile.count(i) == digits.count(i)


def test_appending_a_digit_increments_one_count():
    rng = random.Random(4)
    for _ in range(200):
        m = rng.randint(2, 9)
        j = rng.randint(0, 5000)
        i = rng.randint(1, m - 1)
        k = i + m * j
        before = madic_digits(j, m)
        after = madic_digits(k, m)
        for t in range(1, m):
            assert after.count(t) == before.count(t) + (1 if t == i else 0)


# --- solve_product ------------------------------------------------------------------

def test_binary_product_solution_is_geometric():
    assert solve_product(Polynomial([1, 1]), 2, 16) == ALL_ONES_16


def test_trivial_input_gives_trivial_solution():
    for m in (2, 3, 10):
        assert solve_product(Polynomial([1]), m, 6) == truncate(Polynomial([1]), 6)


def test_alternating_signs_follow_the_one_counts():
    got = solve_product(Polynomial([1, -1]), 2, 8)
    assert got.coeffs == (1, -1, -1, 1, -1, 1, 1, -1)
    assert got.coeffs == tuple(recurrence_solution([1, -1], 2, 8))


def test_solver_accepts_truncated_series_input():
    # f = geometric series: only a truncation is ever available
    f = TruncatedSeries([1] * 12)
    got = solve_product(f, 3, 12)
    assert verify_solution(f, 3, got, 12)
    with pytest.raises(InsufficientPrecision):
        solve_product(TruncatedSeries([1, 1]), 3, 12)


def test_solvers_reject_bad_inputs():
    with pytest.raises(ConstantTermNotOne):
        solve_product(Polynomial([2, 1]), 2, 4)
    with pytest.raises(ConstantTermNotOne):
        solve_digits(Polynomial([0, 1]), 2, 4)
    with pytest.raises(DegenerateModulus):
        solve_product(Polynomial([1]), 1, 4)
    with pytest.raises(DegenerateModulus):
        solve_digits(Polynomial([1]), 1, 4)
    with pytest.raises(DegreeTooLarge):
        solve_digits(Polynomial([1, 1, 1]), 2, 4)


# --- solve_digits ---------------------------------------------------------------------

def test_coefficient_71_is_read_off_its_digits():
    a1, a2 = Fraction(2), Fraction(3)
    f = Polynomial([1, a1, a2])
    got = solve_digits(f, 3, 72)
    assert got.coeffs[71] == a1 * a2**3 == 54


def test_small_indices_copy_the_input_coefficients():
    f = Polynomial([1, Fraction(5, 7), -3, Fraction(1, 2)])
    got = solve_digits(f, 4, 4)
    assert got.coeffs == (1, Fraction(5, 7), -3, Fraction(1, 2))


def test_both_methods_agree_on_the_binary_example():
    assert solve_digits(Polynomial([1, 1]), 2, 16) == solve_product(Polynomial([1, 1]), 2, 16)


def test_zero_coefficient_kills_digit_users_only():
    # base 3 with no q^2 term: exactly the indices whose expansion uses digit 2 die
    f = Polynomial([1, 1])
    got = solve_digits(f, 3, 27)
    for k in range(27):
        uses_two = madic_digits(k, 3).count(2) > 0
        assert (got.coeffs[k] == 0) == uses_two


def test_single_coefficient_at_a_large_index():
    f = Polynomial([1, Fraction(1, 2), 3])
    k = 10**6
    profile = madic_digits(k, 3)
    expected = Fraction(1, 2) ** profile.count(1) * 3 ** profile.count(2)
    assert solution_coefficient(f, 3, k) == expected


def test_digit_concatenation_multiplies_coefficients():
    rng = random.Random(9)
    f = Polynomial([1, Fraction(2, 3), -5])
    m = 3
    sol = solve_digits(f, m, 250)
    for _ in range(100):
        s = rng.randint(1, 4)
        k1 = rng.randint(0, m**s - 1)
        k2 = rng.randint(0, (249 - k1) // m**s)
        k = k1 + m**s * k2
        assert sol.coeffs[k] == sol.coeffs[k1] * sol.coeffs[k2]


# --- verify_solution -------------------------------------------------------------------

def test_geometric_series_solves_the_binary_equation():
    assert verify_solution(Polynomial([1, 1]), 2, ALL_ONES_16, 16)


def test_constant_candidate_fails():
    assert not verify_solution(Polynomial([1, 1]), 2, truncate(Polynomial([1]), 4), 4)


def test_trivial_f_forces_the_trivial_solution():
    # with f = 1 the equation pins F(q) = F(q^2): the geometric series fails
    assert not verify_solution(Polynomial([1]), 2, TruncatedSeries([1, 1, 1, 1]), 4)
    assert verify_solution(Polynomial([1]), 2, truncate(Polynomial([1]), 4), 4)


def test_verification_needs_precision():
    with pytest.raises(InsufficientPrecision):
        verify_solution(Polynomial([1, 1]), 2, TruncatedSeries([1, 1]), 4)


# --- cross-validation on random inputs ---------------------------------------------------

def random_unit_polynomial(rng, max_degree):
    degree = rng.randint(1, max_degree)
    return Polynomial([1] + [rand_coeff(rng) for _ in range(degree)])


def test_methods_agree_and_verify_on_random_inputs():
    rng = random.Random(17)
    n = 128
    for m in (2, 3, 5, 10):
        for _ in range(10):
            f = random_unit_polynomial(rng, m - 1)
            by_digits = solve_digits(f, m, n)
            by_product = solve_product(f, m, n)
            assert by_digits == by_product
            assert verify_solution(f, m, by_product, n)
            assert by_product.coeffs == tuple(
                recurrence_solution(list(f.coeffs), m, n)
            )


def test_high_degree_inputs_still_solve_by_product():
    rng = random.Random(23)
    n = 64
    for _ in range(10):
        # degree may exceed m - 1: only the product method applies
        f = Polynomial([1] + [rand_coeff(rng) for _ in range(rng.randint(2, 6))])
        m = 2
        got = solve_product(f, m, n)
        assert verify_solution(f, m, got, n)
        with pytest.raises(DegreeTooLarge):
            solve_digits(f, m, n)


def test_perturbed_solutions_fail_verification():
    rng = random.Random(29)
    f = Polynomial([1, Fraction(3, 2), -2])
    m = 3
    n = 64
    sol = solve_product(f, m, n)
    for _ in range(50):
        k = rng.randint(1, n - 1)
        bumped = list(sol.coeffs)
        bumped[k] += rand_coeff(rng)
        candidate = TruncatedSeries(bumped)
        assert not verify_solution(f, m, candidate, k + 1)
        assert not verify_solution(f, m, candidate, n)
