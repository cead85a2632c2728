"""Command-line behavior: golden outputs, JSON shape, and exit codes."""

import json
from fractions import Fraction

from qseries.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- golden outputs ----------------------------------------------------------------

def test_solve_both_methods_golden(capsys):
    code, out, err = invoke(
        capsys, "solve", "--f", "1+q", "--m", "2", "--prec", "8", "--method", "both"
    )
    assert code == 0
    assert err == ""
    assert out == (
        "product: 1 + q + q^2 + q^3 + q^4 + q^5 + q^6 + q^7 + O(q^8)\n"
        "digits: 1 + q + q^2 + q^3 + q^4 + q^5 + q^6 + q^7 + O(q^8)\n"
        "AGREE\n"
    )


def test_digits_golden(capsys):
    code, out, err = invoke(capsys, "digits", "71", "--base", "3")
    assert (code, out, err) == (0, "d_1=1 d_2=3\n", "")


def test_limit_golden(capsys):
    code, out, err = invoke(
        capsys, "limit", "--family", "qint", "--primes", "2,3", "--prec", "8"
    )
    assert (code, out, err) == (
        0,
        "1 + q + q^2 + q^3 + q^4 + q^5 + q^6 + q^7 + O(q^8)\n",
        "",
    )


def test_output_is_deterministic(capsys):
    first = invoke(capsys, "solve", "--f", "1-1/2*q", "--m", "3", "--prec", "9")
    second = invoke(capsys, "solve", "--f", "1-1/2*q", "--m", "3", "--prec", "9")
    assert first == second


# --- other subcommands ----------------------------------------------------------------

def test_eval_and_invert(capsys):
    code, out, _ = invoke(capsys, "eval", "(1+q)*(1+q^2)", "--prec", "6")
    assert code == 0
    assert out == "1 + q + q^2 + q^3 + O(q^6)\n"
    code, out, _ = invoke(capsys, "eval", "1-q", "--prec", "5", "--invert")
    assert code == 0
    assert out == "1 + q + q^2 + q^3 + q^4 + O(q^5)\n"


def test_qmul_prints_exact_polynomial(capsys):
    code, out, _ = invoke(capsys, "qmul", "--f", "qint(2)", "--g", "qint(3)", "--m", "2")
    assert code == 0
    assert out == "1 + q + q^2 + q^3 + q^4 + q^5\n"


def test_limit_of_ones_family(capsys):
    code, out, _ = invoke(capsys, "limit", "--family", "ones", "--primes", "2", "--prec", "4")
    assert code == 0
    assert out == "1 + O(q^4)\n"


def test_solve_single_method(capsys):
    code, out, _ = invoke(
        capsys, "solve", "--f", "1-q", "--m", "2", "--prec", "4", "--method", "product"
    )
    assert code == 0
    assert out == "1 - q - q^2 + q^3 + O(q^4)\n"


# --- JSON ------------------------------------------------------------------------------

def test_eval_json_schema_and_exact_rationals(capsys):
    code, out, _ = invoke(capsys, "eval", "1-1/2*q", "--prec", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"precision", "coeffs"}
    assert payload["precision"] == 4
    assert all(isinstance(c, str) for c in payload["coeffs"])
    assert len(payload["coeffs"]) == 4
    assert [Fraction(c) for c in payload["coeffs"]] == [1, Fraction(-1, 2), 0, 0]


def test_qmul_json_has_null_precision(capsys):
    code, out, _ = invoke(
        capsys, "qmul", "--f", "qint(2)", "--g", "qint(2)", "--m", "2", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"precision": None, "coeffs": ["1", "1", "1", "1"]}


def test_solve_json_reports_both_methods(capsys):
    code, out, _ = invoke(
        capsys, "solve", "--f", "1+2*q", "--m", "3", "--prec", "5", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    assert payload["product"] == payload["digits"] == ["1", "2", "0", "2", "4"]


def test_digits_json(capsys):
    code, out, _ = invoke(capsys, "digits", "71", "--base", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"k": 71, "base": 3, "counts": [1, 3]}


# --- exit codes -------------------------------------------------------------------------

def test_domain_error_exits_one(capsys):
    code, out, err = invoke(capsys, "solve", "--f", "q", "--m", "2", "--prec", "4")
    assert code == 1
    assert out == ""
    assert "constant term" in err


def test_digit_solver_degree_error_exits_one(capsys):
    code, _, err = invoke(
        capsys, "solve", "--f", "1+q+q^2", "--m", "2", "--prec", "4", "--method", "digits"
    )
    assert code == 1
    assert "deg" in err


def test_parse_error_exits_two(capsys):
    code, out, err = invoke(capsys, "eval", "1+*q", "--prec", "4")
    assert code == 2
    assert out == ""
    assert "offset 2" in err


def test_exponent_cap_exits_two(capsys):
    code, _, err = invoke(capsys, "eval", "q^99999999", "--prec", "4")
    assert code == 2
    assert "size cap" in err


def test_usage_error_exits_two(capsys):
    code, _, _ = invoke(capsys, "eval", "1+q")  # --prec missing
    assert code == 2
    code, _, _ = invoke(capsys, "frobnicate")
    assert code == 2
    code, _, _ = invoke(capsys, "eval", "1+q", "--prec", "0")
    assert code == 2


def test_invert_of_non_unit_exits_one(capsys):
    code, _, err = invoke(capsys, "eval", "q", "--prec", "4", "--invert")
    assert code == 1
    assert "constant term" in err


def test_non_prime_in_limit_exits_one(capsys):
    code, _, err = invoke(capsys, "limit", "--family", "qint", "--primes", "4", "--prec", "4")
    assert code == 1
    assert "prime" in err
