import random
from fractions import Fraction

import pytest

from shifted_hooks.exactnum import (
    binomial,
    factorial,
    falling_factorial,
    fmt_rat,
    stirling_first,
    stirling_second,
)


def factorial_oracle(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def pascal_oracle(a, k):
    if k < 0 or k > a:
        return 0
    if k == 0:
        return 1
    return pascal_oracle(a - 1, k - 1) + pascal_oracle(a - 1, k)


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(12) == factorial_oracle(12) == 479001600


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(10, 5) == pascal_oracle(10, 5) == 252
    assert binomial(7, -2) == 0


def test_binomial_matches_pascal():
    for a in range(9):
        for k in range(-1, a + 2):
            assert binomial(a, k) == pascal_oracle(a, k)


def test_binomial_rejects_negative_upper():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_stirling_first_examples():
    assert stirling_first(3, 1) == 2
    assert stirling_first(3, 2, signed=True) == -3
    assert stirling_first(0, 0, signed=True) == 1


def test_signed_stirling_expands_falling_factorial():
    # (x)_n = sum_k s(n, k) x^k, checked at integer points
    for n in range(9):
        for x in range(-4, 7):
            lhs = falling_factorial(x, n)
            rhs = sum(stirling_first(n, k, signed=True) * x**k for k in range(n + 1))
            assert lhs == rhs


def test_unsigned_stirling_row_sums():
    for n in range(13):
        assert sum(stirling_first(n, k) for k in range(n + 1)) == factorial(n)


def test_stirling_second_examples():
    assert stirling_second(3, 2) == 3
    assert stirling_second(4, 1) == 1
    for n in range(7):
        assert stirling_second(n, n) == 1


def test_stirling_second_expands_monomial():
    # x^n = sum_k S(n, k) (x)_k
    for n in range(9):
        for x in range(-3, 7):
            assert x**n == sum(
                stirling_second(n, k) * falling_factorial(x, k) for k in range(n + 1)
            )


def test_basis_round_trip():
    # x^n -> falling-factorial basis -> back, via S(n, k) and s(k, i)
    for n in range(13):
        coeffs = [0] * (n + 1)
        for k in range(n + 1):
            s2 = stirling_second(n, k)
            for i in range(k + 1):
                coeffs[i] += s2 * stirling_first(k, i, signed=True)
        expected = [0] * (n + 1)
        expected[n] = 1
        assert coeffs == expected


def test_rational_field_axioms_randomized():
    rng = random.Random(0x5EED_2026)
    for _ in range(200):
        a, b, c = (
            Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * (1 / a) == 1


def test_fmt_rat():
    assert fmt_rat(Fraction(5, 2)) == "5/2"
    assert fmt_rat(Fraction(6, 3)) == "2"
    assert fmt_rat(7) == "7"
