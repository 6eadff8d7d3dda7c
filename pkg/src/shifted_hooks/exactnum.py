"""Exact integer/rational arithmetic and classical number-theoretic tables.

Integers are Python ints (arbitrary precision); rationals are
`fractions.Fraction` (always normalized, denominator > 0).  Stirling
numbers are memoized in triangular tables grown on demand.
"""

from fractions import Fraction
from math import comb, factorial as _factorial

Rational = Fraction


def factorial(k):
    """k! for k >= 0."""
    if k < 0:
        raise ValueError("factorial requires k >= 0, got %r" % (k,))
    return _factorial(k)


def binomial(a, k):
    """C(a, k) for integer a >= 0; zero when k < 0 or k > a.

    Negative upper arguments are rejected: symbolic binomials with
    polynomial upper argument live in polyring.binomial_poly.
    """
    if a < 0:
        raise ValueError("binomial requires a >= 0, got a=%r" % (a,))
    if k < 0 or k > a:
        return 0
    return comb(a, k)


# Triangular memo tables, row n holds values for k = 0..n.
_STIRLING1_UNSIGNED = [[1]]
_STIRLING2 = [[1]]


def _grow(table, n, step):
    while len(table) <= n:
        prev = table[-1]
        m = len(table)  # row being built
        row = [0] * (m + 1)
        for k in range(m + 1):
            row[k] = step(m, k, prev)
        table.append(row)


def stirling_first(n, k, signed=False):
    """Stirling numbers of the first kind.

    Unsigned c(n, k) counts permutations of n with k cycles; the signed
    variant s(n, k) satisfies (x)_n = sum_k s(n, k) x^k, so
    s(n, k) = (-1)^(n-k) c(n, k).
    """
    if n < 0 or k < 0:
        raise ValueError("stirling_first requires n, k >= 0")
    if k > n:
        return 0
    _grow(
        _STIRLING1_UNSIGNED,
        n,
        lambda m, j, prev: (prev[j - 1] if j >= 1 else 0)
        + (m - 1) * (prev[j] if j < m else 0),
    )
    c = _STIRLING1_UNSIGNED[n][k]
    if signed and (n - k) % 2 == 1:
        return -c
    return c


def stirling_second(n, k):
    """S(n, k), satisfying x^n = sum_k S(n, k) (x)_k."""
    if n < 0 or k < 0:
        raise ValueError("stirling_second requires n, k >= 0")
    if k > n:
        return 0
    _grow(
        _STIRLING2,
        n,
        lambda m, j, prev: (prev[j - 1] if j >= 1 else 0)
        + j * (prev[j] if j < m else 0),
    )
    return _STIRLING2[n][k]


def falling_factorial(x, k):
    """(x)_k = x (x-1) ... (x-k+1); x may be int or Fraction."""
    if k < 0:
        raise ValueError("falling_factorial requires k >= 0")
    out = x - x + 1 if not isinstance(x, int) else 1
    for j in range(k):
        out *= x - j
    return out


def fmt_rat(q):
    """Exact 'num/den' string (the '/1' is dropped for integers)."""
    return str(Fraction(q))
