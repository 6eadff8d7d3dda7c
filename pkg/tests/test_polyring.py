import random
from fractions import Fraction
from itertools import permutations

import pytest

from shifted_hooks.exactnum import stirling_first
from shifted_hooks.polyring import (
    T,
    W,
    Y,
    MultiPoly,
    NotDivisibleError,
    PolicyError,
    binomial_poly,
    determinant,
    exact_div,
    from_falling_basis,
    geometric_inverse,
    monomial,
    multilinear_power,
    param,
    poly_to_json,
    to_falling_basis,
    upoly_coeffs,
    upoly_eval,
    upoly_from_coeffs,
    var,
)

Y1, Y2, Y3 = var(Y, 1), var(Y, 2), var(Y, 3)
W1 = var(W, 1)
T1, T2, T3 = var(T, 1), var(T, 2), var(T, 3)
U = param("u")
X = param("x")


def v(vid):
    return MultiPoly.variable(vid)


def rand_poly(rng, vids, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        m = monomial(
            [(vid, rng.randint(0, max_exp)) for vid in vids if rng.random() < 0.7]
        )
        terms[m] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return MultiPoly(terms)


def test_add_mul_basics():
    p = (1 + v(Y1)) * (1 - v(Y1))
    assert p == 1 - v(Y1) ** 2


def test_squarefree_t_rule():
    sf = frozenset({T})
    t1 = MultiPoly.variable(T1, squarefree=sf)
    t2 = MultiPoly.variable(T2, squarefree=sf)
    assert (t1 + t2) ** 2 == 2 * t1 * t2


def test_truncated_cube():
    caps = {Y: 2}
    p = MultiPoly.constant(1, caps) + MultiPoly.variable(Y1, caps) + MultiPoly.variable(
        Y2, caps
    )
    full = (1 + v(Y1) + v(Y2)) ** 3
    truncated = MultiPoly(
        {m: c for m, c in full.terms.items() if sum(e for _, e in m) <= 2}
    )
    assert (p**3).terms == truncated.terms


def test_policy_conflict_raises():
    p = MultiPoly.variable(Y1, caps={Y: 2})
    q = MultiPoly.variable(Y1, caps={Y: 3})
    with pytest.raises(PolicyError):
        _ = p * q


def test_ring_axioms_randomized():
    rng = random.Random(0xA5F0_64B1_7C3D_9E21)
    vids = [Y1, Y2, W1, U]
    for _ in range(120):
        p, q, r = (rand_poly(rng, vids) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_exact_div_examples():
    num = v(Y1) ** 2 - v(Y2) ** 2
    assert exact_div(num, v(Y1) - v(Y2)) == v(Y1) + v(Y2)
    with pytest.raises(NotDivisibleError):
        exact_div(v(Y1) * v(Y2), v(Y1) + v(Y2))


def test_exact_div_alternant_ratio_n2():
    # a_{delta+(1)} / a_delta for two variables is y1 + y2
    num = v(Y1) ** 2 * v(Y2) ** 0 - v(Y2) ** 2  # det(y_i^{(2,0)_j})
    den = v(Y1) - v(Y2)
    assert exact_div(num, den) == v(Y1) + v(Y2)


def test_exact_div_round_trip_randomized():
    rng = random.Random(0x0DDB_A11)
    vids = [Y1, Y2, U]
    done = 0
    while done < 200:
        p = rand_poly(rng, vids)
        q = rand_poly(rng, vids)
        if q.is_zero():
            continue
        assert exact_div(p * q, q) == p
        done += 1


def perm_determinant(matrix):
    """Independent oracle: signed permutation sum."""
    n = len(matrix)
    total = MultiPoly({})
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = MultiPoly.constant(sign)
        for i in range(n):
            entry = matrix[i][perm[i]]
            if not isinstance(entry, MultiPoly):
                entry = MultiPoly.constant(entry)
            term = term * entry
        total = total + term
    return total


def test_determinant_examples():
    ident = [[MultiPoly.constant(1 if i == j else 0) for j in range(3)] for i in range(3)]
    assert determinant(ident) == MultiPoly.constant(1)

    m = [[v(Y1), MultiPoly.constant(1)], [v(Y2), MultiPoly.constant(1)]]
    assert determinant(m) == v(Y1) - v(Y2)


def test_determinant_vandermonde_4x4():
    ys = [v(var(Y, i)) for i in range(1, 5)]
    m = [[ys[i] ** j for j in range(3, -1, -1)] for i in range(4)]
    det = determinant(m)
    prod = MultiPoly.constant(1)
    for i in range(4):
        for j in range(i + 1, 4):
            prod = prod * (ys[i] - ys[j])
    assert det == prod


def test_determinant_matches_permutation_oracle():
    rng = random.Random(0xDE7)
    for size in range(1, 5):
        for _ in range(6):
            m = [
                [rand_poly(rng, [Y1, Y2], max_terms=2, max_exp=2) for _ in range(size)]
                for _ in range(size)
            ]
            assert determinant(m) == perm_determinant(m)


def test_determinant_numeric_entries():
    m = [[Fraction(1, 2), 1], [3, Fraction(4)]]
    assert determinant(m) == Fraction(1, 2) * 4 - 3


def test_determinant_rejects_non_square():
    with pytest.raises(ValueError):
        determinant([[MultiPoly.constant(1), MultiPoly.constant(2)]])


def test_geometric_inverse_examples():
    p = 1 - v(Y1) * v(W1)
    inv = geometric_inverse(p, {Y: 3, W: 3})
    yw = v(Y1) * v(W1)
    assert inv.terms == (1 + yw + yw**2 + yw**3).terms

    assert geometric_inverse(1 - v(Y1), {Y: 0}).terms == MultiPoly.constant(1).terms

    with pytest.raises(ValueError):
        geometric_inverse(2 + v(Y1), {Y: 3})


def test_geometric_inverse_self_check():
    caps = {Y: 2, W: 2}
    p = MultiPoly.constant(1, caps)
    for j in (1, 2):
        for k in (1, 2):
            p = p * (
                MultiPoly.constant(1, caps)
                - MultiPoly.variable(var(Y, j), caps) * MultiPoly.variable(var(W, k), caps)
            )
    inv = geometric_inverse(p, caps)
    assert (p * inv).terms == MultiPoly.constant(1, caps).terms


def test_multilinear_power():
    x = v(X)
    p1 = multilinear_power(X, 1)
    assert p1.coeff(monomial([(T1, 1)])) == x
    assert p1.constant_term() == 1

    # 1 + x(t1 + t2) + x(x-1) t1 t2
    p2 = multilinear_power(X, 2)
    assert p2.coeff(monomial([(T1, 1), (T2, 1)])) == x * (x - 1)
    assert p2.coeff(monomial([(T1, 1)])) == x + x * (x - 1) * v(T2)

    p3 = multilinear_power(X, 3)
    assert p3.coeff(monomial([(T1, 1), (T2, 1), (T3, 1)])) == x * (x - 1) * (x - 2)


def test_multilinear_power_subset_oracle():
    # direct subset expansion of (1 + t1 + t2 + t3)^x with t_i^2 = 0
    from itertools import combinations

    from shifted_hooks.polyring import falling_factorial_poly

    x = v(X)
    expected = MultiPoly({})
    for k in range(4):
        for subset in combinations((T1, T2, T3), k):
            mono = MultiPoly({monomial([(t, 1) for t in subset]): Fraction(1)})
            expected = expected + falling_factorial_poly(x, k) * mono
    assert multilinear_power(X, 3).terms == expected.terms


def test_coeff_examples():
    p = 1 + v(X) * v(T1)
    assert p.coeff(monomial([(T1, 1)])) == v(X)
    q = (v(Y1) + v(Y2)) ** 2
    assert q.coeff(monomial([(Y1, 1), (Y2, 1)])) == MultiPoly.constant(2)
    assert q.coeff(monomial([(Y1, 2)])) == MultiPoly.constant(1)


def test_falling_basis_examples():
    p = upoly_from_coeffs([0, 0, 1], X)  # x^2
    coeffs = to_falling_basis(p, X)
    assert [c.constant_term() for c in coeffs] == [0, 1, 1]

    from shifted_hooks.polyring import falling_factorial_poly

    p3 = falling_factorial_poly(v(X), 3)
    assert [c.constant_term() for c in to_falling_basis(p3, X)] == [0, 0, 0, 1]

    const = MultiPoly.constant(7)
    assert [c.constant_term() for c in to_falling_basis(const, X)] == [7]


def test_falling_basis_round_trip():
    rng = random.Random(0xFA11)
    for _ in range(40):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(11)]
        p = upoly_from_coeffs(coeffs, X)
        fb = to_falling_basis(p, X)
        assert from_falling_basis(fb, X) == p


def test_falling_basis_stirling_consistency():
    # direct check against signed Stirling expansion at degree 6
    p = upoly_from_coeffs([0, 0, 0, 0, 0, 0, 1], X)
    fb = [c.constant_term() for c in to_falling_basis(p, X)]
    for x in range(10):
        falling = [1]
        acc = 1
        for k in range(1, 7):
            acc *= x - k + 1
            falling.append(acc)
        assert x**6 == sum(fb[k] * falling[k] for k in range(7))
    assert stirling_first(6, 6) == 1  # table exercised


def test_binomial_poly_examples():
    u = v(U)
    assert binomial_poly(u, 1) == u
    assert binomial_poly(u + 1, 2) == u * (u + 1) * Fraction(1, 2)
    assert upoly_eval(binomial_poly(u + 2, 3), U, 1) == 1


def test_upoly_helpers():
    p = upoly_from_coeffs([Fraction(1, 2), 0, 3], U)
    assert upoly_coeffs(p, U) == [Fraction(1, 2), 0, 3]
    assert upoly_eval(p, U, 2) == Fraction(25, 2)
    with pytest.raises(ValueError):
        upoly_coeffs(p * v(Y1), U)


def test_serialization_canonical():
    p = v(Y2) + v(Y1) + v(Y1) * v(Y1) * Fraction(1, 2)
    js = poly_to_json(p)
    assert js == [
        {"vars": [["Y", 1, 1]], "coeff": "1"},
        {"vars": [["Y", 2, 1]], "coeff": "1"},
        {"vars": [["Y", 1, 2]], "coeff": "1/2"},
    ]


def test_substitute_and_evaluate():
    p = v(Y1) ** 2 + v(Y2)
    assert p.substitute(Y1, v(Y2)) == v(Y2) ** 2 + v(Y2)
    assert p.evaluate({Y1: 2, Y2: Fraction(1, 2)}) == Fraction(9, 2)
