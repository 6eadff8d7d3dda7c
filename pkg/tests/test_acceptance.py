"""Acceptance suite: one test per top-level criterion, each printing a
single PASS/FAIL line.  Everything is exact equality; there are no
tolerances anywhere."""

import sys
from fractions import Fraction
from math import factorial

from shifted_hooks.exactnum import binomial
from shifted_hooks.identities import (
    binomial_combination,
    check_cor_2_2,
    check_cor_3_2,
    check_cor_4_2,
    check_eigen,
    check_lemma_2_1,
    check_lemma_4_1,
    check_lemma_5_1,
    check_prop_3_1,
    check_remark_2_3,
    check_thm_1_1,
    ebeta_closed_poly,
    fit_polynomiality,
    lemma_5_1_rhs,
    prop_3_1_samples,
    stan_lhs,
)
from shifted_hooks.partitions import (
    enumerate_partitions,
    partition_count,
    syt_count,
)
from shifted_hooks.polyring import param


def conclude(label, ok, detail=""):
    line = "%s: %s" % (label, "PASS" if ok else "FAIL")
    if detail and not ok:
        line += " (%s)" % detail
    print(line, file=sys.stderr, flush=True)
    assert ok, line


def all_pass(reports):
    for r in reports:
        if not r.passed:
            return False, "%s %r: %s" % (r.identity, r.params, r.witness)
    return True, ""


def test_criterion_01_closed_form_polynomials():
    v = param("n")
    expected = {
        0: [1],
        1: [0, 1],
        2: [-1, -1, 3],
        3: [1, -5, -10, 15],
        4: [2, 19, -20, -105, 105],
    }
    ok = all(
        binomial_combination(ebeta_closed_poly(b, v), v, b) == expected[b]
        for b in range(5)
    )
    detail = ""
    if ok:
        ok, detail = all_pass(
            check_cor_4_2(n, beta) for n in range(1, 13) for beta in range(5)
        )
    conclude("criterion 01 (closed-form shifted-part averages)", ok, detail)


def test_criterion_02_schur_expansion_symbolic():
    ok, detail = all_pass(check_lemma_2_1(n) for n in range(1, 6))
    conclude("criterion 02 (symbolic Schur expansion, n=1..5)", ok, detail)


def test_criterion_03_hook_content_formula():
    ok, detail = all_pass(
        check_cor_2_2(lam, u)
        for n in range(1, 10)
        for lam in enumerate_partitions(n)
        for u in range(6)
    )
    conclude("criterion 03 (A_lambda(u) computations, n<=9, u<=5)", ok, detail)


def test_criterion_04_determinant_evaluations():
    ok, detail = all_pass(
        check_cor_3_2(lam, (0, 1, 2, 5))
        for n in range(0, 10)
        for lam in enumerate_partitions(n)
    )
    conclude("criterion 04 (determinant evaluations, n<=9)", ok, detail)


def test_criterion_05_binomial_determinant():
    reports = [check_prop_3_1(2)]
    for n in range(3, 7):
        for z in prop_3_1_samples(n, 100, seed=0):
            reports.append(check_prop_3_1(n, z))
    ok, detail = all_pass(reports)
    conclude("criterion 05 (binomial determinant, symbolic + sampled)", ok, detail)


def test_criterion_06_truncated_series_identity():
    ok, detail = all_pass(
        check_thm_1_1(n, m, d)
        for n, m, d in ((1, 1, 6), (2, 1, 4), (2, 2, 4), (3, 2, 4), (3, 3, 3))
    )
    conclude("criterion 06 (truncated series identity)", ok, detail)


def test_criterion_07_coefficient_extraction():
    ok, detail = all_pass(
        check_lemma_4_1(n, k) for n in range(1, 5) for k in range(n + 1)
    )
    conclude("criterion 07 (falling-factorial coefficients, n<=4)", ok, detail)


def test_criterion_08_two_factor_averages():
    ok = lemma_5_1_rhs(2, 1, 1) == 9 and stan_lhs(2, (1, 1)) == 9
    detail = "hand anchor n=2 failed"
    if ok:
        ok, detail = all_pass(
            check_lemma_5_1(n, a, b)
            for n in range(1, 8)
            for a in range(min(n, 3) + 1)
            for b in range(min(n, 3) + 1)
        )
    conclude("criterion 08 (two-factor averages, n<=7)", ok, detail)


def test_criterion_09_non_integer_counterexample():
    r = check_remark_2_3()
    ok = (
        r.passed
        and r.params["value"] == Fraction(5, 2)
        and r.params["control"] == 2
    )
    conclude("criterion 09 (non-integer counterexample 5/2)", ok, r.witness or "")


def test_criterion_10_polynomiality_fits():
    ok, detail = True, ""
    for ks in ((1,), (2,), (1, 1), (2, 1), (2, 2)):
        degree = 2 * sum(ks)
        train = range(1, degree + 2)
        test = [degree + 2, degree + 3]
        res = fit_polynomiality(ks, train, test)
        if not res.passed or len(res.test_points) < 2:
            ok, detail = False, "ks=%r: %s" % (ks, res.witness)
            break
    conclude("criterion 10 (polynomiality of averages)", ok, detail)


def test_criterion_11_eigen_relations():
    reports = []
    for n in range(1, 5):
        for size in range(6):
            for lam in enumerate_partitions(size):
                if lam.length <= n:
                    reports.append(check_eigen(n, lam, 1))
    for theta in (2, 3):
        for n in range(1, 4):
            for size in range(5):
                for lam in enumerate_partitions(size):
                    if lam.length <= n:
                        reports.append(check_eigen(n, lam, theta))
    ok, detail = all_pass(reports)
    conclude("criterion 11 (eigen-relations)", ok, detail)


def test_criterion_12_sanity_anchors():
    ok = all(
        sum(syt_count(l) ** 2 for l in enumerate_partitions(n)) == factorial(n)
        for n in range(11)
    )
    classical = [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231,
        297, 385, 490, 627,
    ]
    ok = ok and [partition_count(n) for n in range(21)] == classical
    ok = ok and binomial(10, 5) == 252
    conclude("criterion 12 (tableau and partition-count anchors)", ok)
