"""One verifier per identity, each pairing a closed form with an
independent brute-force computation and returning a structured report.

Left-hand sides are computed by direct enumeration over partitions (or
full polynomial expansion); right-hand sides come from the closed forms.
Agreement is checked as exact equality of Fractions or of canonical
sparse-polynomial term maps, never numerically.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from . import polyring, symfun
from .exactnum import binomial, falling_factorial, fmt_rat, stirling_first
from .partitions import (
    Partition,
    a_lambda_poly,
    conjugate,
    enumerate_partitions,
    hook_product,
    hook_profile,
    shifted_parts,
    skew_syt_count,
    syt_count,
)
from .polyring import (
    MultiPoly,
    T,
    W,
    Y,
    Z,
    binomial_poly,
    geometric_inverse,
    monomial,
    monomial_key,
    multilinear_power,
    param,
    to_falling_basis,
    upoly_eval,
    var,
)


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str  # "PASS" | "FAIL"
    witness: Optional[str] = None
    elapsed_ms: int = 0

    @property
    def passed(self):
        return self.status == "PASS"

    def to_json(self):
        return {
            "identity": self.identity,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "status": self.status,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class FitResult:
    degree: int
    coefficients: list  # falling-factorial basis (n)_j
    train_points: list
    test_points: list
    status: str
    witness: Optional[str] = None

    @property
    def passed(self):
        return self.status == "PASS"

    def to_json(self):
        return {
            "degree": self.degree,
            "coefficients": [fmt_rat(c) for c in self.coefficients],
            "train_points": list(self.train_points),
            "test_points": list(self.test_points),
            "status": self.status,
            "witness": self.witness,
        }


def _jsonable(v):
    if isinstance(v, Partition):
        return v.to_json()
    if isinstance(v, Fraction):
        return fmt_rat(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


class _Check:
    """Collects the first discrepancy while timing the verifier."""

    def __init__(self, identity, params):
        self.identity = identity
        self.params = params
        self.witness = None
        self.start = time.perf_counter()
        self.notes = []

    def equal_values(self, label, lhs, rhs):
        if self.witness is None and lhs != rhs:
            self.witness = "%s: lhs=%s rhs=%s" % (label, fmt_rat(lhs), fmt_rat(rhs))

    def integer(self, label, value):
        if self.witness is None and Fraction(value).denominator != 1:
            self.witness = "%s: value %s is not an integer" % (label, fmt_rat(value))

    def equal_polys(self, label, lhs, rhs):
        if self.witness is not None or lhs.terms == rhs.terms:
            return
        for m in sorted(
            set(lhs.terms) | set(rhs.terms), key=monomial_key
        ):
            a = lhs.terms.get(m, Fraction(0))
            b = rhs.terms.get(m, Fraction(0))
            if a != b:
                self.witness = "%s: monomial %r lhs=%s rhs=%s" % (
                    label,
                    m,
                    fmt_rat(a),
                    fmt_rat(b),
                )
                return

    def fail(self, message):
        if self.witness is None:
            self.witness = message

    def note(self, message):
        self.notes.append(message)

    def report(self):
        elapsed = int((time.perf_counter() - self.start) * 1000)
        status = "PASS" if self.witness is None else "FAIL"
        witness = self.witness
        if witness is None and self.notes:
            witness = None
        return VerificationReport(
            self.identity, self.params, status, witness, elapsed
        )


def elementary_value(k, values):
    """e_k of a finite multiset of numbers, by the product recurrence."""
    if k < 0:
        raise ValueError("k must be >= 0")
    e = [Fraction(1)] + [Fraction(0)] * k
    for v in values:
        for j in range(min(k, len(e) - 1), 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


# ---------------------------------------------------------------------
# Section 2: the Leibniz step, Lemma 2.1, Corollary 2.2, Remark 2.3
# ---------------------------------------------------------------------


def check_leibniz_step(n):
    """L(u)(a_delta p_1^n) = a_delta n! sum_j C(u+j-1, j) p_1^j e_{n-j}."""
    if not 1 <= n <= 6:
        raise ValueError("n must be in 1..6")
    chk = _Check("leibniz", {"n": n})
    u = param("u")
    up = MultiPoly.variable(u)
    adelta = symfun.vandermonde(n)
    p1 = symfun.power_sum_1(n)
    lhs = symfun.apply_L(adelta * p1**n, u, n)
    rhs = MultiPoly({})
    for j in range(n + 1):
        rhs = rhs + binomial_poly(up + (j - 1), j) * p1**j * symfun.elementary(
            n - j, n
        )
    rhs = adelta * factorial(n) * rhs
    chk.equal_polys("identity in y,u", lhs, rhs)
    return chk.report()


def check_lemma_2_1(n):
    """sum_i C(u+i-1, i) p_1^i e_{n-i} = sum_{lam |- n} A_lam(u) s_lam."""
    if not 1 <= n <= 5:
        raise ValueError("n must be in 1..5")
    chk = _Check("lemma2.1", {"n": n})
    u = param("u")
    up = MultiPoly.variable(u)
    p1 = symfun.power_sum_1(n)
    lhs = MultiPoly({})
    for i in range(n + 1):
        lhs = lhs + binomial_poly(up + (i - 1), i) * p1**i * symfun.elementary(
            n - i, n
        )
    rhs = MultiPoly({})
    for lam in enumerate_partitions(n):
        if lam.length > n:
            continue
        rhs = rhs + a_lambda_poly(lam, n, u) * symfun.schur(lam, n)
    chk.equal_polys("identity in y,u", lhs, rhs)
    return chk.report()


def check_cor_2_2(lam, u):
    """Computations of A_lam(u) agree and are integers.

    Always checked: phi_lam(u)/H_lam against the weighted skew-SYT sum
    sum_i C(u+n-i-1, n-i) f^{lam/1^i}, and integrality.

    For u >= 1 the top row of mu = (n^u, lam') has n cells whose hooks
    are exactly lam_j + n - j + u, so the product of the top-row hooks
    of mu divided by H_lam is checked as well.  The further collapse to
    H_mu/H_lam^2 holds only at u = 1 (for u >= 2 the rows of n between
    the top row and lam' contribute extra hook factors) and is checked
    only there."""
    if u < 0:
        raise ValueError("u must be >= 0")
    n = lam.size
    chk = _Check("cor2.2", {"lambda": lam, "u": u})
    h = hook_product(lam)
    val_eigen = Fraction(1)
    for s in shifted_parts(lam, n):
        val_eigen *= s + u
    val_eigen /= h

    if n and u >= 1:
        mu = Partition([n] * u + list(conjugate(lam).parts))
        profile = hook_profile(mu)
        top = Fraction(1)
        for (i, j), hv in profile.hooks.items():
            if i == 1:
                top *= hv
        chk.equal_values("top-row hooks over H", top / h, val_eigen)
        if u == 1:
            val_hooks = Fraction(hook_product(mu), h * h)
            chk.equal_values("eigen vs hook quotient", val_eigen, val_hooks)

    val_skew = Fraction(0)
    for i in range(n + 1):
        if n - i == 0:
            b = 1
        else:
            b = binomial(u + n - i - 1, n - i)
        if b:
            val_skew += b * skew_syt_count(lam, Partition([1] * i))

    chk.equal_values("eigen vs skew sum", val_eigen, val_skew)
    chk.integer("A_lambda(u)", val_eigen)
    return chk.report()


def check_remark_2_3():
    """Per-part shifts break integrality: for n=2, lam=(2), shifted
    factors 5 and 1 give (1/2)(5)(1) = 5/2, not an integer, while equal
    shifts u_1 = u_2 = 1 give the integer 2.

    The source text pairs the printed value 5/2 with u_1=1, u_2=2, which
    under its own formula would give (3+1)*2/2 = 4; the assignment
    u_1=2, u_2=1 is the one realizing the printed factors (5)(1) and is
    used here.  The non-integrality point is unaffected.
    """
    chk = _Check("remark2.3", {"n": 2, "lambda": Partition([2])})
    lam = Partition([2])
    h = hook_product(lam)  # 2
    shifted = shifted_parts(lam, 2)  # (3, 0)
    u1, u2 = 2, 1
    val = Fraction((shifted[0] + u1) * (shifted[1] + u2), h)
    if val != Fraction(5, 2):
        chk.fail("expected 5/2, got %s" % fmt_rat(val))
    if val.denominator == 1:
        chk.fail("value %s is unexpectedly an integer" % fmt_rat(val))
    control = Fraction((shifted[0] + 1) * (shifted[1] + 1), h)
    if control.denominator != 1:
        chk.fail("control case %s should be an integer" % fmt_rat(control))
    chk.params["value"] = val
    chk.params["control"] = control
    return chk.report()


# ---------------------------------------------------------------------
# Section 3: determinant evaluations
# ---------------------------------------------------------------------


def _binom_value(z, k):
    """C(z, k) for Fraction z and integer k >= 0 (polynomial extension)."""
    if k < 0:
        return Fraction(0)
    out = Fraction(1)
    for t in range(k):
        out *= z - t
    return out / factorial(k)


def check_prop_3_1(n, z=None):
    """det(C(z_i+n-i, n-j)) = prod_{i<j} (z_i - z_j + j - i)/(j - i).

    With z=None the check is symbolic in Z-class variables (intended for
    small n); otherwise z is a sequence of rationals and both sides are
    evaluated exactly.
    """
    if not 1 <= n <= 6:
        raise ValueError("n must be in 1..6")
    if z is None:
        chk = _Check("prop3.1", {"n": n, "z": "symbolic"})
        zs = [MultiPoly.variable(var(Z, i)) for i in range(1, n + 1)]
        matrix = [
            [binomial_poly(zs[i] + (n - 1 - i), n - 1 - j) for j in range(n)]
            for i in range(n)
        ]
        det = polyring.determinant(matrix)
        rhs = MultiPoly.constant(1)
        for i in range(n):
            for j in range(i + 1, n):
                rhs = rhs * (zs[i] - zs[j] + (j - i)) * Fraction(1, j - i)
        chk.equal_polys("determinant vs product", det, rhs)
        return chk.report()

    z = [Fraction(v) for v in z]
    if len(z) != n:
        raise ValueError("need exactly n values")
    chk = _Check("prop3.1", {"n": n, "z": z})
    matrix = [
        [_binom_value(z[i] + (n - 1 - i), n - 1 - j) for j in range(n)]
        for i in range(n)
    ]
    det = polyring.determinant(matrix)
    rhs = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            rhs *= Fraction(1, j - i) * (z[i] - z[j] + (j - i))
    chk.equal_values("determinant vs product", det, rhs)
    return chk.report()


def check_cor_3_2(lam, u_samples=(0, 1, 2, 5)):
    """Four determinant evaluations attached to a partition of n:
    (a) det(1/(lam_i-i+j)!) = 1/H; (b) the row-scaled variant = f_lam;
    (c) the omega-determinant = A_lam(u) at each sample u; (d) the
    binomial determinant over l = length(lam) = prod (l+c_v)/h_v."""
    n = lam.size
    if n > 9:
        raise ValueError("n must be <= 9")
    chk = _Check("cor3.2", {"lambda": lam, "u_samples": list(u_samples)})
    h = hook_product(lam)

    def inv_fact(y):
        return Fraction(1, factorial(y)) if y >= 0 else Fraction(0)

    if n:
        base = [
            [inv_fact(lam.part(i) - i + j) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        det_a = polyring.determinant(base)
        chk.equal_values("(a) det vs 1/H", det_a, Fraction(1, h))

        det_b = polyring.determinant(
            [[i * base[i - 1][j - 1] for j in range(1, n + 1)] for i in range(1, n + 1)]
        )
        chk.equal_values("(b) det vs f_lambda", det_b, Fraction(factorial(n), h))
        chk.integer("(b) f_lambda", det_b)

        omega0 = [lam.part(i) + n - i for i in range(1, n + 1)]
        for u in u_samples:
            omega = [w0 + u for w0 in omega0]
            det_c = polyring.determinant(
                [
                    [omega[i - 1] * base[i - 1][j - 1] for j in range(1, n + 1)]
                    for i in range(1, n + 1)
                ]
            )
            prod_form = Fraction(1)
            for i in range(n):
                prod_form *= Fraction(omega[i], factorial(omega0[i]))
            for i in range(n):
                for j in range(i + 1, n):
                    prod_form *= omega[i] - omega[j]
            a_val = upoly_eval(a_lambda_poly(lam, n), param("u"), u)
            chk.equal_values("(c) det vs product form, u=%d" % u, det_c, prod_form)
            chk.equal_values("(c) det vs A_lambda(u), u=%d" % u, det_c, a_val)
            chk.integer("(c) A_lambda(%d)" % u, det_c)

    ell = lam.length
    if ell:
        det_d = polyring.determinant(
            [
                [
                    Fraction(binomial(lam.part(i) + ell - i, ell - j))
                    for j in range(1, ell + 1)
                ]
                for i in range(1, ell + 1)
            ]
        )
        mid = Fraction(1, h)
        for i in range(1, ell + 1):
            mid *= Fraction(factorial(lam.part(i) + ell - i), factorial(ell - i))
        profile = hook_profile(lam)
        rhs_d = Fraction(1)
        for cell, hv in profile.hooks.items():
            rhs_d *= Fraction(ell + profile.contents[cell], hv)
        chk.equal_values("(d) det vs factorial form", det_d, mid)
        chk.equal_values("(d) det vs content/hook product", det_d, rhs_d)
        chk.integer("(d) value", det_d)
    return chk.report()


# ---------------------------------------------------------------------
# Section 1 / 4: the Cauchy-type series identity and its coefficients
# ---------------------------------------------------------------------


def series_rhs(n, m, D, x, w_squarefree=False):
    """Right-hand side of the Schur series identity, truncated to total
    Y-degree <= D and W-degree <= D: the inverted Cauchy product times
    the multilinear t-coefficient of (1+t_1+..+t_n)^x prod_k (1 - S_k),
    where S_k = sum_j t_j y_j w_k/(1 - y_j w_k).

    With w_squarefree=True all w-exponents >= 2 are dropped as they are
    produced (valid when only the coefficient of w_1...w_m is wanted).
    """
    caps = {Y: D, W: D}
    sf = frozenset({T} | ({W} if w_squarefree else set()))
    one = MultiPoly.constant(1, caps, sf)

    cauchy = one
    for j in range(1, n + 1):
        for k in range(1, m + 1):
            yj = MultiPoly.variable(var(Y, j), caps, sf)
            wk = MultiPoly.variable(var(W, k), caps, sf)
            cauchy = cauchy * (one - yj * wk)
    inv = geometric_inverse(cauchy, caps)

    tpart = multilinear_power(x, n, extra_caps=caps)
    if w_squarefree:
        tpart = tpart.with_policy(caps, sf)
    for k in range(1, m + 1):
        sk = MultiPoly({}, caps, sf)
        wk = MultiPoly.variable(var(W, k), caps, sf)
        for j in range(1, n + 1):
            yj = MultiPoly.variable(var(Y, j), caps, sf)
            tj = MultiPoly.variable(var(T, j), caps, sf)
            geom = geometric_inverse(one - yj * wk, caps)
            sk = sk + tj * yj * wk * geom
        tpart = tpart * (one - sk)
    bracket = tpart.coeff(monomial([(var(T, j), 1) for j in range(1, n + 1)]))
    return (inv * bracket.with_policy(caps, sf)).with_policy(caps, sf)


def series_lhs(n, m, D, x):
    """sum over partitions with |lam| <= D of s_lam(y) s_lam(w)
    prod_{i=1}^n (x - lam_i - n + i)."""
    xp = MultiPoly.variable(x)
    out = MultiPoly({})
    for size in range(D + 1):
        for lam in enumerate_partitions(size):
            if lam.length > min(n, m):
                continue
            fac = MultiPoly.constant(1)
            for s in shifted_parts(lam, n):
                fac = fac * (xp - s)
            out = out + symfun.schur(lam, n, Y) * symfun.schur(lam, m, W) * fac
    return out


def check_thm_1_1(n, m, D):
    """Exact equality of the truncated series identity."""
    if n > 3 or m > 3 or D > 6:
        raise ValueError("supported ranges: n, m <= 3 and D <= 6")
    chk = _Check("thm1.1", {"n": n, "m": m, "D": D})
    x = param("x")
    lhs = series_lhs(n, m, D, x)
    rhs = series_rhs(n, m, D, x)
    chk.equal_polys("truncated series", lhs, rhs)
    return chk.report()


def check_lemma_4_1(n, k):
    """Falling-factorial coefficient extraction from the series identity
    with m = n: the (x)_{n-k} coefficient, after taking [w_1...w_n],
    equals (n)_k p_1^{n-k} e_k(y).

    The clean positive form lives in the rising-factorial basis of the
    u = -x reformulation; in the falling basis of x used here that is a
    factor (-1)^k, applied below.
    """
    if not 1 <= n <= 4 or not 0 <= k <= n:
        raise ValueError("need 1 <= n <= 4 and 0 <= k <= n")
    chk = _Check("lemma4.1", {"n": n, "k": k})
    x = param("x")
    rhs_series = series_rhs(n, n, n, x, w_squarefree=True)
    fb = to_falling_basis(rhs_series, x)
    coeff_poly = fb[n - k] if n - k < len(fb) else MultiPoly({})
    wmono = monomial([(var(W, j), 1) for j in range(1, n + 1)])
    extracted = coeff_poly.coeff(wmono)
    if k % 2 == 1:
        extracted = -extracted
    expected = (
        falling_factorial(n, k)
        * symfun.power_sum_1(n) ** (n - k)
        * symfun.elementary(k, n)
    )
    chk.equal_polys("coefficient of (x)_{n-k}, [w_1..w_n]", extracted, expected)
    return chk.report()


# ---------------------------------------------------------------------
# Section 4: Stirling closed forms for the e_beta averages
# ---------------------------------------------------------------------


def _sum_1_to_m(q, v):
    """Symbolic sum_{j=1}^{m} q(j) as a polynomial in the same variable,
    via the falling-factorial antidifference
    sum_{j=0}^{m} (j)_k = (m+1)_{k+1}/(k+1)."""
    coeffs = to_falling_basis(q, v)
    vp = MultiPoly.variable(v)
    out = MultiPoly({})
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        out = out + c * polyring.falling_factorial_poly(vp + 1, k + 1) * Fraction(
            1, k + 1
        )
    # subtract the j=0 term, q(0)
    out = out - coeffs[0]
    return out


def _stirling_diagonal_poly(o, v):
    """c(m+o, m) as a polynomial in m (degree 2o), from the recurrence
    P_o(m) = P_o(m-1) + (m+o-1) P_{o-1}(m), P_0 = 1, P_o(0) = 0."""
    vp = MultiPoly.variable(v)
    p = MultiPoly.constant(1)
    for oo in range(1, o + 1):
        p = _sum_1_to_m(p * (vp + (oo - 1)), v)
    return p


def ebeta_closed_poly(beta, v=None):
    """The closed form sum_{a=n-beta}^{n} c(a, n-beta) C(n, a) as an
    exact polynomial in n of degree 2*beta."""
    if not 0 <= beta <= 6:
        raise ValueError("beta must be in 0..6")
    v = v if v is not None else param("n")
    vp = MultiPoly.variable(v)
    out = MultiPoly({})
    for o in range(beta + 1):
        stir = _stirling_diagonal_poly(o, v).substitute(v, vp - beta)
        out = out + stir * binomial_poly(vp, beta - o)
    return out


def binomial_combination(p, v, beta):
    """Coefficients g_o with p = sum_{o=0}^{beta} g_o C(n+o, beta+o)
    (the presentation used for the small-beta examples).  Raises if the
    polynomial does not fit that triangular form."""
    vp = MultiPoly.variable(v)
    rest = p
    out = [Fraction(0)] * (beta + 1)
    for o in range(beta, -1, -1):
        deg = beta + o
        coeffs = polyring.upoly_coeffs(rest, v) if rest.terms else [Fraction(0)]
        lead = coeffs[deg] if deg < len(coeffs) else Fraction(0)
        g = lead * factorial(deg)
        out[o] = g
        if g:
            rest = rest - g * binomial_poly(vp + o, deg)
    if not rest.is_zero():
        raise ArithmeticError("polynomial is not a triangular binomial combination")
    return out


def check_cor_4_2(n, beta):
    """(1/n!) sum_{lam |- n} f_lam^2 e_beta(shifted parts) equals the
    Stirling/binomial closed form evaluated at n."""
    if n > 12 or beta > 6:
        raise ValueError("supported ranges: n <= 12, beta <= 6")
    chk = _Check("cor4.2", {"n": n, "beta": beta})
    lhs = Fraction(0)
    for lam in enumerate_partitions(n):
        f = syt_count(lam)
        lhs += Fraction(f * f) * elementary_value(beta, shifted_parts(lam, n))
    lhs /= factorial(n)
    rhs = upoly_eval(ebeta_closed_poly(beta), param("n"), n)
    chk.equal_values("brute force vs closed form", lhs, rhs)
    return chk.report()


# ---------------------------------------------------------------------
# Section 5: the two-factor closed form and polynomiality
# ---------------------------------------------------------------------


def stan_lhs(n, ks):
    """(1/n!) sum_{lam |- n} f_lam^2 prod_j e_{k_j}(shifted parts)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if any(k < 0 for k in ks):
        raise ValueError("ks must be nonnegative")
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        f = syt_count(lam)
        shifted = shifted_parts(lam, n)
        term = Fraction(f * f)
        for k in ks:
            term *= elementary_value(k, shifted)
        total += term
    return total / factorial(n)


def lemma_5_1_rhs(n, alpha, beta):
    """Double Stirling sum with the vanishing-binomial convention."""
    total = 0
    for k in range(n - alpha, n + 1):
        ck = stirling_first(k, n - alpha)
        if not ck:
            continue
        for m in range(n - beta, n + 1):
            cm = stirling_first(m, n - beta)
            if not cm:
                continue
            inner = 0
            for j in range(0, n + 1):
                b1 = binomial(n - m, j)
                if not b1:
                    continue
                b2 = binomial(m, n - k - j)
                if not b2:
                    continue
                inner += factorial(j) * b1 * b2
            total += ck * cm * binomial(n, m) * inner
    return Fraction(total)


def check_lemma_5_1(n, alpha, beta):
    """Brute-force two-factor average equals the double Stirling sum."""
    if n > 8 or not 0 <= alpha <= n or not 0 <= beta <= n:
        raise ValueError("need n <= 8 and 0 <= alpha, beta <= n")
    chk = _Check("lemma5.1", {"n": n, "alpha": alpha, "beta": beta})
    chk.equal_values(
        "brute force vs closed form",
        stan_lhs(n, (alpha, beta)),
        lemma_5_1_rhs(n, alpha, beta),
    )
    return chk.report()


def _interpolate(xs, ys):
    """Monomial coefficients of the Newton interpolant through (xs, ys)."""
    k = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * k
    basis = [Fraction(1)] + [Fraction(0)] * (k - 1)  # prod (x - xs[t])
    deg = 0
    for j in range(k):
        for t in range(deg + 1):
            poly[t] += coef[j] * basis[t]
        if j < k - 1:
            nxt = [Fraction(0)] * k
            for t in range(deg + 1):
                nxt[t + 1] += basis[t]
                nxt[t] -= xs[j] * basis[t]
            basis = nxt
            deg += 1
    return poly


def fit_polynomiality(ks, n_train, n_test):
    """Interpolate a degree <= 2*sum(ks) polynomial through stan_lhs on
    the training points and demand exact prediction on the rest."""
    ks = tuple(ks)
    train = sorted(set(n_train))
    test = sorted(set(n_test))
    degree = 2 * sum(ks)
    if len(train) < degree + 1:
        raise ValueError(
            "need at least %d training points, got %d" % (degree + 1, len(train))
        )
    if set(train) & set(test):
        raise ValueError("test points must be disjoint from training points")
    values = {n: stan_lhs(n, ks) for n in train}
    xs = train[: degree + 1]
    poly = _interpolate(xs, [values[n] for n in xs])
    witness = None
    for n in train[degree + 1 :] + test:
        predicted = sum(c * Fraction(n) ** i for i, c in enumerate(poly))
        actual = values.get(n)
        if actual is None:
            actual = stan_lhs(n, ks)
        if predicted != actual:
            witness = "n=%d: predicted=%s actual=%s" % (
                n,
                fmt_rat(predicted),
                fmt_rat(actual),
            )
            break
    falling = [Fraction(0)] * (degree + 1)
    from .exactnum import stirling_second

    for i, a in enumerate(poly):
        for kk in range(i + 1):
            s = stirling_second(i, kk)
            if s:
                falling[kk] += a * s
    return FitResult(
        degree,
        falling,
        train,
        test,
        "PASS" if witness is None else "FAIL",
        witness,
    )


# ---------------------------------------------------------------------
# Section 1: eigen-relations
# ---------------------------------------------------------------------


def check_eigen(n, lam, theta=1):
    """apply_L(a_{theta*delta+lambda}) equals
    prod_i (lambda_i + (n-i) theta + u) times the alternant, exactly."""
    if n > 4 or theta > 3 or lam.size > 5:
        raise ValueError("supported ranges: n <= 4, theta <= 3, |lambda| <= 5")
    if lam.length > n:
        raise ValueError("length(lambda) must be <= n")
    chk = _Check("eigen", {"n": n, "lambda": lam, "theta": theta})
    u = param("u")
    up = MultiPoly.variable(u)
    alt = symfun.alternant_for(lam, n, theta)
    lhs = symfun.apply_L(alt, u, n)
    eig = MultiPoly.constant(1)
    for i in range(1, n + 1):
        eig = eig * (up + lam.part(i) + (n - i) * theta)
    chk.equal_polys("eigen identity in y,u", lhs, eig * alt)
    return chk.report()


# ---------------------------------------------------------------------
# Parameter sweeps used by the CLI and the acceptance suite
# ---------------------------------------------------------------------


def random_rationals(n, rng):
    """Deterministic small random rationals for Prop 3.1 sampling."""
    return [
        Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(n)
    ]


def prop_3_1_samples(n, count, seed):
    rng = random.Random(seed * 1000003 + n)
    return [random_rationals(n, rng) for _ in range(count)]
