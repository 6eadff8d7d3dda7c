"""Symmetric-function constructors and the diagonal operator behind the
eigen-relations: elementary symmetric polynomials, the first power sum,
alternants, Schur polynomials as alternant ratios, and the product
operator prod_i (y_i d/dy_i + u) acting diagonally on monomials."""

from fractions import Fraction
from itertools import combinations, permutations

from . import polyring
from .polyring import PARAM, MultiPoly, Y, exact_div, monomial, var


class AlternantSpec:
    """n variables with strictly decreasing exponent sequence."""

    __slots__ = ("n", "exponents", "cls")

    def __init__(self, n, exponents, cls=Y):
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != n:
            raise ValueError("need exactly n exponents")
        if any(e < 0 for e in exponents):
            raise ValueError("exponents must be nonnegative")
        if any(exponents[i] <= exponents[i + 1] for i in range(n - 1)):
            raise ValueError("exponents must be strictly decreasing")
        self.n = n
        self.exponents = exponents
        self.cls = cls


def elementary(k, n, cls=Y):
    """e_k(x_1..x_n); e_0 = 1, and k > n gives 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > n:
        return MultiPoly({})
    terms = {}
    for subset in combinations(range(1, n + 1), k):
        terms[monomial([(var(cls, i), 1) for i in subset])] = Fraction(1)
    return MultiPoly(terms)


def power_sum_1(n, cls=Y):
    """p_1 = x_1 + ... + x_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return MultiPoly(
        {monomial([(var(cls, i), 1)]): Fraction(1) for i in range(1, n + 1)}
    )


def staircase(n):
    """delta = (n-1, n-2, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def alternant(spec):
    """det(x_i^{alpha_j}) expanded via the permutation sum."""
    terms = {}
    idx = list(range(spec.n))
    for perm in permutations(idx):
        sign = _perm_sign(perm)
        m = monomial(
            [
                (var(spec.cls, perm[j] + 1), spec.exponents[j])
                for j in range(spec.n)
            ]
        )
        c = terms.get(m, 0) + sign
        if c:
            terms[m] = c
        else:
            terms.pop(m, None)
    return MultiPoly(terms)


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def vandermonde(n, cls=Y):
    """a_delta = prod_{i<j} (x_i - x_j) in expanded form."""
    return alternant(AlternantSpec(n, staircase(n), cls))


def alternant_for(lam, n, theta=1, cls=Y):
    """a_{theta*delta + lambda}: exponents lambda_i + theta (n - i)."""
    if n < lam.length:
        raise ValueError("n must be at least length(lambda)")
    exps = [lam.part(i) + theta * (n - i) for i in range(1, n + 1)]
    return alternant(AlternantSpec(n, exps, cls))


def schur(lam, n, cls=Y):
    """s_lambda(x_1..x_n) = a_{lambda+delta} / a_delta; zero if the
    partition is longer than the variable count."""
    if lam.length > n:
        return MultiPoly({})
    num = alternant_for(lam, n, 1, cls)
    den = vandermonde(n, cls)
    try:
        return exact_div(num, den)
    except polyring.NotDivisibleError as exc:  # must never fire
        raise AssertionError("alternant ratio failed to divide") from exc


def schur_by_ssyt(lam, n, cls=Y):
    """Oracle: sum of content monomials over semistandard tableaux with
    entries in 1..n.  Exponential; only for small shapes."""
    if lam.length > n:
        return MultiPoly({})
    rows = lam.parts
    cells = [(i, j) for i, r in enumerate(rows) for j in range(r)]
    terms = {}

    def fill(k, values):
        if k == len(cells):
            m = monomial(
                [
                    (var(cls, v), sum(1 for x in values.values() if x == v))
                    for v in set(values.values())
                ]
            )
            terms[m] = terms.get(m, 0) + 1
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, values[(i, j - 1)])
        if i > 0:
            lo = max(lo, values[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            values[(i, j)] = v
            fill(k + 1, values)
            del values[(i, j)]

    fill(0, {})
    return MultiPoly({m: Fraction(c) for m, c in terms.items()})


def apply_L(p, u, n, cls=Y):
    """Diagonal action of prod_{i=1}^n (x_i d/dx_i + u): each monomial
    x^alpha is scaled by prod_i (alpha_i + u), with alpha read over all n
    slots (missing variables contribute a bare factor u).

    The slot count n is explicit: it cannot be inferred from the
    occurring variables because zero exponents still contribute."""
    up = MultiPoly.variable(u)
    out = MultiPoly({})
    scale_cache = {}
    for m, c in p.terms.items():
        exps = [0] * n
        rest = []
        for v, e in m:
            if v[0] == cls:
                if v[1] > n:
                    raise ValueError("variable index beyond slot count n")
                exps[v[1] - 1] = e
            elif v[0] == PARAM:
                rest.append((v, e))
            else:
                raise ValueError("apply_L expects only class-%d and PARAM vars" % cls)
        key = tuple(sorted(exps))
        if key not in scale_cache:
            fac = MultiPoly.constant(1)
            for a in exps:
                fac = fac * (up + a)
            scale_cache[key] = fac
        out = out + MultiPoly({m: c}) * scale_cache[key]
    return out


def generalized_alternant_ratio(lam, n, theta, cls=Y):
    """a_{theta*delta + lambda} / a_{theta*delta} as an exact polynomial
    quotient.

    For theta = 1 this is the Schur polynomial and always divides.  For
    theta >= 2 the ratio is in general a genuine rational function (e.g.
    (y1^3 - y2^3)/(y1^2 - y2^2) at theta=2, lambda=(1), n=2); in that
    case NotDivisibleError is raised with a witness monomial."""
    if theta < 1 or int(theta) != theta:
        raise ValueError("theta must be a positive integer")
    if n < lam.length:
        raise ValueError("n must be at least length(lambda)")
    from .partitions import EMPTY

    num = alternant_for(lam, n, theta, cls)
    den = alternant_for(EMPTY, n, theta, cls)
    return exact_div(num, den)
