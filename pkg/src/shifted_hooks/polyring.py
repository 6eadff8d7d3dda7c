"""Sparse exact multivariate polynomials with classed variables.

Variables belong to one of five classes (Y, W, T, Z and scalar PARAMs
such as u and x).  A polynomial may carry a truncation policy: per-class
total-degree caps, plus a set of classes declared square-free (any
exponent >= 2 in such a class is dropped, used for multilinear
coefficient extraction).  Truncation is enforced eagerly at every
multiplication.

Monomials are sorted tuples of ((class, index), exponent); coefficients
are `fractions.Fraction`.  The canonical term order is graded lex over
the fixed (class, index) variable order.
"""

from fractions import Fraction
from math import factorial

from .exactnum import stirling_first, stirling_second

# Variable classes, in canonical order.
Y, W, T, Z, PARAM = 0, 1, 2, 3, 4
CLASS_NAMES = {Y: "Y", W: "W", T: "T", Z: "Z", PARAM: "PARAM"}

# Scalar parameters get stable indices so serialization is reproducible.
_PARAM_INDEX = {"u": 1, "x": 2, "u1": 3, "u2": 4, "n": 5}


def var(cls, index):
    """VarId for the index-th variable of a class (1-based)."""
    if cls not in CLASS_NAMES or index < 1:
        raise ValueError("bad variable (%r, %r)" % (cls, index))
    return (cls, index)


def param(name):
    """VarId of a named scalar parameter (u, x, u1, u2, n, ...)."""
    if name not in _PARAM_INDEX:
        _PARAM_INDEX[name] = max(_PARAM_INDEX.values()) + 1
    return (PARAM, _PARAM_INDEX[name])


ONE_MONOMIAL = ()


def monomial(pairs):
    """Canonical monomial from an iterable of (VarId, exponent)."""
    merged = {}
    for v, e in pairs:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def monomial_degree(m, cls=None):
    if cls is None:
        return sum(e for _, e in m)
    return sum(e for (c, _), e in m if c == cls)


def monomial_key(m):
    """Graded-lex sort key: by total degree, then earlier variables with
    higher exponents first."""
    flat = []
    for v, e in m:
        flat.append(v)
        flat.append(-e)
    return (monomial_degree(m), tuple(flat))


class PolicyError(ValueError):
    """Raised when two operands carry conflicting truncation policies."""


class NotDivisibleError(ArithmeticError):
    """Raised by exact_div; carries the first offending remainder term."""

    def __init__(self, witness_monomial):
        self.witness_monomial = witness_monomial
        super().__init__("not divisible; remainder term %r" % (witness_monomial,))


def _merge_policy(p, q):
    caps = dict(p.caps)
    for cls, cap in q.caps.items():
        if cls in caps and caps[cls] != cap:
            raise PolicyError(
                "conflicting caps for class %s: %d vs %d"
                % (CLASS_NAMES[cls], caps[cls], cap)
            )
        caps[cls] = cap
    return caps, p.squarefree | q.squarefree


class MultiPoly:
    """Immutable sparse polynomial over Fraction coefficients."""

    __slots__ = ("terms", "caps", "squarefree")

    def __init__(self, terms=None, caps=None, squarefree=frozenset()):
        self.caps = dict(caps) if caps else {}
        self.squarefree = frozenset(squarefree)
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c and self._admits(m):
                clean[m] = c
        self.terms = clean

    def _admits(self, m):
        for cls, cap in self.caps.items():
            if monomial_degree(m, cls) > cap:
                return False
        for (c, _), e in m:
            if e >= 2 and c in self.squarefree:
                return False
        return True

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c, caps=None, squarefree=frozenset()):
        return MultiPoly({ONE_MONOMIAL: Fraction(c)}, caps, squarefree)

    @staticmethod
    def variable(v, caps=None, squarefree=frozenset()):
        return MultiPoly({monomial([(v, 1)]): Fraction(1)}, caps, squarefree)

    def with_policy(self, caps=None, squarefree=frozenset()):
        """Copy with the given policy applied (terms over caps dropped)."""
        return MultiPoly(self.terms, caps, squarefree)

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    def degree_in(self, v):
        d = 0
        for m in self.terms:
            for w, e in m:
                if w == v:
                    d = max(d, e)
        return d

    def constant_term(self):
        return self.terms.get(ONE_MONOMIAL, Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.caps, self.squarefree)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        caps, sf = _merge_policy(self, other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly(terms, caps, sf)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(
            {m: -c for m, c in self.terms.items()}, self.caps, self.squarefree
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        caps, sf = _merge_policy(self, other)
        out = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                merged = dict(d1)
                for v, e in m2:
                    merged[v] = merged.get(v, 0) + e
                if sf and any(
                    e >= 2 and v[0] in sf for v, e in merged.items()
                ):
                    continue
                m = tuple(sorted(merged.items()))
                if caps:
                    ok = True
                    for cls, cap in caps.items():
                        if monomial_degree(m, cls) > cap:
                            ok = False
                            break
                    if not ok:
                        continue
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                else:
                    out.pop(m, None)
        poly = MultiPoly.__new__(MultiPoly)
        poly.terms = out
        poly.caps = caps
        poly.squarefree = sf
        return poly

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(1, self.caps, self.squarefree)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                "%s%d%s" % (CLASS_NAMES[v[0]].lower(), v[1], "^%d" % e if e > 1 else "")
                for v, e in m
            )
            bits.append("%s%s" % (c, "*" + mono if mono else ""))
        return "MultiPoly(%s)" % " + ".join(bits)

    # -- substitution and extraction ----------------------------------

    def coeff(self, m):
        """Polynomial multiplying monomial m exactly (m's variables must
        appear with exactly the given exponents)."""
        m = tuple(sorted(m))
        mvars = dict(m)
        out = {}
        for mono, c in self.terms.items():
            rest = []
            match = dict(mvars)
            ok = True
            for v, e in mono:
                if v in match:
                    if match.pop(v) != e:
                        ok = False
                        break
                else:
                    rest.append((v, e))
            if ok and not match:
                out[tuple(rest)] = c
        return MultiPoly(out)

    def substitute(self, v, value):
        """Replace variable v by a MultiPoly, int or Fraction."""
        if not isinstance(value, MultiPoly):
            value = MultiPoly.constant(value)
        powers = {0: MultiPoly.constant(1)}
        out = MultiPoly({})
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, ex in m:
                if w == v:
                    e = ex
                else:
                    rest.append((w, ex))
            if e not in powers:
                powers[e] = value**e
            out = out + MultiPoly({tuple(rest): c}) * powers[e]
        return out

    def evaluate(self, assignment):
        """Fully evaluate; assignment maps every occurring VarId to a number."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = Fraction(c)
            for w, e in m:
                v *= Fraction(assignment[w]) ** e
            total += v
        return total


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def exact_div(p, q):
    """Exact quotient p / q; raises NotDivisibleError with the first
    stuck remainder term if q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.caps or q.caps or p.squarefree or q.squarefree:
        raise ValueError("exact_div requires untruncated operands")
    qlead_m, qlead_c = max(q.terms.items(), key=lambda kv: monomial_key(kv[0]))
    qlead = dict(qlead_m)
    rem = dict(p.terms)
    quot = {}
    while rem:
        m, c = max(rem.items(), key=lambda kv: monomial_key(kv[0]))
        md = dict(m)
        fac = {}
        for v, e in qlead.items():
            d = md.get(v, 0) - e
            if d < 0:
                raise NotDivisibleError(m)
            if d:
                fac[v] = d
        for v, e in md.items():
            if v not in qlead and e:
                fac[v] = e
        fm = tuple(sorted(fac.items()))
        fc = c / qlead_c
        quot[fm] = quot.get(fm, 0) + fc
        # rem -= (fc * fm) * q
        for m2, c2 in q.terms.items():
            merged = dict(fac)
            for v, e in m2:
                merged[v] = merged.get(v, 0) + e
            mm = tuple(sorted(merged.items()))
            nc = rem.get(mm, 0) - fc * c2
            if nc:
                rem[mm] = nc
            else:
                rem.pop(mm, None)
    return MultiPoly(quot)


def determinant(matrix):
    """Exact determinant via memoized minor expansion.

    Entries may be MultiPoly, int or Fraction; sizes up to ~9 are fine.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    if n == 0:
        return MultiPoly.constant(1)
    # minors[S] = det of rows 0..|S|-1 restricted to column set S
    minors = {0: 1}
    for i in range(n):
        nxt = {}
        for cols, val in minors.items():
            popcnt = 0
            sign = 1
            for j in range(n):
                bit = 1 << j
                if cols & bit:
                    popcnt += 1
                    continue
                entry = matrix[i][j]
                term = sign * (val * entry if not _is_num_zero(entry, val) else 0)
                key = cols | bit
                if key in nxt:
                    nxt[key] = nxt[key] + term
                else:
                    nxt[key] = term
                sign = -sign
        minors = nxt
    return minors[(1 << n) - 1]


def _is_num_zero(entry, val):
    if isinstance(entry, MultiPoly) or isinstance(val, MultiPoly):
        return False
    return entry == 0 or val == 0


def geometric_inverse(p, bounds):
    """Truncated inverse of p (constant term must be 1): q with
    p*q == 1 modulo the per-class degree caps in `bounds`."""
    if p.constant_term() != 1:
        raise ValueError("geometric_inverse requires constant term 1")
    for m in p.terms:
        for (cls, _), _e in m:
            if cls not in bounds:
                raise ValueError(
                    "no bound for class %s appearing in p" % CLASS_NAMES[cls]
                )
    h = (MultiPoly.constant(1) - p).with_policy(bounds, p.squarefree)
    total = sum(bounds.values())
    out = MultiPoly.constant(1, bounds, p.squarefree)
    power = MultiPoly.constant(1, bounds, p.squarefree)
    for _ in range(total):
        power = power * h
        if power.is_zero():
            break
        out = out + power
    return out


def multilinear_power(x, t_count, extra_caps=None):
    """(1 + t_1 + ... + t_k)^x in the square-free t-algebra: the sum over
    subsets S of (x)_|S| prod_{i in S} t_i, with (x)_j the falling
    factorial as a polynomial in the PARAM x."""
    caps = dict(extra_caps or {})
    sf = frozenset({T})
    xp = MultiPoly.variable(x)
    falling = [MultiPoly.constant(1)]
    for j in range(t_count):
        falling.append(falling[-1] * (xp - j))
    out = MultiPoly({}, caps, sf)
    # sum_k (x)_k e_k(t_1..t_k): build e_k incrementally
    ek = [MultiPoly.constant(1, caps, sf)] + [
        MultiPoly({}, caps, sf) for _ in range(t_count)
    ]
    for i in range(1, t_count + 1):
        ti = MultiPoly.variable(var(T, i), caps, sf)
        for k in range(min(i, t_count), 0, -1):
            ek[k] = ek[k] + ek[k - 1] * ti
    for k in range(t_count + 1):
        out = out + falling[k].with_policy(caps, sf) * ek[k]
    return out


def coeff(p, m):
    return p.coeff(m)


# -- univariate helpers (UPoly == MultiPoly in one PARAM) --------------


def upoly_from_coeffs(coeffs, v):
    """Polynomial sum_i coeffs[i] * v^i."""
    return MultiPoly(
        {monomial([(v, i)]): Fraction(c) for i, c in enumerate(coeffs) if c}
    )


def upoly_coeffs(p, v):
    """Monomial coefficients [c_0, c_1, ...] of a univariate p in v."""
    deg = p.degree_in(v)
    out = [Fraction(0)] * (deg + 1)
    for m, c in p.terms.items():
        if len(m) > 1 or (m and m[0][0] != v):
            raise ValueError("polynomial is not univariate in %r" % (v,))
        out[m[0][1] if m else 0] = c
    return out


def upoly_eval(p, v, value):
    return p.evaluate({v: value}) if p.terms else Fraction(0)


def to_falling_basis(p, v):
    """Coefficients over the falling-factorial basis (v)_k.

    Returns a list whose k-th entry multiplies (v)_k; entries are
    MultiPoly in the remaining variables (plain Fractions collapse to
    constant polynomials).  Uses x^i = sum_k S(i, k) (x)_k.
    """
    deg = p.degree_in(v)
    by_power = [MultiPoly({}) for _ in range(deg + 1)]
    for m, c in p.terms.items():
        e = 0
        rest = []
        for w, ex in m:
            if w == v:
                e = ex
            else:
                rest.append((w, ex))
        by_power[e] = by_power[e] + MultiPoly({tuple(rest): c})
    out = [MultiPoly({}) for _ in range(deg + 1)]
    for i, a in enumerate(by_power):
        if a.is_zero():
            continue
        for k in range(i + 1):
            s = stirling_second(i, k)
            if s:
                out[k] = out[k] + a * s
    return out


def from_falling_basis(coeffs, v):
    """Inverse of to_falling_basis via (x)_k = sum_i s(k, i) x^i."""
    out = MultiPoly({})
    for k, c in enumerate(coeffs):
        if not isinstance(c, MultiPoly):
            c = MultiPoly.constant(c)
        if c.is_zero():
            continue
        fk = MultiPoly(
            {
                monomial([(v, i)]): Fraction(stirling_first(k, i, signed=True))
                for i in range(k + 1)
                if stirling_first(k, i, signed=True)
            }
        )
        out = out + c * fk
    return out


def binomial_poly(p, k):
    """Generalized binomial C(p, k) = prod_{j=0}^{k-1} (p - j) / k! for a
    polynomial argument p."""
    if k < 0:
        raise ValueError("binomial_poly requires k >= 0")
    out = MultiPoly.constant(1)
    for j in range(k):
        out = out * (p - j)
    return out * Fraction(1, factorial(k))


def falling_factorial_poly(p, k):
    """(p)_k = p (p-1) ... (p-k+1) for a polynomial argument."""
    out = MultiPoly.constant(1)
    for j in range(k):
        out = out * (p - j)
    return out


def poly_to_json(p):
    """Canonical JSON-able form: list of {vars, coeff} in term order."""
    out = []
    for m, c in p.sorted_terms():
        out.append(
            {
                "vars": [[CLASS_NAMES[v[0]], v[1], e] for v, e in m],
                "coeff": str(c),
            }
        )
    return out
