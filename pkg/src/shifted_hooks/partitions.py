"""Integer partitions and their hook/content/tableau statistics."""

from fractions import Fraction
from math import factorial

from . import polyring
from .polyring import MultiPoly, param


class Partition:
    """Weakly decreasing positive parts.  Trailing zeros in the input are
    tolerated and stripped; padding is applied at call sites, never stored."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def part(self, i):
        """1-based part, zero-padded beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other):
        return all(other.part(i) <= self.part(i) for i in range(1, other.length + 1))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (list(self.parts),)

    def to_json(self):
        return list(self.parts)


EMPTY = Partition()


def enumerate_partitions(n):
    """All partitions of n, reverse-lexicographic: (4),(3,1),(2,2),..."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining, cap, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - first, first, prefix + [first])

    return list(gen(n, n if n else 0, []))


def partition_count(n):
    """p(n) by Euler's pentagonal-number recurrence (independent of the
    enumerator; used as a cross-check)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def conjugate(lam):
    """Column lengths of the Young diagram; an involution."""
    if not lam.parts:
        return EMPTY
    return Partition(
        [sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)]
    )


class HookProfile:
    """Per-cell hook lengths and contents, with the hook product."""

    __slots__ = ("hooks", "contents", "product")

    def __init__(self, hooks, contents, product):
        self.hooks = hooks  # {(i, j): h}, 1-indexed cells
        self.contents = contents  # {(i, j): j - i}
        self.product = product


def hook_profile(lam):
    conj = conjugate(lam)
    hooks = {}
    contents = {}
    product = 1
    for i, row in enumerate(lam.parts, start=1):
        for j in range(1, row + 1):
            arm = row - j
            leg = conj.part(j) - i
            h = arm + leg + 1
            hooks[(i, j)] = h
            contents[(i, j)] = j - i
            product *= h
    return HookProfile(hooks, contents, product)


def hook_product(lam):
    return hook_profile(lam).product


def syt_count(lam):
    """f_lambda = |lambda|! / H_lambda (hook length formula)."""
    h = hook_product(lam)
    fact = factorial(lam.size)
    if fact % h:
        raise ArithmeticError("hook product %d does not divide %d!" % (h, lam.size))
    return fact // h


def syt_count_by_enumeration(lam):
    """Independent oracle: count SYT by recursive corner removal."""
    memo = {}

    def count(shape):
        if not shape:
            return 1
        if shape in memo:
            return memo[shape]
        total = 0
        for i, p in enumerate(shape):
            if i + 1 == len(shape) or shape[i + 1] < p:
                smaller = list(shape)
                smaller[i] -= 1
                total += count(Partition(smaller).parts)
        memo[shape] = total
        return total

    return count(lam.parts)


def skew_syt_count(lam, mu, n_pad=None):
    """Number of standard tableaux of skew shape lambda/mu.

    Aitken's determinant |lambda/mu|! det(1/(lambda_i - mu_j - i + j)!)
    with the convention 1/(negative)! = 0.  Containment is checked first;
    mu not contained in lambda gives 0.
    """
    if not lam.contains(mu):
        return 0
    n = n_pad if n_pad is not None else max(lam.length, mu.length, 1)
    if n < lam.length or n < mu.length:
        raise ValueError("n_pad smaller than partition length")
    cells = lam.size - mu.size
    if cells == 0:
        return 1
    matrix = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            y = lam.part(i) - mu.part(j) - i + j
            row.append(Fraction(1, factorial(y)) if y >= 0 else Fraction(0))
        matrix.append(row)
    det = polyring.determinant(matrix)
    val = Fraction(det) * factorial(cells)
    if val.denominator != 1:
        raise ArithmeticError("skew determinant gave non-integer %s" % val)
    return int(val)


def skew_syt_count_by_enumeration(lam, mu):
    """Brute-force oracle: fill the skew cells 1..k respecting row/column
    increase, counting completions recursively."""
    if not lam.contains(mu):
        return 0
    total_cells = lam.size - mu.size

    def count(inner):
        if sum(lam.parts) - sum(inner) == 0:
            return 1
        total = 0
        # add one cell to `inner` keeping it a partition inside lambda;
        # equivalently: remove cells from lambda in reverse -> count by
        # growing mu one addable corner at a time
        for i in range(lam.length):
            cur = inner[i] if i < len(inner) else 0
            above = inner[i - 1] if 0 <= i - 1 < len(inner) else 0
            if cur < lam.part(i + 1) and (i == 0 or cur < above):
                nxt = list(inner)
                while len(nxt) <= i:
                    nxt.append(0)
                nxt[i] += 1
                total += count(tuple(nxt))
        return total

    _ = total_cells
    return count(tuple(mu.parts))


def shifted_parts(lam, n):
    """The strictly decreasing values lambda_i + n - i for i = 1..n."""
    if n < lam.length:
        raise ValueError("n must be at least length(lambda)")
    return tuple(lam.part(i) + n - i for i in range(1, n + 1))


def phi_poly(lam, n, u=None):
    """phi_lambda(u) = prod_i (u + lambda_i + n - i), monic of degree n."""
    if n < lam.length:
        raise ValueError("n must be at least length(lambda)")
    u = u if u is not None else param("u")
    up = MultiPoly.variable(u)
    out = MultiPoly.constant(1)
    for s in shifted_parts(lam, n):
        out = out * (up + s)
    return out


def a_lambda_poly(lam, n, u=None):
    """A_lambda(u) = phi_lambda(u) / H_lambda with exact coefficients."""
    return phi_poly(lam, n, u) * Fraction(1, hook_product(lam))
