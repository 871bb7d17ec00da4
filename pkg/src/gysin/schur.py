"""Partitions and Schur polynomials via the bialternant formula."""

import itertools
from math import factorial

from .polynomial import Polynomial, exact_div, is_symmetric, vandermonde


class Partition:
    """A weakly decreasing tuple of non-negative integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError("partition parts must be non-negative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        self.parts = parts

    def padded(self, n):
        """Parts padded with trailing zeros to length n."""
        if len(self.parts) > n:
            if any(self.parts[n:]):
                raise ValueError("partition has more than %d nonzero parts" % n)
            return self.parts[:n]
        return self.parts + (0,) * (n - len(self.parts))

    def weight(self):
        return sum(self.parts)

    def length(self):
        return sum(1 for x in self.parts if x > 0)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.trimmed() == other.trimmed()
        if isinstance(other, (tuple, list)):
            return self.trimmed() == Partition(other).trimmed()
        return NotImplemented

    def trimmed(self):
        p = self.parts
        while p and p[-1] == 0:
            p = p[:-1]
        return p

    def __hash__(self):
        return hash(self.trimmed())

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return "Partition(%s)" % (list(self.parts),)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.trimmed()) + ")"


def partitions(weight, max_parts, max_part=None):
    """All partitions of the given weight with at most max_parts parts."""
    if max_part is None:
        max_part = weight
    if weight == 0:
        return [Partition(())]
    out = []

    def rec(remaining, slots, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            rec(remaining - first, slots - 1, first, prefix + [first])

    rec(weight, max_parts, max_part, [])
    return out


def staircase(n):
    """The standard partition rho = (n, n-1, ..., 1)."""
    return Partition(range(n, 0, -1))


def alternant(lam, variables):
    """det(x_j^(lambda_i + n - i)) expanded over permutations with sign."""
    n = len(variables)
    exps = [lam_i + n - 1 - i for i, lam_i in enumerate(lam)]
    table = tuple(variables)
    idx = {v: i for i, v in enumerate(table)}
    terms = {}
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        e = [0] * n
        for row, col in enumerate(perm):
            e[idx[table[col]]] += exps[row]
        e = tuple(e)
        s = terms.get(e, 0) + sign
        if s == 0:
            terms.pop(e, None)
        else:
            terms[e] = s
    return Polynomial(table, terms)


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_poly(lam, variables):
    """Schur polynomial s_lambda in the given variables.

    Computed literally as the bialternant quotient
    det(x_j^(lambda_i+n-i)) / prod_{i<j}(x_i - x_j); the division is
    always exact and the result is asserted symmetric.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    n = len(variables)
    lam_parts = lam.padded(n)
    if n == 0:
        if lam.weight() != 0:
            raise ValueError("nonempty partition needs at least one variable")
        return Polynomial.constant(1)
    num = alternant(lam_parts, variables)
    result = exact_div(num, vandermonde(variables))
    assert is_symmetric(result, variables)
    return result


def complete_homogeneous(m, variables):
    """Complete homogeneous symmetric polynomial h_m; h_0 = 1, h_{-1} = 0."""
    if m < -1:
        raise ValueError("complete_homogeneous needs m >= -1")
    if m == -1:
        return Polynomial.zero(tuple(variables))
    if m == 0:
        return Polynomial.constant(1, tuple(variables))
    table = tuple(variables)
    n = len(table)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(n), m):
        e = [0] * n
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = 1
    return Polynomial(table, terms)


def decompose_two_mu_plus_rho(lam, n):
    """Write lambda = 2*mu + rho with rho = (n, ..., 1); None if impossible."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    lam_parts = lam.padded(n)
    rho = staircase(n).parts
    mu = []
    for l, r in zip(lam_parts, rho):
        d = l - r
        if d < 0 or d % 2:
            return None
        mu.append(d // 2)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        return None
    return Partition(mu)


def weyl_factorial(block_sizes):
    """Order of a product of symmetric groups."""
    out = 1
    for d in block_sizes:
        out *= factorial(d)
    return out
