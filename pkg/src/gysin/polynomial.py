"""Sparse multivariate polynomials over exact rationals.

Variables are tagged by block: ``z[g,i]``, ``u[i]`` and ``v[m,j]`` are
*residue* variables (they get eliminated by iterated residues), ``t[i]``
are *parameter* variables (torus characters, they survive into results).
Coefficients are exact rationals; integers are stored as ``int`` and
anything else as ``fractions.Fraction``, so no precision is ever lost.

Terms live in a dict mapping exponent tuples to coefficients, with
exponent tuples aligned to an ordered variable table.  The canonical
term order used for printing and serialization is graded lexicographic
with respect to the table order.  All values are immutable once built;
every operation returns a fresh polynomial.
"""

from fractions import Fraction
from typing import NamedTuple

from .errors import NotDivisible

# Block kinds.  "t" is the parameter block; everything else is a residue block.
KIND_ORDER = {"z": 0, "u": 1, "v": 2, "t": 3}


class VarId(NamedTuple):
    """A named variable: kind plus one or two positive indices."""

    kind: str
    a: int
    b: int = 0

    @property
    def is_parameter(self):
        return self.kind == "t"

    def sort_key(self):
        return (KIND_ORDER[self.kind], self.a, self.b)

    def __str__(self):
        if self.kind in ("z", "v"):
            return "%s[%d,%d]" % (self.kind, self.a, self.b)
        return "%s[%d]" % (self.kind, self.a)


def zvar(g, i):
    """Residue variable z[g,i] (group g, slot i), both 1-based."""
    if g < 1 or i < 1:
        raise ValueError("variable indices must be >= 1")
    return VarId("z", g, i)


def tvar(i):
    """Parameter variable t[i]."""
    if i < 1:
        raise ValueError("variable indices must be >= 1")
    return VarId("t", i)


def uvar(i):
    """Residue variable u[i] of the flag substitution."""
    if i < 1:
        raise ValueError("variable indices must be >= 1")
    return VarId("u", i)


def vvar(m, j):
    """Residue variable v[m,j] (level m, slot j) of the flag substitution."""
    if m < 1 or j < 1:
        raise ValueError("variable indices must be >= 1")
    return VarId("v", m, j)


def _norm_coeff(c):
    # Keep integer coefficients as ints; they are much faster than Fraction.
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    return c


def make_table(variables):
    """Sorted, duplicate-free variable table."""
    return tuple(sorted(set(variables), key=VarId.sort_key))


def _merge_tables(t1, t2):
    if t1 == t2:
        return t1
    return make_table(t1 + t2)


def _remap(terms, old_table, new_table):
    if old_table == new_table:
        return terms
    pos = {v: i for i, v in enumerate(new_table)}
    idx = [pos[v] for v in old_table]
    n = len(new_table)
    out = {}
    for exps, c in terms.items():
        e = [0] * n
        for i, p in enumerate(idx):
            e[p] = exps[i]
        out[tuple(e)] = c
    return out


def grlex_key(exps):
    """Graded-lex sort key: total degree first, then exponents left to right."""
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("table", "terms", "_total_degree")

    def __init__(self, table, terms):
        self.table = table
        clean = {}
        for exps, c in terms.items():
            c = _norm_coeff(c)
            if c != 0:
                clean[exps] = c
        self.terms = clean
        self._total_degree = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(table=()):
        return Polynomial(table, {})

    @staticmethod
    def constant(c, table=()):
        c = _norm_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        if c == 0:
            return Polynomial(table, {})
        return Polynomial(table, {(0,) * len(table): c})

    @staticmethod
    def variable(v):
        return Polynomial((v,), {(1,): 1})

    @staticmethod
    def linear(coeffs, const=0):
        """Polynomial sum(c_v * v) + const from a {VarId: coeff} mapping."""
        table = make_table(coeffs.keys())
        n = len(table)
        terms = {}
        for i, v in enumerate(table):
            c = coeffs[v]
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        if const != 0:
            terms[(0,) * n] = const
        return Polynomial(table, terms)

    # -- basic queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.table), 0)

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        if self._total_degree is None:
            self._total_degree = max((sum(e) for e in self.terms), default=-1)
        return self._total_degree

    def degree_in(self, var):
        if var not in self.table:
            return 0
        i = self.table.index(var)
        return max((e[i] for e in self.terms), default=0)

    def support(self):
        """Variables that actually occur with positive exponent."""
        used = [False] * len(self.table)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for i, v in enumerate(self.table) if used[i])

    def residue_support(self):
        return tuple(v for v in self.support() if not v.is_parameter)

    def homogeneous_parts(self):
        """Dict degree -> homogeneous component."""
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.table, ts) for d, ts in sorted(parts.items())}

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def trim(self):
        """Drop unused table columns; canonical for cross-table comparison."""
        sup = self.support()
        if sup == self.table:
            return self
        return Polynomial(sup, _remap_drop(self.terms, self.table, sup))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.table)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = _merge_tables(self.table, other.table)
        a = _remap(self.terms, self.table, table)
        b = _remap(other.terms, other.table, table)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(table, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.table)
            return Polynomial(
                self.table, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        table = _merge_tables(self.table, other.table)
        a = _remap(self.terms, self.table, table)
        b = _remap(other.terms, other.table, table)
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial(table, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(1, self.table)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.trim(), other.trim()
        return a.table == b.table and a.terms == b.terms

    def __hash__(self):
        a = self.trim()
        return hash((a.table, frozenset(a.terms.items())))

    # -- structural operations -------------------------------------------------

    def substitute(self, bindings):
        """Simultaneous substitution of variables by polynomials.

        Unbound variables pass through; bindings for absent variables are
        ignored.
        """
        bindings = {v: b for v, b in bindings.items() if v in self.table}
        if not bindings:
            return self
        kept = tuple(v for v in self.table if v not in bindings)
        bound_idx = [i for i, v in enumerate(self.table) if v in bindings]
        kept_idx = [i for i, v in enumerate(self.table) if v not in bindings]
        powers = {i: [Polynomial.constant(1)] for i in bound_idx}
        result = Polynomial.zero(kept)
        for e, c in self.terms.items():
            piece = Polynomial(kept, {tuple(e[i] for i in kept_idx): c})
            for i in bound_idx:
                k = e[i]
                if k == 0:
                    continue
                cache = powers[i]
                while len(cache) <= k:
                    cache.append(cache[-1] * bindings[self.table[i]])
                piece = piece * cache[k]
            result = result + piece
        return result

    def evaluate(self, point):
        """Full evaluation at a rational point given as {VarId: value}."""
        total = Fraction(0)
        vals = [point[v] for v in self.table]
        for e, c in self.terms.items():
            m = c
            for x, k in zip(vals, e):
                if k:
                    m *= x**k
            total += m
        return total

    def scale(self, c):
        return self * c

    def leading_term(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    # -- printing ----------------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda it: grlex_key(it[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                str(v) if k == 1 else "%s^%d" % (v, k)
                for v, k in zip(self.table, e)
                if k
            )
            neg = c < 0
            c = -c if neg else c
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = "%s*%s" % (c, mono)
            if not chunks:
                chunks.append("-" + body if neg else body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return "Polynomial(%s)" % self


def _remap_drop(terms, old_table, new_table):
    pos = {v: i for i, v in enumerate(new_table)}
    n = len(new_table)
    out = {}
    for exps, c in terms.items():
        e = [0] * n
        for v, x in zip(old_table, exps):
            if x:
                e[pos[v]] = x
        out[tuple(e)] = c
    return out


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_substitute(p, bindings):
    return p.substitute(bindings)


def exact_div(p, q):
    """Exact quotient r with r*q == p.

    Runs graded-lex long division and raises NotDivisible as soon as a
    leading term fails to divide, which for exact inputs only happens
    when no polynomial quotient exists.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return Polynomial.zero(p.table)
    if q.is_constant():
        c = Fraction(q.constant_value())
        return Polynomial(p.table, {e: Fraction(v) / c for e, v in p.terms.items()})
    table = _merge_tables(p.table, q.table)
    rem = dict(_remap(p.terms, p.table, table))
    qt = _remap(q.terms, q.table, table)
    lq = max(qt, key=grlex_key)
    cq = qt[lq]
    quot = {}
    while rem:
        lp = max(rem, key=grlex_key)
        diff = tuple(a - b for a, b in zip(lp, lq))
        if any(d < 0 for d in diff):
            raise NotDivisible("no exact polynomial quotient")
        c = Fraction(rem[lp]) / cq
        quot[diff] = quot.get(diff, 0) + c
        for e, v in qt.items():
            m = tuple(a + b for a, b in zip(diff, e))
            s = rem.get(m, 0) - c * v
            if s == 0:
                rem.pop(m, None)
            else:
                rem[m] = s
    return Polynomial(table, quot)


def vandermonde(variables):
    """prod_{i<j} (x_i - x_j) over the given ordered variables."""
    result = Polynomial.constant(1)
    for i in range(len(variables)):
        for j in range(i + 1, len(variables)):
            result = result * Polynomial.linear(
                {variables[i]: 1, variables[j]: -1}
            )
    return result


def _swap_exponents(p, va, vb):
    ia = p.table.index(va)
    ib = p.table.index(vb)
    out = {}
    for e, c in p.terms.items():
        f = list(e)
        f[ia], f[ib] = f[ib], f[ia]
        out[tuple(f)] = c
    return out


def is_symmetric(p, variables, signed=False):
    """True iff p is invariant under permutations of the listed variables,
    and under single sign flips of each of them when ``signed`` is set.

    Adjacent transpositions generate the symmetric group, and together
    with one flip per variable the full signed-permutation group.
    """
    variables = [v for v in variables]
    present = [v for v in variables if v in p.table]
    for i in range(len(variables) - 1):
        va, vb = variables[i], variables[i + 1]
        if va not in p.table or vb not in p.table:
            if (va in p.table) != (vb in p.table):
                # One side occurs and the other does not: swapping changes p
                # unless the occurring one is absent from every term.
                inside = va if va in p.table else vb
                if p.degree_in(inside) > 0:
                    return False
            continue
        if _swap_exponents(p, va, vb) != p.terms:
            return False
    if signed:
        for v in present:
            i = p.table.index(v)
            flipped = {
                e: (-c if e[i] % 2 else c) for e, c in p.terms.items()
            }
            if flipped != p.terms:
                return False
    return True
