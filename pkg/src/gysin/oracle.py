"""Fixed-point localization: the independent ground truth.

The equivariant integral is a sum over torus fixed points of the
restricted class divided by the product of tangent weights.  Fixed
points are coordinate flags (nested subsets of coordinate lines, with a
sign choice per line for the isotropic families), and the tangent
weights are read off the usual decompositions Hom(V_m/V_{m-1}, W/V_m),
Sym^2 and Lambda^2 of the (dual) tautological pieces, transported by
(signed) permutations.

Weight signs are fixed so that every family reproduces the residue
pipeline; each fixed point carries exactly dim_C(X) weights, which is
asserted at enumeration time.

Two exact evaluation strategies are provided.  The symbolic one
accumulates the sum over an explicit common denominator of linear
factors and performs one exact division at the end.  The interpolation
one exploits that the answer is a (signed-)symmetric polynomial of
known degree: it evaluates the localization sum at deterministic
rational points and solves for the coefficients in the monomial
symmetric basis, re-checking the solution at fresh points.  Both are
exact; the second stays fast when the fixed-point set is large.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPolynomial
from .polynomial import Polynomial, exact_div, grlex_key, tvar, zvar
from .schur import partitions
from .spaces import dimension


@dataclass
class FixedPoint:
    """A torus fixed point: z-variable assignment plus tangent weights."""

    assignment: dict
    tangent_weights: list

    def euler_class(self):
        out = Polynomial.constant(1)
        for w in self.tangent_weights:
            out = out * w
        return out


def _tpoly(i, sign=1):
    return Polynomial.linear({tvar(i): sign})


def _linear(entries):
    coeffs = {}
    for i, s in entries:
        coeffs[tvar(i)] = coeffs.get(tvar(i), 0) + s
    return Polynomial.linear(coeffs)


def _chains(universe, sizes):
    """Nested subsets S_1 c ... c S_k of the given sizes, as sorted tuples."""
    if not sizes:
        return [()]
    out = []
    for top in itertools.combinations(universe, sizes[-1]):
        for prefix in _chains(top, sizes[:-1]):
            out.append(prefix + (top,))
    return out


def fixed_points(spec):
    """All torus fixed points with their tangent weights."""
    n, k, d = spec.n, spec.k, spec.d
    pts = []
    if spec.form == "A":
        for chain in _chains(tuple(range(1, n + 1)), d):
            assignment = {}
            for m, subset in enumerate(chain, start=1):
                for j, i in enumerate(subset, start=1):
                    assignment[zvar(m, j)] = _tpoly(i)
            weights = []
            prev = ()
            for m, subset in enumerate(chain, start=1):
                new = [i for i in subset if i not in prev]
                outside = [i for i in range(1, n + 1) if i not in subset]
                for i in new:
                    for j in outside:
                        weights.append(_linear([(i, 1), (j, -1)]))
                prev = subset
            pts.append(FixedPoint(assignment, weights))
    else:
        for chain in _chains(tuple(range(1, n + 1)), d):
            top = chain[-1]
            for signs in itertools.product((1, -1), repeat=len(top)):
                eps = dict(zip(top, signs))
                assignment = {}
                for m, subset in enumerate(chain, start=1):
                    for j, i in enumerate(subset, start=1):
                        assignment[zvar(m, j)] = _tpoly(i, eps[i])
                weights = []
                # Type-A fiber inside the top isotropic space.
                prev = ()
                for subset in chain[:-1]:
                    new = [i for i in subset if i not in prev]
                    outside = [i for i in top if i not in subset]
                    for i in new:
                        for j in outside:
                            weights.append(
                                _linear([(i, eps[i]), (j, -eps[j])])
                            )
                    prev = subset
                # Normal directions to the top space inside the ambient one.
                outside = [i for i in range(1, n + 1) if i not in top]
                for i in top:
                    for j in outside:
                        weights.append(_linear([(i, eps[i]), (j, -1)]))
                        weights.append(_linear([(i, eps[i]), (j, 1)]))
                    if spec.form == "D":
                        weights.append(_linear([(i, eps[i])]))
                # The symmetric square (C) or exterior square (B, D).
                for a in range(len(top)):
                    for b in range(a if spec.form == "C" else a + 1, len(top)):
                        i, j = top[a], top[b]
                        weights.append(_linear([(i, eps[i]), (j, eps[j])]))
                pts.append(FixedPoint(assignment, weights))
    dim = dimension(spec)
    for p in pts:
        assert len(p.tangent_weights) == dim, "tangent weight count mismatch"
    return pts


def point_count(spec):
    """Number of torus fixed points (the Euler characteristic)."""
    return len(fixed_points(spec))


def restrict_class(alpha, point):
    """alpha with the z-variables replaced by the fixed point's t-values."""
    return alpha.substitute(point.assignment)


# -- symbolic summation over a common denominator ---------------------------


def _factor_key(poly):
    """Canonical (monic) form of a linear factor plus the scale pulled out."""
    lead_e, lead_c = max(poly.terms.items(), key=lambda it: grlex_key(it[0]))
    scale = Fraction(lead_c)
    monic = tuple(
        sorted((e, Fraction(c) / scale) for e, c in poly.terms.items())
    )
    return (poly.table, monic), scale


def abbv_sum_symbolic(terms):
    """Sum of numerator/prod(linear factors) with one exact division.

    ``terms`` is a list of (numerator polynomial, [linear factor
    polynomials]).  Raises NotPolynomial if the sum fails to clear its
    denominator, which signals wrong fixed-point data.
    """
    keyed = []
    lcm = {}
    shapes = {}
    for num, factors in terms:
        counts = {}
        scale = Fraction(1)
        for f in factors:
            key, s = _factor_key(f)
            scale *= s
            counts[key] = counts.get(key, 0) + 1
            shapes[key] = f * (1 / s)
        keyed.append((num * (1 / scale), counts))
        for key, c in counts.items():
            lcm[key] = max(lcm.get(key, 0), c)
    total = Polynomial.zero(())
    for num, counts in keyed:
        piece = num
        for key, c in lcm.items():
            missing = c - counts.get(key, 0)
            for _ in range(missing):
                piece = piece * shapes[key]
        total = total + piece
    denominator = Polynomial.constant(1)
    for key, c in lcm.items():
        for _ in range(c):
            denominator = denominator * shapes[key]
    if total.is_zero():
        return total
    try:
        return exact_div(total, denominator)
    except Exception as exc:
        raise NotPolynomial(
            "localization sum is not a polynomial; fixed-point data is wrong"
        ) from exc


# -- exact interpolation in the symmetric basis ------------------------------


def _monomial_symmetric(lam, tvars):
    n = len(tvars)
    exps = tuple(lam) + (0,) * (n - len(lam))
    table = tuple(tvars)
    terms = {}
    for perm in set(itertools.permutations(exps)):
        terms[perm] = 1
    return Polynomial(table, terms)


def _sym_basis(spec, degree):
    """Monomial symmetric basis of the degree-d invariants in t."""
    n = spec.n
    if spec.signed:
        if degree % 2:
            return []
        return [
            _monomial_symmetric([2 * x for x in lam], spec.t_variables())
            for lam in partitions(degree // 2, n)
        ]
    return [
        _monomial_symmetric(lam, spec.t_variables())
        for lam in partitions(degree, n)
    ]


def _eval_points(spec, how_many, salt=0):
    """Deterministic rational t-points where no tangent weight vanishes."""
    n = spec.n
    pts = []
    s = salt
    while len(pts) < how_many:
        base = 2 + s
        vals = [Fraction(base + 2 * i * (s + 1) + i * i, 1) for i in range(n)]
        s += 1
        if len(set(abs(v) for v in vals)) < n or any(v == 0 for v in vals):
            continue
        pts.append({tvar(i + 1): vals[i] for i in range(n)})
    return pts


def _solve(matrix, rhs):
    """Exact Gaussian elimination; returns None when the matrix is singular."""
    m = [row[:] + [b] for row, b in zip(matrix, rhs)]
    size = len(m)
    cols = len(matrix[0]) if matrix else 0
    if size < cols:
        return None
    row = 0
    where = []
    for col in range(cols):
        pivot = next((r for r in range(row, size) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[row], m[pivot] = m[pivot], m[row]
        inv = Fraction(1) / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(size):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[row])]
        where.append(row)
        row += 1
    for r in range(row, size):
        if m[r][-1] != 0:
            return None
    return [m[r][-1] for r in where]


def localization_value(spec, alpha, point, pts=None):
    """Exact value of the fixed-point sum at one rational t-point."""
    if pts is None:
        pts = fixed_points(spec)
    total = Fraction(0)
    for p in pts:
        num = restrict_class(alpha, p).evaluate(point)
        if num == 0:
            continue
        den = Fraction(1)
        for w in p.tangent_weights:
            den *= w.evaluate(point)
        total += num / den
    return total


def _split_by_t_monomial(spec, alpha):
    """alpha as a sum of t-monomials times pure-z polynomials.

    The restriction to a fixed point only touches z, so every t-monomial
    factors out of the localization sum; the pure-z cofactors inherit
    the Weyl symmetry and their sums are honestly (signed-)symmetric.
    """
    table = alpha.table
    t_idx = [i for i, v in enumerate(table) if v.is_parameter]
    z_idx = [i for i, v in enumerate(table) if not v.is_parameter]
    t_table = tuple(table[i] for i in t_idx)
    z_table = tuple(table[i] for i in z_idx)
    groups = {}
    for e, c in alpha.terms.items():
        key = tuple(e[i] for i in t_idx)
        groups.setdefault(key, {})[tuple(e[i] for i in z_idx)] = c
    out = []
    for key, terms in groups.items():
        mono = Polynomial(t_table, {key: 1})
        out.append((mono, Polynomial(z_table, terms)))
    return out


def abbv_pushforward(spec, alpha, method="auto"):
    """Sum of restrictions over Euler classes, as an exact polynomial in t.

    method: "symbolic" accumulates over a common denominator (one exact
    division at the end); "interpolate" reconstructs the answer in the
    (signed-)symmetric monomial basis from deterministic rational
    evaluations; "auto" picks by fixed-point count.
    """
    pts = fixed_points(spec)
    if method == "auto":
        method = "symbolic" if len(pts) * dimension(spec) <= 48 else "interpolate"
    if method == "symbolic":
        terms = [
            (restrict_class(alpha, p), p.tangent_weights) for p in pts
        ]
        return abbv_sum_symbolic(terms)
    if method != "interpolate":
        raise ValueError("unknown method %r" % (method,))
    dim = dimension(spec)
    result = Polynomial.zero(())
    for mono, zpart in _split_by_t_monomial(spec, alpha):
        for deg, part in zpart.homogeneous_parts().items():
            g = deg - dim
            if g < 0:
                continue
            basis = _sym_basis(spec, g)
            if not basis:
                # Odd degree in a signed family: the invariant space is
                # zero, so the sum must vanish; spot-check that it does.
                for point in _eval_points(spec, 2, salt=17):
                    if localization_value(spec, part, point, pts) != 0:
                        raise NotPolynomial(
                            "localization sum escapes the invariant space"
                        )
                continue
            result = result + mono * _interpolate(spec, part, basis, pts)
    return result


def _interpolate(spec, alpha_part, basis, pts):
    width = len(basis)
    salt = 0
    while True:
        sample = _eval_points(spec, width, salt=salt)
        matrix = [[b.evaluate(pt) for b in basis] for pt in sample]
        rhs = [localization_value(spec, alpha_part, pt, pts) for pt in sample]
        coeffs = _solve(matrix, rhs)
        if coeffs is not None:
            break
        salt += width + 1
        if salt > 20 * (width + 1):
            raise NotPolynomial("could not find a unisolvent evaluation set")
    out = Polynomial.zero(())
    for c, b in zip(coeffs, basis):
        if c != 0:
            out = out + b * c
    for point in _eval_points(spec, 2, salt=salt + width + 3):
        if out.evaluate(point) != localization_value(spec, alpha_part, point, pts):
            raise NotPolynomial(
                "interpolated localization sum fails verification; "
                "fixed-point data is wrong"
            )
    return out
