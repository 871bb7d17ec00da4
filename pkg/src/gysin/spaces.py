"""Residue integrands for push-forwards from classical homogeneous spaces.

Each space is modeled internally as a partial flag of nesting type
``d = (d_1 < ... < d_k)`` in an ambient space determined by the family:

==============  =====================================  ==========
family          flag condition                         ambient
==============  =====================================  ==========
gr / flA        none                                   C^n
lg / flC        isotropic for a symplectic form        C^(2n)
og_even / flB   isotropic for a symmetric form         C^(2n)
og_odd / flD    isotropic for a symmetric form         C^(2n+1)
==============  =====================================  ==========

The Grassmannian-like families are the one-block (k = 1) cases.  The
plan built here realizes the push-forward as an iterated residue at
infinity over the last z-block, with the denominator standardized to
(t - z)-type Euler factors.

Sign conventions.  The source formulas are inconsistent about
(z - t) versus (t - z) factors and about the Weyl normalization of the
block-collapsed flag formula, so the constants here are fixed once
against the fixed-point oracle and frozen:

* evaluated push-forward = sign / weyl_order * prefactor * residue,
* sign = (-1)^(d_k*(n+1) + C(d_k,2) + sum_m C(b_m,2)) with block gaps
  b_m = d_m - d_(m-1), derived by summing the residues over their poles
  and matching the localization sum term by term,
* prefactor carries 2^(d_k) for the odd orthogonal families plus the
  correction weyl_order / prod_m b_m! that the block-collapsed formula
  needs (the collapse identifies fixed points in groups of
  prod_m b_m!, not weyl_order, per the oracle),
* for the staged (uncollapsed) type-A plan the extra sign
  (-1)^(number of v variables) compensates the v-block eliminations.

Every one of these constants is pinned by regression tests against the
oracle on small instances and by the randomized master-equivalence
suite.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import NegativeMultiplicity, NotWeylSymmetric, ResidualVariable
from .polynomial import Polynomial, exact_div, is_symmetric, tvar, uvar, vvar, zvar
from .residue import LinearFactor, RationalExpr, residue_at_infinity


def _product_of(variables):
    out = Polynomial.constant(1)
    for v in variables:
        out = out * Polynomial.variable(v)
    return out

FAMILIES = ("gr", "lg", "og_even", "og_odd", "flA", "flC", "flB", "flD")

# Flag-variety families sharing plan structure with a one-block parent.
_FORM = {
    "gr": "A",
    "flA": "A",
    "lg": "C",
    "flC": "C",
    "og_even": "B",
    "flB": "B",
    "og_odd": "D",
    "flD": "D",
}


@dataclass(frozen=True)
class SpaceSpec:
    """A homogeneous space: family, nesting vector d, ambient parameter n."""

    family: str
    d: tuple
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))
        d = tuple(int(x) for x in self.d)
        object.__setattr__(self, "d", d)
        if not d or any(x < 1 for x in d):
            raise ValueError("d must be a nonempty vector of positive integers")
        if any(d[i] >= d[i + 1] for i in range(len(d) - 1)):
            raise ValueError("d must be strictly increasing")
        if self.family in ("gr", "lg", "og_even", "og_odd") and len(d) != 1:
            raise ValueError("%s takes a single block" % self.family)
        if self.family in ("lg", "og_even", "og_odd") and d[0] != self.n:
            raise ValueError("%s(n) has block size n" % self.family)
        if d[-1] > self.n:
            raise ValueError("d_k must not exceed n")

    @property
    def form(self):
        return _FORM[self.family]

    @property
    def signed(self):
        return self.form != "A"

    @property
    def k(self):
        return len(self.d)

    @property
    def last(self):
        return self.d[-1]

    @property
    def block_gaps(self):
        return tuple(
            self.d[m] - (self.d[m - 1] if m else 0) for m in range(len(self.d))
        )

    def z_variables(self, block=None):
        if block is None:
            return [
                zvar(m + 1, j + 1)
                for m in range(self.k)
                for j in range(self.d[m])
            ]
        return [zvar(block, j + 1) for j in range(self.d[block - 1])]

    def t_variables(self):
        return [tvar(i + 1) for i in range(self.n)]

    def __str__(self):
        if self.family == "gr":
            return "gr:%d,%d" % (self.d[0], self.n)
        if self.family == "lg":
            return "lg:%d" % self.n
        if self.family == "og_even":
            return "og:%d,%d" % (self.n, 2 * self.n)
        if self.family == "og_odd":
            return "og:%d,%d" % (self.n, 2 * self.n + 1)
        return "%s:%s;%d" % (self.family, ",".join(map(str, self.d)), self.n)


def grassmannian(k, n):
    return SpaceSpec("gr", (k,), n)


def lagrangian_grassmannian(n):
    return SpaceSpec("lg", (n,), n)


def orthogonal_grassmannian_even(n):
    return SpaceSpec("og_even", (n,), n)


def orthogonal_grassmannian_odd(n):
    return SpaceSpec("og_odd", (n,), n)


def flag(family, d, n):
    return SpaceSpec(family, tuple(d), n)


class IndexMultiset:
    """Multiset of ordered index pairs (i, j), i != j, with multiplicities."""

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        self.entries = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for pair, mult in items:
            self.add(pair, mult)

    def add(self, pair, mult=1):
        i, j = pair
        if i == j:
            raise ValueError("diagonal pairs are not allowed")
        if mult < 0:
            raise NegativeMultiplicity("cannot add negative multiplicity")
        if mult:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + mult

    def subtract(self, other):
        out = IndexMultiset(self.entries)
        for pair, mult in other.entries.items():
            have = out.entries.get(pair, 0) - mult
            if have < 0:
                raise NegativeMultiplicity(
                    "multiplicity of %s drops below zero" % (pair,)
                )
            if have:
                out.entries[pair] = have
            else:
                out.entries.pop(pair, None)
        return out

    def cardinality(self):
        return sum(self.entries.values())

    def pairs(self):
        return sorted(self.entries.items())

    def __eq__(self, other):
        if not isinstance(other, IndexMultiset):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return "IndexMultiset(%s)" % (self.pairs(),)


def full_offdiagonal(d):
    """All (i, j), i != j <= d, multiplicity one."""
    out = IndexMultiset()
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if i != j:
                out.add((i, j))
    return out


def index_set_IFl(d):
    """The multiset difference A - B indexing the collapsed flag numerator.

    A stacks the off-diagonal squares of sizes d_1, ..., d_k; B stacks
    the off-diagonal d_(m+1) x d_m rectangles.
    """
    d = tuple(d)
    a = IndexMultiset()
    for dm in d:
        for i in range(1, dm + 1):
            for j in range(1, dm + 1):
                if i != j:
                    a.add((i, j))
    b = IndexMultiset()
    for m in range(len(d) - 1):
        for i in range(1, d[m + 1] + 1):
            for j in range(1, d[m] + 1):
                if i != j:
                    b.add((i, j))
    return a.subtract(b)


def weyl_order(spec):
    """Order of the Weyl group of the reduction group: prod_m d_m!."""
    out = 1
    for dm in spec.d:
        out *= factorial(dm)
    return out


def dimension(spec):
    """Complex dimension, read off the plan's factor counts.

    dim = (#denominator factors) - (#linear z-factors in the numerator)
        - (#residue variables), so no external dimension table can drift.
    """
    dk, n = spec.last, spec.n
    ifl = index_set_IFl(spec.d).cardinality()
    if spec.form == "A":
        return dk * n - ifl - dk
    extra = {"C": comb(dk, 2), "B": comb(dk, 2) + dk, "D": comb(dk, 2)}[spec.form]
    return 2 * dk * n - ifl - extra - dk


def fundamental_class_lift(spec):
    """The z-polynomial cutting the isotropic cone, lifted to the linear model.

    Type A spaces have no isotropy conditions (lift 1).  The isotropy
    equations contribute z_i + z_j over pairs i < j for the symplectic
    form and i <= j for the symmetric form; the latter expands to
    2^d * prod(z_i) * prod_{i<j}(z_i + z_j).
    """
    k, dk = spec.k, spec.last
    if spec.form == "A":
        return Polynomial.constant(1)
    zs = [zvar(k, i + 1) for i in range(dk)]
    out = Polynomial.constant(1)
    for i in range(dk):
        for j in range(i + 1, dk):
            out = out * Polynomial.linear({zs[i]: 1, zs[j]: 1})
    if spec.form in ("B", "D"):
        for z in zs:
            out = out * Polynomial.linear({z: 2})
    return out


@dataclass
class IntegrandPlan:
    """A ready-to-evaluate residue formula for one push-forward."""

    expr: RationalExpr
    residue_order: list
    weyl_order: int
    sign: int
    space: SpaceSpec
    staged: bool = False

    def evaluate(self):
        res = residue_at_infinity(
            self.expr, self.residue_order, strict=not self.staged
        )
        return res * Fraction(self.sign, self.weyl_order)


def _family_sign(spec):
    dk, n = spec.last, spec.n
    exponent = dk * (n + 1) + comb(dk, 2)
    for b in spec.block_gaps:
        exponent += comb(b, 2)
    return -1 if exponent % 2 else 1


def _check_alpha(spec, alpha):
    allowed = set(spec.z_variables()) | set(spec.t_variables())
    stray = [v for v in alpha.support() if v not in allowed]
    if stray:
        raise ValueError(
            "class uses variables %s outside the space's blocks"
            % ", ".join(map(str, stray))
        )
    for m in range(1, spec.k + 1):
        if not is_symmetric(alpha, spec.z_variables(m)):
            raise NotWeylSymmetric(
                "class is not symmetric in block z[%d,*]; it does not lie in "
                "the image of the Kirwan map" % m
            )


def _collapse_blocks(spec, alpha):
    # z[m,j] -> z[k,j]: the v = 0 specialization of the flag substitution.
    k = spec.k
    if k == 1:
        return alpha
    bind = {}
    for m in range(1, k):
        for j in range(1, spec.d[m - 1] + 1):
            bind[zvar(m, j)] = Polynomial.variable(zvar(k, j))
    return alpha.substitute(bind)


def build_plan(spec, alpha):
    """Assemble the collapsed residue integrand for any family.

    The numerator is alpha (blocks identified), times the index-set
    product of z-differences, times the isotropy factors of the family;
    the denominator holds one (t_m - z) factor per pair, doubled with
    (t_m + z) for the isotropic families.  The residue runs over the
    last z-block only.
    """
    _check_alpha(spec, alpha)
    k, dk, n = spec.k, spec.last, spec.n
    zs = [zvar(k, i + 1) for i in range(dk)]
    num = _collapse_blocks(spec, alpha)
    for (i, j), mult in index_set_IFl(spec.d).pairs():
        num = num * Polynomial.linear({zs[i - 1]: 1, zs[j - 1]: -1}) ** mult
    pref = Fraction(1)
    if spec.signed:
        lift = fundamental_class_lift(spec)
        if spec.form == "D":
            # The lift's 2^d * prod(z_i) cancels against the ambient
            # zero-weight Euler factors prod(-z_i); evaluate the reduced form.
            lift = exact_div(
                lift, Polynomial.constant(2**dk) * _product_of(zs)
            )
            pref *= 2**dk
        num = num * lift
    den = []
    for z in zs:
        for m in range(1, n + 1):
            den.append(LinearFactor({z: -1}, Polynomial.variable(tvar(m))))
            if spec.signed:
                den.append(LinearFactor({z: 1}, Polynomial.variable(tvar(m))))
    # The collapse identifies prod_m b_m! pole assignments per fixed point,
    # not weyl_order of them; scaling the integrand keeps the plan's overall
    # 1/weyl_order normalization honest.
    for b in spec.block_gaps:
        pref /= factorial(b)
    pref *= weyl_order(spec)
    expr = RationalExpr(num, den, pref)
    return IntegrandPlan(expr, list(zs), weyl_order(spec), _family_sign(spec), spec)


def flag_substitution(spec):
    """Appendix-style change of variables z -> (u, v) for a type-A flag.

    v[m,j] = z[m+1,j] - z[m,j] and u_i = z[k,i], inverted as
    z[m,j] = u_j - sum_{l=m}^{k-1} v[l,j].
    """
    k = spec.k
    bind = {}
    for m in range(1, k + 1):
        for j in range(1, spec.d[m - 1] + 1):
            combo = {uvar(j): 1}
            for level in range(m, k):
                combo[vvar(level, j)] = -1
            bind[zvar(m, j)] = combo
    return bind


def v_variables(spec):
    return [
        vvar(m, j)
        for m in range(1, spec.k)
        for j in range(1, spec.d[m - 1] + 1)
    ]


def build_plan_unsimplified_flagA(spec, alpha):
    """The staged type-A plan over all z-variables.

    The full integrand keeps one Vandermonde-square numerator per block
    and one denominator factor per weight of the linear model; it is
    evaluated in the (u, v) coordinates, v-block first.  Agreement with
    the collapsed plan of build_plan is a tested identity.
    """
    if spec.form != "A":
        raise ValueError("the staged plan exists for type-A flags only")
    _check_alpha(spec, alpha)
    k, n = spec.k, spec.n
    num = alpha
    for m in range(1, k + 1):
        dm = spec.d[m - 1]
        for i in range(1, dm + 1):
            for j in range(1, dm + 1):
                if i != j:
                    num = num * Polynomial.linear(
                        {zvar(m, i): 1, zvar(m, j): -1}
                    )
    den = []
    for m in range(1, k):
        for i in range(1, spec.d[m] + 1):
            for j in range(1, spec.d[m - 1] + 1):
                den.append(LinearFactor({zvar(m + 1, i): 1, zvar(m, j): -1}, 0))
    for j in range(1, spec.d[-1] + 1):
        for m in range(1, n + 1):
            den.append(LinearFactor({zvar(k, j): -1}, Polynomial.variable(tvar(m))))
    expr = RationalExpr(num, den, 1).substitute_linear(flag_substitution(spec))
    vs = v_variables(spec)
    order = vs + [uvar(i) for i in range(1, spec.last + 1)]
    sign = _family_sign(spec) * (-1 if len(vs) % 2 else 1)
    return IntegrandPlan(
        expr, order, weyl_order(spec), sign, spec, staged=True
    )


def pushforward(spec, alpha, staged=False):
    """Equivariant integral of alpha over the space, as a polynomial in t."""
    if staged:
        plan = build_plan_unsimplified_flagA(spec, alpha)
    else:
        plan = build_plan(spec, alpha)
    result = plan.evaluate()
    leftover = [v for v in result.support() if not v.is_parameter]
    if leftover:
        raise ResidualVariable(
            "residue variables %s survived the push-forward"
            % ", ".join(map(str, leftover))
        )
    return result.trim()


def collapsed_class(spec, alpha):
    """alpha with all z-blocks identified with the last one (v = 0)."""
    return _collapse_blocks(spec, alpha)


def all_nestings(max_last, max_blocks=None):
    """Strictly increasing positive vectors with last entry <= max_last."""
    out = []
    for k in range(1, (max_blocks or max_last) + 1):
        for combo in itertools.combinations(range(1, max_last + 1), k):
            out.append(combo)
    return out
