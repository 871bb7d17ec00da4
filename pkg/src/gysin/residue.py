"""Iterated residues at infinity of rational expressions with linear poles.

The residue at infinity in one variable is
``Res_inf f = -[coefficient of w^-1 in f(1/w)/w^2]``, and the iterated
residue eliminates the variables one at a time in the supplied order
(first entry first), each step treating the not-yet-eliminated
variables as coefficients.  Equivalently the expression is expanded in
the nested Laurent field in which the variable currently being
eliminated is innermost.

When every denominator factor involves a single residue variable the
joint Laurent expansion at infinity exists and the result provably does
not depend on the order; this is the normal-crossing situation and the
engine can certify it (``strict=True``).  Factors coupling several
residue variables are legal but order-sensitive in general; callers
that use them (the staged flag-variety integrands) fix the order as
part of the formula.
"""

from fractions import Fraction

from .errors import NotNormalCrossing, NotSimplePole
from .polynomial import Polynomial, exact_div, make_table


class LinearFactor:
    """A denominator factor: sum of residue variables with rational
    coefficients plus a polynomial constant part in the parameters."""

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs, const=0):
        self.coeffs = {v: c for v, c in coeffs.items() if c != 0}
        if any(v.is_parameter for v in self.coeffs):
            raise ValueError("parameter variables belong in the constant part")
        if not isinstance(const, Polynomial):
            const = Polynomial.constant(const)
        if any(not v.is_parameter for v in const.support()):
            raise ValueError("constant part must involve parameters only")
        self.const = const
        if not self.coeffs and self.const.is_zero():
            raise ValueError("zero denominator factor")

    def variables(self):
        return tuple(self.coeffs.keys())

    def as_polynomial(self):
        return Polynomial.linear(dict(self.coeffs)) + self.const

    def substitute_linear(self, bindings):
        """Rewrite through linear substitutions v -> {VarId: coeff}."""
        out = {}
        for v, c in self.coeffs.items():
            for w, a in bindings.get(v, {v: 1}).items():
                s = out.get(w, 0) + c * a
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return LinearFactor(out, self.const)

    def at_zero(self, variables):
        """The factor with the listed variables set to zero."""
        out = {v: c for v, c in self.coeffs.items() if v not in variables}
        return LinearFactor(out, self.const)

    def __str__(self):
        return str(self.as_polynomial())

    def __repr__(self):
        return "LinearFactor(%s)" % self

    def __eq__(self, other):
        if not isinstance(other, LinearFactor):
            return NotImplemented
        return self.coeffs == other.coeffs and self.const == other.const


class RationalExpr:
    """prefactor * numerator / product(denominator factors)."""

    __slots__ = ("numerator", "denominator", "prefactor")

    def __init__(self, numerator, denominator=(), prefactor=1):
        self.numerator = numerator
        self.denominator = list(denominator)
        self.prefactor = Fraction(prefactor)

    def residue_variables(self):
        vs = set(self.numerator.residue_support())
        for f in self.denominator:
            vs.update(f.coeffs.keys())
        return make_table(vs)

    def scaled(self, c):
        return RationalExpr(self.numerator, self.denominator, self.prefactor * c)

    def substitute_linear(self, bindings):
        """Apply a linear change of residue variables to the whole expression."""
        num = self.numerator.substitute(
            {v: Polynomial.linear(m) for v, m in bindings.items()}
        )
        den = [f.substitute_linear(bindings) for f in self.denominator]
        return RationalExpr(num, den, self.prefactor)

    def __str__(self):
        den = " * ".join("(%s)" % f for f in self.denominator) or "1"
        return "%s * [%s] / [%s]" % (self.prefactor, self.numerator, den)


def _split_by_power(poly, var):
    """Decompose poly as {k: coefficient polynomial of var^k}."""
    if var not in poly.table:
        return {0: poly}
    i = poly.table.index(var)
    rest = poly.table[:i] + poly.table[i + 1 :]
    layers = {}
    for e, c in poly.terms.items():
        k = e[i]
        layers.setdefault(k, {})[e[:i] + e[i + 1 :]] = c
    return {k: Polynomial(rest, ts) for k, ts in layers.items()}


def _residue_step(numerator, factors, var):
    """One variable's residue at infinity.

    Returns (new numerator, kept factors); the leading minus sign of the
    residue is folded into the numerator.
    """
    consumed = [f for f in factors if f.coeffs.get(var, 0) != 0]
    kept = [f for f in factors if f.coeffs.get(var, 0) == 0]
    if numerator.is_zero():
        return numerator, kept
    layers = _split_by_power(numerator, var)
    top = max(layers)
    shift = len(consumed)
    order = top + 1 - shift
    if order < 0:
        return Polynomial.zero(()), kept
    # Inverting var sends each consumed factor a*var + B to (a + B*var)/var;
    # expand each reciprocal as a geometric series up to the exact order the
    # w^-1 coefficient can reach.
    series = [Polynomial.constant(1)]
    for f in consumed:
        a = Fraction(f.coeffs[var])
        b = Polynomial.linear(
            {v: c for v, c in f.coeffs.items() if v != var}
        ) + f.const
        ratio = b * (-1 / a)
        fs = [Polynomial.constant(1 / a)]
        for _ in range(order):
            fs.append(fs[-1] * ratio)
        series = _convolve(series, fs, order)
    out = Polynomial.zero(())
    for d, nd in layers.items():
        j = d + 1 - shift
        if 0 <= j < len(series):
            out = out + nd * series[j]
    return -out, kept


def _convolve(s1, s2, order):
    out = [Polynomial.zero(()) for _ in range(order + 1)]
    for i, a in enumerate(s1):
        if a.is_zero():
            continue
        for j, b in enumerate(s2):
            if i + j > order:
                break
            out[i + j] = out[i + j] + a * b
    return out


def residue_at_infinity(expr, order, strict=True):
    """Iterated residue at infinity over the given variable order.

    ``order[0]`` is eliminated first.  With ``strict`` set, denominator
    factors coupling two or more of the order's variables are rejected
    with NotNormalCrossing instead of being expanded order-dependently.
    Factors in parameter variables only must divide the final numerator
    exactly.  The result is a polynomial in the surviving variables.
    """
    order = list(order)
    missing = [v for v in expr.residue_variables() if v not in order]
    if missing:
        raise NotNormalCrossing(
            "residue variables %s do not appear in the elimination order"
            % (", ".join(str(v) for v in missing))
        )
    if strict:
        order_set = set(order)
        for f in expr.denominator:
            inside = [v for v in f.coeffs if v in order_set]
            if len(inside) > 1:
                raise NotNormalCrossing(
                    "factor %s couples residue variables %s; poles are not "
                    "normal crossing at infinity" % (f, ", ".join(map(str, inside)))
                )
    num = expr.numerator
    factors = list(expr.denominator)
    for var in order:
        num, factors = _residue_step(num, factors, var)
        if num.is_zero():
            return Polynomial.zero(())
    for f in factors:
        if f.coeffs:
            raise NotNormalCrossing(
                "factor %s still involves residue variables after elimination" % f
            )
        num = exact_div(num, f.const)
    return num * expr.prefactor


def simplify_simple_poles(expr, variables):
    """Take minus the residue at zero across simple standalone poles.

    Every listed variable must occur in the denominator exactly once, as
    a standalone factor c*v, and setting the listed variables to zero
    must not kill any other factor.  The returned expression has those
    factors removed, the variables set to zero everywhere, and the
    prefactor multiplied by (-1)^len(variables) (and divided by the
    factor coefficients c).
    """
    variables = list(variables)
    if not variables:
        return expr
    vset = set(variables)
    pref = expr.prefactor
    removed = 0
    kept = []
    standalone = {}
    for f in expr.denominator:
        inside = [v for v in f.coeffs if v in vset]
        if len(inside) == 1 and len(f.coeffs) == 1 and f.const.is_zero():
            v = inside[0]
            if v in standalone:
                raise NotSimplePole("%s has a pole of order > 1 at zero" % (v,))
            standalone[v] = f.coeffs[v]
            removed += 1
            continue
        kept.append(f)
    for v in variables:
        if v not in standalone:
            raise NotSimplePole(
                "%s is not a standalone simple denominator factor" % (v,)
            )
    new_den = []
    for f in kept:
        coeffs = {v: c for v, c in f.coeffs.items() if v not in vset}
        if not coeffs and f.const.is_zero():
            raise NotSimplePole(
                "factor %s vanishes when %s are set to zero"
                % (f, ", ".join(map(str, variables)))
            )
        new_den.append(LinearFactor(coeffs, f.const))
    zero = {v: Polynomial.zero(()) for v in variables}
    num = expr.numerator.substitute(zero)
    for v in variables:
        pref = pref * Fraction(-1, 1) / Fraction(standalone[v])
    return RationalExpr(num, new_den, pref)


def check_order_independence(expr, orders, strict=False):
    """True iff every supplied elimination order yields the same polynomial."""
    results = [residue_at_infinity(expr, order, strict=strict) for order in orders]
    return all(r == results[0] for r in results[1:])
