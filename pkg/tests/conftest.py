"""Shared helpers: seeded random polynomials and symmetric classes."""

import itertools
import random

from gysin import Polynomial, partitions, tvar
from gysin.spaces import dimension


def msym(lam, variables):
    """Monomial symmetric polynomial m_lambda in the given variables."""
    n = len(variables)
    lam = tuple(lam) + (0,) * (n - len(lam))
    table = tuple(sorted(variables, key=lambda v: v.sort_key()))
    return Polynomial(table, {p: 1 for p in set(itertools.permutations(lam))})


def random_polynomial(rng, variables, max_degree=3, max_terms=4):
    table = tuple(variables)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * len(table)
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(len(table))] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + rng.randint(-4, 4)
    return Polynomial(table, terms)


def random_symmetric_class(spec, rng, degree=None, homogeneous=False):
    """A random class symmetric in each z-block, of roughly the asked degree."""
    if degree is None:
        degree = rng.randint(0, dimension(spec) + 4)
    total = Polynomial.zero(())
    for _ in range(rng.randint(1, 3)):
        piece = Polynomial.constant(rng.choice([-2, -1, 1, 2, 3]))
        budget = degree
        for m in range(1, spec.k + 1):
            block = spec.z_variables(m)
            w = rng.randint(0, min(budget, 4))
            lams = partitions(w, len(block))
            if lams:
                piece = piece * msym(rng.choice(lams).parts, block)
                budget -= w
        fill = budget if homogeneous else rng.randint(0, budget)
        for _ in range(fill):
            piece = piece * Polynomial.variable(tvar(rng.randint(1, spec.n)))
        total = total + piece
    if total.is_zero():
        total = Polynomial.constant(1)
    if homogeneous and not total.is_homogeneous():
        total = next(iter(total.homogeneous_parts().values()))
    return total


def seeded(name, extra=0):
    return random.Random(hash((name, extra)) & 0xFFFFFFFF)
