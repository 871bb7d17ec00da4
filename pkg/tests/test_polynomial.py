"""Exact polynomial kernel: spec'd examples plus randomized ring laws."""

from fractions import Fraction

import pytest

from gysin import (
    NotDivisible,
    Polynomial,
    exact_div,
    is_symmetric,
    tvar,
    uvar,
    vandermonde,
    vvar,
    zvar,
)
from gysin.parsing import parse_polynomial

from conftest import random_polynomial, seeded

x1, x2, x3 = zvar(1, 1), zvar(1, 2), zvar(1, 3)
X1, X2, X3 = (Polynomial.variable(v) for v in (x1, x2, x3))
T1 = Polynomial.variable(tvar(1))


def test_additive_inverse():
    assert X1 + (-X1) == 0


def test_disjoint_supports():
    assert X1 + 1 + Polynomial.variable(x2) == X2 + X1 + 1


def test_rational_coefficients_merge():
    p = X1 * X1 * Fraction(2, 3) + X1 * X1 * Fraction(1, 3)
    assert p == X1 * X1
    assert list(p.terms.values()) == [1]  # stored exactly, back to an integer


def test_difference_of_squares():
    assert (X1 - X2) * (X1 + X2) == X1 * X1 - X2 * X2


def test_mul_identity_and_annihilator():
    p = X1 * X2 - T1
    assert p * Polynomial.constant(1) == p
    assert (X1 - T1) * Polynomial.zero() == 0


def test_substitute_appendix_change_of_variables():
    # z[2,1] - z[1,1] becomes v[1,1] under z[2,1] -> u1, z[1,1] -> u1 - v[1,1]
    p = Polynomial.variable(zvar(2, 1)) - Polynomial.variable(zvar(1, 1))
    u1, v11 = Polynomial.variable(uvar(1)), Polynomial.variable(vvar(1, 1))
    q = p.substitute({zvar(2, 1): u1, zvar(1, 1): u1 - v11})
    assert q == v11


def test_substitute_empty_and_even():
    assert T1.substitute({}) == T1
    assert (X1 * X1).substitute({x1: -X1}) == X1 * X1


def test_substitute_inverse_roundtrip():
    # z -> (u, v) followed by its inverse is the identity.
    rng = seeded("subst-roundtrip")
    zs = [zvar(1, 1), zvar(2, 1), zvar(2, 2)]
    forward = {
        zvar(1, 1): Polynomial.variable(uvar(1)) - Polynomial.variable(vvar(1, 1)),
        zvar(2, 1): Polynomial.variable(uvar(1)),
        zvar(2, 2): Polynomial.variable(uvar(2)),
    }
    backward = {
        uvar(1): Polynomial.variable(zvar(2, 1)),
        uvar(2): Polynomial.variable(zvar(2, 2)),
        vvar(1, 1): Polynomial.variable(zvar(2, 1)) - Polynomial.variable(zvar(1, 1)),
    }
    for _ in range(20):
        p = random_polynomial(rng, zs + [tvar(1)])
        assert p.substitute(forward).substitute(backward) == p


def test_exact_div_examples():
    assert exact_div(X1 * X1 - X2 * X2, X1 - X2) == X1 + X2
    p = X1 * X2 + T1
    assert exact_div(p, Polynomial.constant(1)) == p
    with pytest.raises(NotDivisible):
        exact_div(X1 * X1 + X2 * X2, X1 - X2)


def test_exact_div_roundtrip_random():
    rng = seeded("divroundtrip")
    for _ in range(30):
        p = random_polynomial(rng, [x1, x2, tvar(1)])
        q = random_polynomial(rng, [x1, x2, tvar(1)])
        if q.is_zero():
            continue
        assert exact_div(p * q, q) == p


def test_vandermonde():
    assert vandermonde([]) == 1
    assert vandermonde([x1, x2]) == X1 - X2
    expected = (X1 - X2) * (X1 - X3) * (X2 - X3)
    assert vandermonde([x1, x2, x3]) == expected


def test_ring_laws_random():
    rng = seeded("ringlaws")
    vs = [x1, x2, tvar(1)]
    for _ in range(25):
        p = random_polynomial(rng, vs)
        q = random_polynomial(rng, vs)
        r = random_polynomial(rng, vs)
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r


def test_is_symmetric():
    assert is_symmetric(X1 + X2, [x1, x2])
    assert not is_symmetric(X1 - X2, [x1, x2])
    assert is_symmetric(X1 * X1 + X2 * X2, [x1, x2], signed=True)
    assert not is_symmetric(X1 + X2, [x1, x2], signed=True)
    assert is_symmetric(X1 * X2, [x1, x2, x3]) is False


def test_canonical_order_and_roundtrip():
    # graded-lex, highest degree first, table order z < t
    p = X1 * X1 + X1 * X2 * 2 - T1 + Fraction(1, 2)
    s = str(p)
    assert s == "z[1,1]^2 + 2*z[1,1]*z[1,2] - t[1] + 1/2"
    assert parse_polynomial(s) == p
    assert str(parse_polynomial(s)) == s


def test_roundtrip_random():
    rng = seeded("print-roundtrip")
    for _ in range(40):
        p = random_polynomial(rng, [x1, x2, tvar(1), tvar(2)], max_degree=4)
        p = p * Fraction(1, rng.randint(1, 5))
        assert parse_polynomial(str(p)) == p
        assert str(parse_polynomial(str(p))) == str(p)


def test_degree_caching_and_parts():
    p = X1 * X1 * T1 + X2
    assert p.total_degree() == 3
    parts = p.homogeneous_parts()
    assert set(parts) == {1, 3}
    assert parts[1] == X2
    assert not p.is_homogeneous()
    assert (X1 * X2).is_homogeneous()
