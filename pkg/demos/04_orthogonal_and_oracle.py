"""
Orthogonal Grassmannians and the fixed-point cross-check
========================================================

OG(n, 2n) has two components (all 2^n coordinate sign-vectors are fixed
points); OG(1, 2) is just two reduced points, so the integral of 1 is 2.
Every residue answer can be recomputed independently by Atiyah-Bott
localization: restrict to the fixed points, divide by tangent weights,
sum exactly.
"""

from gysin import (
    Polynomial,
    abbv_pushforward,
    fixed_points,
    grassmannian,
    orthogonal_grassmannian_even,
    orthogonal_grassmannian_odd,
    point_count,
    pushforward,
)
from gysin.parsing import parse_class

og12 = orthogonal_grassmannian_even(1)
print("OG(1,2): integral of 1 =", pushforward(og12, Polynomial.constant(1)))

for spec in (orthogonal_grassmannian_even(2), orthogonal_grassmannian_odd(2)):
    print("%s has %d fixed points" % (spec, point_count(spec)))

# The oracle's raw data for the projective line: two fixed points with
# opposite tangent weights.
for p in fixed_points(grassmannian(1, 2)):
    print(
        "fixed point  z ->", str(p.assignment[next(iter(p.assignment))]),
        "  tangent weight:", p.tangent_weights[0],
    )

# Residue pipeline versus localization sum, exact equality:
spec = orthogonal_grassmannian_odd(2)
alpha = parse_class("s[2,1](z) + 3*s[1](z)*t[1]^2", spec)
lhs = pushforward(spec, alpha)
rhs = abbv_pushforward(spec, alpha)
print("\n%s: residue  %s" % (spec, lhs))
print("%s: oracle   %s" % (spec, rhs))
print("agree:", lhs == rhs)
