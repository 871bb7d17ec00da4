"""
Push-forwards over projective spaces and Grassmannians
======================================================

Integrating an equivariant class over Gr(k, n) with the residue formula:
the answer is an exact polynomial in the torus characters t[i].
"""

from gysin import grassmannian, pushforward, schur_poly, zvar
from gysin.parsing import parse_class

# The projective line is Gr(1, 2).  Its tautological class z integrates
# to 1, and z^2 integrates to t[1] + t[2] (the first equivariant correction).
p1 = grassmannian(1, 2)
for expr in ("1", "z[1]", "z[1]^2", "z[1]^3"):
    alpha = parse_class(expr, p1)
    print("Gr(1,2):  integral of %-8s = %s" % (expr, pushforward(p1, alpha)))

# On P^(n-1) the push-forward of z^m is the complete homogeneous
# polynomial h_(m-n+1)(t), the classical Segre-class identity.
p3 = grassmannian(1, 4)
print("\nGr(1,4):  integral of z^5     =", pushforward(p3, parse_class("z[1]^5", p3)))

# Over Gr(k, n) the Schur classes of the tautological bundle push to Schur
# polynomials in t: the box-complement duality.  s_(5,4,4) contains the
# full 3x3 box once, and integrates to s_(2,1,1)(t).
gr36 = grassmannian(3, 6)
zs = [zvar(1, i) for i in (1, 2, 3)]
print("\nGr(3,6):  integral of s[3,3,3](z) =", pushforward(gr36, schur_poly([3, 3, 3], zs)))
result = pushforward(gr36, schur_poly([5, 4, 4], zs))
print("Gr(3,6):  integral of s[5,4,4](z) =", result)

# A class of degree below dim Gr(3,6) = 9 has nowhere to land: the residue
# vanishes for degree reasons.
print("Gr(3,6):  integral of s[2,1](z)   =", pushforward(gr36, schur_poly([2, 1], zs)))
