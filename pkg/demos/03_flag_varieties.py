"""
Partial flag varieties: two residue pipelines
=============================================

Type-A flags come with two equivalent integrands: the staged one over
every z-variable (one Vandermonde square per block, eliminated v-levels
first), and the collapsed one over the last block only, whose numerator
is indexed by the multiset I_Fl of surviving difference factors.
"""

from gysin import build_plan, build_plan_unsimplified_flagA, flag, index_set_IFl, pushforward
from gysin.parsing import parse_class
from gysin.spaces import dimension

spec = flag("flA", (1, 2), 3)
print("space:", spec, " dim =", dimension(spec))

# The multiset I_Fl((1,2)) keeps a single factor (u1 - u2):
print("I_Fl((1,2))  =", index_set_IFl((1, 2)).pairs())
print("I_Fl((2,3))  =", index_set_IFl((2, 3)).pairs())

# A Weyl-symmetric class: symmetric in each block separately.
alpha = parse_class("z[1,1] * s[1,1](z2) + s[3](z2)", spec)

collapsed = build_plan(spec, alpha)
staged = build_plan_unsimplified_flagA(spec, alpha)
print("\ncollapsed residue order:", [str(v) for v in collapsed.residue_order])
print("staged residue order:   ", [str(v) for v in staged.residue_order])

print("\ncollapsed integrand:")
print("  ", collapsed.expr)

print("\nboth pipelines evaluate to the same polynomial:")
print("  collapsed:", pushforward(spec, alpha))
print("  staged:   ", pushforward(spec, alpha, staged=True))

# Isotropic flags work the same way, with doubled Euler factors and the
# isotropy-cone factors in the numerator.
iso = flag("flC", (1, 2), 2)
beta = parse_class("s[2](z2) * s[1](z1)^2", iso)
print("\n%s:  integral of s[2](z2)*s[1](z1)^2 = %s" % (iso, pushforward(iso, beta)))
