"""
Schur classes on the Lagrangian Grassmannian
============================================

The push-forward of s_lambda over LG(n) vanishes unless
lambda = 2*mu + (n, n-1, ..., 1), in which case it equals
s_mu(t[1]^2, ..., t[n]^2).  The same table is available from the command
line as ``pushforward --table pr:n,maxweight``.
"""

from gysin import (
    decompose_two_mu_plus_rho,
    lagrangian_grassmannian,
    partitions,
    pushforward,
    schur_poly,
    staircase,
    zvar,
)

n = 2
spec = lagrangian_grassmannian(n)
zs = [zvar(1, i + 1) for i in range(n)]

print("lambda      mu       integral over LG(%d)" % n)
for weight in range(8):
    for lam in partitions(weight, n):
        mu = decompose_two_mu_plus_rho(lam, n)
        value = pushforward(spec, schur_poly(lam, zs))
        print(
            "%-10s  %-7s  %s"
            % (lam, mu if mu is not None else "-", value)
        )

# The staircase itself is the class of a point:
rho = staircase(n)
print("\npoint class s%s integrates to %s" % (rho, pushforward(spec, schur_poly(rho, zs))))
