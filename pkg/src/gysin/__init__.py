"""Exact equivariant push-forwards for classical homogeneous spaces.

The residue pipeline (spaces + residue) computes Gysin push-forwards to
a point as iterated residues at infinity over exact rationals; the
localization oracle (oracle) recomputes them as fixed-point sums.  The
two agree exactly, which is the package's master correctness property.
"""

from .errors import (
    GysinError,
    NegativeMultiplicity,
    NotDivisible,
    NotNormalCrossing,
    NotPolynomial,
    NotSimplePole,
    NotWeylSymmetric,
    ParseError,
    ResidualVariable,
    UnknownVariable,
)
from .polynomial import (
    Polynomial,
    VarId,
    exact_div,
    is_symmetric,
    make_table,
    poly_add,
    poly_mul,
    poly_substitute,
    tvar,
    uvar,
    vandermonde,
    vvar,
    zvar,
)
from .residue import (
    LinearFactor,
    RationalExpr,
    check_order_independence,
    residue_at_infinity,
    simplify_simple_poles,
)
from .schur import (
    Partition,
    complete_homogeneous,
    decompose_two_mu_plus_rho,
    partitions,
    schur_poly,
    staircase,
)
from .spaces import (
    IndexMultiset,
    IntegrandPlan,
    SpaceSpec,
    build_plan,
    build_plan_unsimplified_flagA,
    dimension,
    flag,
    fundamental_class_lift,
    grassmannian,
    index_set_IFl,
    lagrangian_grassmannian,
    orthogonal_grassmannian_even,
    orthogonal_grassmannian_odd,
    pushforward,
    weyl_order,
)
from .oracle import (
    FixedPoint,
    abbv_pushforward,
    fixed_points,
    localization_value,
    point_count,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
