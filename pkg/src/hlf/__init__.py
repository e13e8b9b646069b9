"""Nets, admissible seminorms and self-duality for higher local fields of mixed type.

Fields are F = K{{t_1}}...{{t_r}}((t_{r+1}))...((t_{n-1})) with K = Q_p.
Elements have finite support and exact rational coefficients; O-submodules
are described by piecewise-affine nets Z^(n-1) -> Z u {+-inf}.
"""

from .duality import CSeminorm, FunctionalHandle, PolarCheck, c_seminorm, gamma, pair, polar_membership, projection, reconstruct
from .elements import (
    CoefficientRule,
    LaurentElement,
    SeriesGenerator,
    add,
    element_in_net,
    is_prime,
    mul,
    partial_sum,
    scalar_mul,
    val_p,
)
from .errors import *  # noqa: F401,F403
from .foundations import (
    INF,
    NEG_INF,
    Order,
    SliceSpec,
    extint_add,
    extint_neg,
    extint_sub,
    invlex_compare,
    is_finite,
    negate,
    slice_contains,
)
from .nets import *  # noqa: F401,F403
from .topology import (
    RhoNet,
    archimedean_seminorm,
    bounded_sup_difference,
    convergence_check,
    format_qexp,
    gauge_eval,
    product_seminorm,
    rho_admissible,
    seminorm_eval,
    sup_difference_argmax,
)

__version__ = "0.1.0"
