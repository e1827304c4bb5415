"""Arithmetic in the three-dimensional commutative algebra T ~ C x R.

Elements are ``Ternion`` values over the basis {1, u, v}; see ``core`` for the
multiplication table, ``structure`` for the ideal decomposition, ``seminorm``
for the absolute value, ``sigma`` for the hyperbolic subplane and ``expr`` /
``cli`` for the expression calculator.
"""
from .core import (
    DELTA,
    J,
    ONE,
    U,
    V,
    ZERO,
    NonFiniteError,
    QuadraticPair,
    RegularRep,
    Ternion,
    add,
    conj,
    conj_product,
    mul,
    neg,
    quad_forms,
    regular_rep,
    scale,
    shifted_coeffs,
    sub,
)
from .seminorm import a_minus_b, abs_value, distance, quotient_distance
from .sigma import (
    HyperbolicNumber,
    NotInSigma,
    delta_orthogonality_check,
    from_sigma_coords,
    hyper_mul,
    in_sigma,
    to_sigma_coords,
)
from .structure import (
    D_GENERATOR,
    G_BASIS,
    I_G,
    ONE_D,
    ONE_G,
    Kind,
    NotInvertible,
    SplitForm,
    annihilates,
    classify,
    from_split,
    in_d,
    in_g,
    invert,
    invertible_decomposition,
    proj_d,
    proj_g,
    reduce_mod_d,
    split,
)

__version__ = "0.1.0"
