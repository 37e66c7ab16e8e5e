"""Exact dimension formulas for Siegel cusp forms of principal congruence level."""

from .dimension import (
    AsymptoticReport,
    DimensionReport,
    asymptotics,
    c_scalar,
    c_vector,
    closed_form,
    closed_form_low_degree,
    closed_form_vector_n3,
    dim_closed_form,
    dim_scalar,
    dim_scalar_via_shintani,
    dim_vector,
    i_factor,
    index_principal,
)
from .errors import (
    InvalidRank,
    NonIntegerResult,
    OutOfProvenRange,
    OutOfRange,
    PoleOrZero,
    SiegelDimError,
    SingularElimination,
    TooManyRows,
)
from .partitions import WeightVector, branching_mult, branching_support, conjugate, weyl_dim
from .rational_core import HalfInteger, bernoulli, gamma_ratio, zeta_negative_odd
from .shintani import level_scale, shintani_special
from .symfunc import SymmetricPolynomial, TransitionRow, c_factor, schur, schur_to_spherical, spherical

__version__ = "0.1.0"
