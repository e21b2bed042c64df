"""Extended Poincare group toolkit (C++ core)."""

from ._core import (
    DecompositionError,
    ParseError,
    ad_matrix,
    affine_matrix,
    check,
    commutator,
    compose,
    dirac_boost,
    exp_ad,
    generator_names,
    inverse,
    jacobi_max_violation,
    lorentz_decompose,
    lorentz_matrix,
    oplus,
    structure_constants,
    theta_closed,
    theta_numeric,
    xl_decompose,
    xl_matrix,
)

__version__ = "0.1.0"
