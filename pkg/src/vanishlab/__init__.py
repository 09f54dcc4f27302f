"""Exact tools for vanishing checks of constant-coefficient operator powers.

Sparse Laurent polynomials and truncated series over Q, differential
operator application, rational polytopes with LP separation certificates,
density searches, and one checker per proved case of the conjecture.
"""

from .diffops import DiffOp, VanishingProfile, apply, apply_monomial, apply_power, vanishing_profile
from .poly import LaurentPoly, TruncSeries, series_exp
from .polytopes import (
    RationalPolytope,
    SeparationCertificate,
    Witness,
    contains_point,
    difference_decomposition,
    minkowski_diff,
    moveaway_bound,
    newton_polytope,
    orthant_meet,
    scale_translate,
)

__all__ = [
    "DiffOp",
    "LaurentPoly",
    "RationalPolytope",
    "SeparationCertificate",
    "TruncSeries",
    "VanishingProfile",
    "Witness",
    "apply",
    "apply_monomial",
    "apply_power",
    "contains_point",
    "difference_decomposition",
    "minkowski_diff",
    "moveaway_bound",
    "newton_polytope",
    "orthant_meet",
    "scale_translate",
    "series_exp",
    "vanishing_profile",
]

__version__ = "0.1.0"
