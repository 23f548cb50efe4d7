"""Álgebra lineal 3×3 y rotaciones SO(3)/SU(2)."""

from instanton_gluing.geometry.linalg3 import (
    Stratum,
    StratumTag,
    SvdTriple,
    classify_stratum,
    cofactor,
    sigma2,
    svd,
    svd_signed,
)
from instanton_gluing.geometry.rotations import (
    Rotation,
    rho,
    rho_inverse_pair,
    rotation_distance,
    sample_rotation,
)

__all__ = [
    "Stratum",
    "StratumTag",
    "SvdTriple",
    "classify_stratum",
    "cofactor",
    "sigma2",
    "svd",
    "svd_signed",
    "Rotation",
    "rho",
    "rho_inverse_pair",
    "rotation_distance",
    "sample_rotation",
]
