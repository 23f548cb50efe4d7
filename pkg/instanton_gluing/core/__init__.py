"""Módulo central de Instanton Gluing."""

from instanton_gluing.core.config import LemmaConfig, SolverConfig
from instanton_gluing.core.exceptions import (
    DegenerateTargetError,
    GaugeSingularityError,
    GenericityError,
    InstantonGluingError,
    NearDegenerateError,
    OracleInconclusiveError,
    PreconditionError,
    RotationError,
)

__all__ = [
    "LemmaConfig",
    "SolverConfig",
    "InstantonGluingError",
    "PreconditionError",
    "RotationError",
    "GaugeSingularityError",
    "DegenerateTargetError",
    "OracleInconclusiveError",
    "GenericityError",
    "NearDegenerateError",
]
