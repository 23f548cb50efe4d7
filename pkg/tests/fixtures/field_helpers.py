"""Matrices y campos de referencia con objetivos conocidos."""

import numpy as np

from instanton_gluing.data.background import BackgroundField
from instanton_gluing.geometry.rotations import Rotation

DIAG_321 = np.diag([3.0, 2.0, 1.0])

# P + s·I es de rango uno con s = σ₂(P) = 1
REFERENCE_P = np.outer([4.0, 2.0, 0.0], [1.0, 0.0, 0.0]) - np.eye(3)

# n = (±√(3/8), 0, √(5/8)) para diag(3, 2, 1)
DIAG_321_SOLUTIONS = [
    2.0 * np.outer(n, n) - np.eye(3)
    for n in (
        np.array([np.sqrt(3 / 8), 0.0, np.sqrt(5 / 8)]),
        np.array([-np.sqrt(3 / 8), 0.0, np.sqrt(5 / 8)]),
    )
]


def rotated(matrix, left: Rotation, right: Rotation) -> np.ndarray:
    """left·matrix·rightᵀ."""
    return left.matrix @ np.asarray(matrix, dtype=float) @ right.matrix.T


def diag_field(diagonal=(3.0, 2.0, 1.0), seed: int = 0) -> BackgroundField:
    """Campo constante diag(...): objetivos idénticos en p y en q."""
    return BackgroundField.constant_field(np.diag(diagonal), seed=seed)


def tilted_field(seed: int = 0, slope: float = 0.2) -> BackgroundField:
    """diag(3, 2, 1) más un término lineal pequeño en x₀.

    F₀(p) ≠ F₀(q), de modo que s_p ≠ s_q y la solución sale del plano medio.
    """
    linear = np.zeros((3, 3, 4))
    linear[:, :, 0] = slope * np.array([[1.0, 0.3, 0.0], [0.3, -0.5, 0.2], [0.0, 0.2, 0.4]])
    return BackgroundField(
        seed=seed,
        sub_seed=0,
        degree=1,
        amplitude=3.0,
        constant=np.diag([3.0, 2.0, 1.0]),
        linear=linear,
        quadratic=np.zeros((3, 3, 4, 4)),
    )
