"""Aritmética de matrices reales 3×3.

Este módulo proporciona la descomposición en valores singulares por
Jacobi unilateral, su forma con signo (factores en SO(3)) y la
estratificación por valores singulares usada por el lema de rango uno.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from instanton_gluing.core.exceptions import PreconditionError
from instanton_gluing.utils import translations as t

MAX_SWEEPS = 10
_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (1, 2))
_ORTH_SKIP = 1e-15
_RANK_GUARD = 64.0 * np.finfo(float).eps

DEFAULT_REL_TOL = 1e-8
DEFAULT_ABS_TOL = 1e-14


def as_mat3(m) -> np.ndarray:
    """Convierte la entrada en una matriz 3×3 de float.

    Args:
        m: Cualquier objeto convertible por numpy

    Returns:
        Copia float64 de forma (3, 3)

    Raises:
        PreconditionError: Si la forma no es 3×3 o hay entradas no finitas
    """
    arr = np.array(m, dtype=float)
    if arr.shape != (3, 3):
        raise PreconditionError(t.LINALG_ERROR_SHAPE.format(shape=arr.shape))
    if not np.all(np.isfinite(arr)):
        raise PreconditionError(t.LINALG_ERROR_NOT_FINITE)
    return arr


@dataclass(frozen=True)
class SvdTriple:
    """Factores u·Σ·vᵀ de una matriz 3×3.

    Atributos:
        u: Matriz ortogonal izquierda
        sigma: Valores singulares σ₁ ≥ σ₂ ≥ σ₃ ≥ 0
        v: Matriz ortogonal derecha
        det_sign: Signo del determinante de la entrada (±1)
        signed: Si es True, det(u) = det(v) = +1 y el factor central
            es diag(σ₁, σ₂, det_sign·σ₃)
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    det_sign: int
    signed: bool = False

    @property
    def middle(self) -> np.ndarray:
        """Diagonal del factor central."""
        if self.signed:
            return np.array([self.sigma[0], self.sigma[1], self.det_sign * self.sigma[2]])
        return self.sigma.copy()

    def reconstruct(self) -> np.ndarray:
        """Devuelve u·diag(middle)·vᵀ."""
        return (self.u * self.middle) @ self.v.T


def _complement_axis(u0: np.ndarray) -> np.ndarray:
    """Vector unitario ortogonal a u0, partiendo del eje menos alineado."""
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(u0)))] = 1.0
    w = axis - (axis @ u0) * u0
    return w / np.linalg.norm(w)


def _jacobi_sweeps(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Ortogonaliza las columnas de m por rotaciones de Jacobi.

    Returns:
        Tupla (W, V) con W = m·V de columnas mutuamente ortogonales
    """
    w = m.copy()
    v = np.eye(3)
    for _ in range(MAX_SWEEPS):
        rotated = False
        for i, j in _PAIRS:
            alpha = w[:, i] @ w[:, i]
            beta = w[:, j] @ w[:, j]
            gamma = w[:, i] @ w[:, j]
            if abs(gamma) <= _ORTH_SKIP * np.sqrt(alpha * beta):
                continue
            rotated = True
            zeta = (beta - alpha) / (2.0 * gamma)
            tan = np.copysign(1.0, zeta) / (abs(zeta) + np.hypot(1.0, zeta))
            cos = 1.0 / np.sqrt(1.0 + tan * tan)
            sin = cos * tan

            wi = w[:, i].copy()
            w[:, i] = cos * wi - sin * w[:, j]
            w[:, j] = sin * wi + cos * w[:, j]

            vi = v[:, i].copy()
            v[:, i] = cos * vi - sin * v[:, j]
            v[:, j] = sin * vi + cos * v[:, j]
        if not rotated:
            break
    return w, v


def svd(m) -> SvdTriple:
    """Descomposición en valores singulares de una matriz 3×3.

    Los valores singulares salen en orden descendente. Entre valores
    iguales, las columnas de v se ordenan lexicográficamente de mayor a
    menor, de modo que svd(I) devuelve u = v = I.

    Args:
        m: Matriz 3×3 finita

    Returns:
        SvdTriple con u, v ortogonales y det_sign = signo de det(m)
    """
    m = as_mat3(m)
    w, v = _jacobi_sweeps(m)
    sigma = np.linalg.norm(w, axis=0)

    order = sorted(range(3), key=lambda k: (-sigma[k], -v[0, k], -v[1, k], -v[2, k]))
    w = w[:, order]
    v = v[:, order]
    sigma = sigma[order]

    if sigma[0] == 0.0:
        u = np.eye(3)
    else:
        u0 = w[:, 0] / sigma[0]
        if sigma[1] > _RANK_GUARD * sigma[0]:
            u1 = w[:, 1] - (u0 @ w[:, 1]) * u0
            u1 /= np.linalg.norm(u1)
        else:
            u1 = _complement_axis(u0)
        u2 = np.cross(u0, u1)
        if u2 @ w[:, 2] < 0.0:
            u2 = -u2
        u = np.column_stack([u0, u1, u2])

    det_sign = 1 if np.linalg.det(u) * np.linalg.det(v) > 0 else -1
    return SvdTriple(u=u, sigma=sigma, v=v, det_sign=det_sign)


def svd_signed(m) -> SvdTriple:
    """SVD con factores de rotación.

    Invierte la tercera columna de u o de v cuando su determinante es
    negativo, de modo que la conjugación por SO(3) preserve SO(3).

    Args:
        m: Matriz 3×3 finita

    Returns:
        SvdTriple con signed=True
    """
    base = svd(m)
    u = base.u.copy()
    v = base.v.copy()
    if np.linalg.det(u) < 0:
        u[:, 2] = -u[:, 2]
    if np.linalg.det(v) < 0:
        v[:, 2] = -v[:, 2]
    return SvdTriple(u=u, sigma=base.sigma, v=v, det_sign=base.det_sign, signed=True)


def sigma2(m) -> float:
    """Valor singular central de m."""
    return float(svd(m).sigma[1])


def cofactor(m) -> np.ndarray:
    """Matriz de cofactores (los nueve menores 2×2 con signo).

    Se anula exactamente cuando m tiene rango ≤ 1.
    """
    m = np.asarray(m, dtype=float)
    return np.stack([np.cross(m[1], m[2]), np.cross(m[2], m[0]), np.cross(m[0], m[1])])


class StratumTag(Enum):
    """Estratos por coincidencias entre valores singulares."""

    GENERIC = "Generic"
    SIGMA3_ZERO = "Sigma3Zero"
    TOP_PAIR_EQUAL = "TopPairEqual"
    BOTTOM_PAIR_EQUAL = "BottomPairEqual"
    RANK_LE_ONE = "RankLeOne"
    SCALAR_ROTATION = "ScalarRotation"
    ZERO = "Zero"


@dataclass(frozen=True)
class Stratum:
    """Resultado de classify_stratum con las tolerancias usadas."""

    tag: StratumTag
    sigma: Tuple[float, float, float]
    rel_tol: float
    abs_tol: float

    @property
    def is_generic(self) -> bool:
        return self.tag is StratumTag.GENERIC


def classify_stratum(
    m, rel_tol: float = DEFAULT_REL_TOL, abs_tol: float = DEFAULT_ABS_TOL
) -> Stratum:
    """Clasifica m en el estrato más degenerado que le corresponde.

    Las comparaciones son relativas a σ₁; la etiqueta Zero usa abs_tol.

    Args:
        m: Matriz 3×3 finita
        rel_tol: Tolerancia relativa en el intervalo abierto (0, 0.5)
        abs_tol: Umbral absoluto para σ₁

    Returns:
        Stratum con la etiqueta y los valores singulares

    Raises:
        PreconditionError: Si rel_tol está fuera de (0, 0.5)
    """
    if not 0.0 < rel_tol < 0.5:
        raise PreconditionError(t.CONFIG_ERROR_REL_TOL_RANGE.format(value=rel_tol))

    s1, s2, s3 = (float(x) for x in svd(m).sigma)
    gap = rel_tol * s1

    if s1 <= abs_tol:
        tag = StratumTag.ZERO
    elif s1 - s3 <= gap:
        tag = StratumTag.SCALAR_ROTATION
    elif s2 <= gap:
        tag = StratumTag.RANK_LE_ONE
    elif s1 - s2 <= gap:
        tag = StratumTag.TOP_PAIR_EQUAL
    elif s2 - s3 <= gap:
        tag = StratumTag.BOTTOM_PAIR_EQUAL
    elif s3 <= gap:
        tag = StratumTag.SIGMA3_ZERO
    else:
        tag = StratumTag.GENERIC

    return Stratum(tag=tag, sigma=(s1, s2, s3), rel_tol=rel_tol, abs_tol=abs_tol)
