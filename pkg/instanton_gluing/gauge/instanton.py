"""Curvatura del instantón estándar de carga uno y mapa del ángulo de pegado.

Los puntos de R⁴ se identifican con cuaterniones x₀ + x₁·i + x₂·j + x₃·k
y se representan como arrays de forma (4,) o (..., 4).
"""

from dataclasses import dataclass
from typing import List

import numpy as np

from instanton_gluing.core.exceptions import GaugeSingularityError, PreconditionError
from instanton_gluing.geometry.rotations import (
    Rotation,
    quat_conj,
    quat_mul,
    rho_matrix,
)
from instanton_gluing.utils import translations as t

CENTER_TOL = 1e-12
POINT_TOL = 1e-12
_IDENTITY_TOL = 1e-14


def as_point4(x) -> np.ndarray:
    """Convierte la entrada en un punto de R⁴ finito."""
    arr = np.array(x, dtype=float)
    if arr.shape != (4,) or not np.all(np.isfinite(arr)):
        raise PreconditionError(t.INSTANTON_ERROR_POINT.format(point=x))
    return arr


@dataclass(frozen=True)
class TwoPointConfig:
    """Puntos p = (L, 0, 0, 0) y q = (−L, 0, 0, 0)."""

    L: float

    def __post_init__(self):
        if not (np.isfinite(self.L) and self.L > 0):
            raise PreconditionError(t.INSTANTON_ERROR_L.format(L=self.L))

    @property
    def p(self) -> np.ndarray:
        return np.array([self.L, 0.0, 0.0, 0.0])

    @property
    def q(self) -> np.ndarray:
        return np.array([-self.L, 0.0, 0.0, 0.0])


@dataclass(frozen=True, eq=False)
class StdInstanton:
    """Instantón estándar con centro y, escala λ y ángulo de pegado m."""

    center: np.ndarray
    scale: float
    gluing_angle: Rotation

    def __post_init__(self):
        object.__setattr__(self, "center", as_point4(self.center))
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise PreconditionError(t.INSTANTON_ERROR_SCALE.format(scale=self.scale))


def magnitude(inst: StdInstanton, x) -> float:
    """Factor escalar λ²/(λ² + |x − y|²)².

    Args:
        inst: Instantón estándar
        x: Punto de R⁴

    Returns:
        Magnitud de la curvatura; vale λ⁻² en el centro
    """
    d2 = float(np.sum((np.asarray(x, dtype=float) - inst.center) ** 2))
    lam2 = inst.scale * inst.scale
    return lam2 / (lam2 + d2) ** 2


def f_std(inst: StdInstanton, x) -> np.ndarray:
    """Matriz de curvatura en el gauge radial exterior.

    Devuelve λ²/(λ² + |x−y|²)² · m⁻¹·ρ((x−y)/|x−y|).

    Args:
        inst: Instantón estándar
        x: Punto de R⁴ distinto del centro

    Returns:
        Matriz 3×3, múltiplo positivo de una rotación

    Raises:
        GaugeSingularityError: Si |x − y| < 1e-12·λ
    """
    d = as_point4(x) - inst.center
    dist = float(np.linalg.norm(d))
    if dist < CENTER_TOL * inst.scale:
        raise GaugeSingularityError(t.INSTANTON_ERROR_AT_CENTER.format(dist=dist))
    return magnitude(inst, x) * (inst.gluing_angle.matrix.T @ rho_matrix(d / dist))


def f_std_regular(inst: StdInstanton, x) -> np.ndarray:
    """Curvatura en el gauge regular: λ²/(λ² + |x−y|²)² por la identidad.

    Solo sirve como referencia del gauge exterior, del que difiere por la
    conjugación con ρ((x−y)/|x−y|) y el ángulo de pegado.
    """
    return magnitude(inst, as_point4(x)) * np.eye(3)


def g_map_batch(L: float, y) -> np.ndarray:
    """Versión vectorizada de g_map sobre puntos de forma (..., 4).

    No comprueba la singularidad en p ni en q.
    """
    y = np.asarray(y, dtype=float)
    shift = np.zeros(4)
    shift[0] = L
    a = y - shift
    b = y + shift
    num = quat_mul(quat_conj(a), b)
    den = np.linalg.norm(a, axis=-1) * np.linalg.norm(b, axis=-1)
    return num / den[..., None]


def g_map(cfg: TwoPointConfig, y) -> np.ndarray:
    """Ángulo de pegado g(y) = conj(y − p)·(y − q)/|(y − p)(y − q)|.

    Args:
        cfg: Configuración de dos puntos
        y: Centro del instantón

    Returns:
        Cuaternión unitario

    Raises:
        GaugeSingularityError: Si y está a menos de 1e-12 de p o de q
    """
    y = as_point4(y)
    if min(np.linalg.norm(y - cfg.p), np.linalg.norm(y - cfg.q)) < POINT_TOL:
        raise GaugeSingularityError(t.INSTANTON_ERROR_AT_POINT.format(point=y.tolist()))
    return g_map_batch(cfg.L, y)


def g_small_expansion(cfg: TwoPointConfig, y_imag) -> np.ndarray:
    """Desarrollo −1 − 2·y_I/L de g en el plano medio para |y_I| ≪ L."""
    y_imag = np.asarray(y_imag, dtype=float)
    return np.concatenate([[-1.0], -2.0 * y_imag / cfg.L])


def g_large_expansion(cfg: TwoPointConfig, y_imag) -> np.ndarray:
    """Desarrollo 1 − 2L·y_I/|y_I|² de g en el plano medio para |y_I| ≫ L."""
    y_imag = np.asarray(y_imag, dtype=float)
    return np.concatenate([[1.0], -2.0 * cfg.L * y_imag / (y_imag @ y_imag)])


def g_preimages(cfg: TwoPointConfig, h) -> List[np.ndarray]:
    """Preimágenes de h por g en el plano medio y₀ = 0.

    Allí g(y) = −w² con w = (L + y_I)/|L + y_I|, así que para
    h = cos β + sin β·n̂ con β ∈ (0, π] la única preimagen es
    y_I = −L·cot(β/2)·n̂. El valor h = +1 no se alcanza.

    Args:
        cfg: Configuración de dos puntos
        h: Cuaternión unitario

    Returns:
        Lista con cero o una parte imaginaria y_I (3-vector)
    """
    h = np.asarray(h, dtype=float)
    h = h / np.linalg.norm(h)
    vec_norm = float(np.linalg.norm(h[1:]))
    if vec_norm <= _IDENTITY_TOL:
        return [] if h[0] > 0 else [np.zeros(3)]
    beta = np.arctan2(vec_norm, h[0])
    axis = h[1:] / vec_norm
    return [-cfg.L / np.tan(0.5 * beta) * axis]
