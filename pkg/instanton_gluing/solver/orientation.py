"""Signo de orientación de una solución de pegado.

El signo es el del determinante del jacobiano 8×8 de
Φ(y, λ, m) = (carta del defecto en p, carta del defecto en q) respecto
a la carta (δy/L ∈ R⁴, δ log λ, ω ∈ R³) con m = m*·R(ω), calculado por
diferencias centradas. La convención global se fija de modo que la
configuración de referencia (M_i(p) = M_j(q) = I, y = 0, m = I) dé +1.
"""

from functools import lru_cache
from typing import Callable, Tuple, Union

import numpy as np

from instanton_gluing.core.exceptions import NearDegenerateError
from instanton_gluing.data.background import BackgroundField
from instanton_gluing.gauge.instanton import TwoPointConfig
from instanton_gluing.geometry.rotations import Rotation, rotation_from_vector
from instanton_gluing.solver.defect import DefectChart
from instanton_gluing.solver.records import GluingData, SolutionRecord, glued_curvatures
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

DEFAULT_FD_STEP = 1e-5
TRANSVERSALITY_TOL = 1e-6
CHART_DIM = 8

REFERENCE_L = 0.1
REFERENCE_SIZE = 1.0
REFERENCE_COLUMN = (4.0, 2.0, 0.0)
REFERENCE_ROW = (1.0, 0.0, 0.0)

CONVENTION = {
    "domain": "(dy/L in R^4, dlog(lambda), omega in R^3), m = m* . R(omega)",
    "target": "(U_perp^T F_p V_perp, U_perp^T F_q V_perp), row-major 2x2 blocks",
    "reference": "constant field w z^T - s I, L = 0.1, y = 0, m = I, sign fixed to +1",
}


def chart_map(
    background: BackgroundField, cfg: TwoPointConfig, gluing: GluingData
) -> Callable[[np.ndarray], np.ndarray]:
    """Devuelve θ ↦ Φ(θ) con las cartas ancladas en la solución."""
    base_p, base_q = glued_curvatures(background, cfg, gluing)
    chart_p = DefectChart.at(base_p)
    chart_q = DefectChart.at(base_q)

    def phi(theta: np.ndarray) -> np.ndarray:
        moved = GluingData(
            y=gluing.y + cfg.L * theta[:4],
            lam=gluing.lam * float(np.exp(theta[4])),
            m=gluing.m @ rotation_from_vector(theta[5:]),
        )
        f_p, f_q = glued_curvatures(background, cfg, moved)
        return np.concatenate([chart_p.evaluate(f_p), chart_q.evaluate(f_q)])

    return phi


def chart_jacobian(
    background: BackgroundField,
    cfg: TwoPointConfig,
    gluing: GluingData,
    fd_step: float = DEFAULT_FD_STEP,
) -> np.ndarray:
    """Jacobiano 8×8 de Φ por diferencias centradas."""
    phi = chart_map(background, cfg, gluing)
    jac = np.empty((CHART_DIM, CHART_DIM))
    for k in range(CHART_DIM):
        step = np.zeros(CHART_DIM)
        step[k] = fd_step
        jac[:, k] = (phi(step) - phi(-step)) / (2.0 * fd_step)
    return jac


def _raw_sign(jac: np.ndarray) -> int:
    """Signo del determinante con la comprobación de transversalidad."""
    sign, logdet = np.linalg.slogdet(jac)
    row_norms = np.linalg.norm(jac, axis=1)
    if sign == 0 or np.any(row_norms == 0):
        raise NearDegenerateError(t.ORIENTATION_ERROR_SINGULAR)
    log_ratio = logdet - float(np.sum(np.log(row_norms)))
    if log_ratio < np.log(TRANSVERSALITY_TOL):
        raise NearDegenerateError(
            t.ORIENTATION_ERROR_NEAR_DEGENERATE.format(ratio=float(np.exp(log_ratio)))
        )
    return int(sign)


def reference_configuration() -> Tuple[BackgroundField, TwoPointConfig, GluingData]:
    """Configuración de referencia con M_i(p) = M_j(q) = I, y = 0 y m = I.

    El campo constante P = w·zᵀ − s·I cumple que P + s·I tiene rango uno
    y σ₂(P) = s, así que I es una solución del lema en p y en q.
    """
    s = REFERENCE_SIZE
    matrix = np.outer(REFERENCE_COLUMN, REFERENCE_ROW) - s * np.eye(3)
    background = BackgroundField.constant_field(matrix)
    cfg = TwoPointConfig(REFERENCE_L)
    lam = (1.0 / np.sqrt(s) - np.sqrt(1.0 / s - 4.0 * REFERENCE_L**2)) / 2.0
    gluing = GluingData(y=np.zeros(4), lam=float(lam), m=Rotation.identity())
    return background, cfg, gluing


@lru_cache(maxsize=8)
def reference_sign(fd_step: float = DEFAULT_FD_STEP) -> int:
    """Signo bruto del jacobiano en la configuración de referencia."""
    background, cfg, gluing = reference_configuration()
    sign = _raw_sign(chart_jacobian(background, cfg, gluing, fd_step))
    Logger.debug(t.ORIENTATION_DEBUG_REFERENCE.format(sign=sign))
    return sign


def orientation_sign(
    background: BackgroundField,
    cfg: TwoPointConfig,
    rec: Union[SolutionRecord, GluingData],
    fd_step: float = DEFAULT_FD_STEP,
) -> int:
    """Signo de orientación (±1) de una solución certificada.

    Args:
        background: Campo de fondo
        cfg: Configuración de dos puntos
        rec: Registro de solución o sus datos de pegado
        fd_step: Paso de las diferencias centradas

    Returns:
        +1 o -1 con la convención de la configuración de referencia

    Raises:
        NearDegenerateError: Si |det| < 1e-6 veces el producto de normas de fila
    """
    gluing = rec.gluing if isinstance(rec, SolutionRecord) else rec
    raw = _raw_sign(chart_jacobian(background, cfg, gluing, fd_step))
    return raw * reference_sign(fd_step)
