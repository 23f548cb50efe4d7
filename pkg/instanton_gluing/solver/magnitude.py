"""Ecuaciones de magnitud en p y en q.

λ² + |y − p|² = λ/√s_p y λ² + |y − q|² = λ/√s_q. Restar ambas fija
y₀ = κ·λ con κ = (1/√s_q − 1/√s_p)/(4L); sumarlas deja la cuadrática
a·λ² − b·λ + c = 0 con a = 1 + κ², b = (1/√s_p + 1/√s_q)/2 y
c = L² + |y_I|².
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from instanton_gluing.core.exceptions import PreconditionError
from instanton_gluing.gauge.instanton import TwoPointConfig
from instanton_gluing.utils import translations as t

DOUBLE_ROOT_TOL = 1e-9

SMALL = "small"
LARGE = "large"
DOUBLE = "double"


@dataclass(frozen=True)
class MagnitudeRoot:
    """Raíz (y₀, λ) de las ecuaciones de magnitud.

    Atributos:
        y0: Coordenada real del centro
        lam: Escala λ
        branch: "small", "large" o "double"
        residual: Máximo residuo absoluto de las dos ecuaciones
    """

    y0: float
    lam: float
    branch: str
    residual: float

    def __iter__(self):
        return iter((self.y0, self.lam))


def _coefficients(cfg: TwoPointConfig, s_p: float, s_q: float) -> Tuple[float, float, float]:
    if not (s_p > 0 and s_q > 0):
        raise PreconditionError(t.MAGNITUDE_ERROR_SIZES.format(s_p=s_p, s_q=s_q))
    inv_p = 1.0 / np.sqrt(s_p)
    inv_q = 1.0 / np.sqrt(s_q)
    kappa = (inv_q - inv_p) / (4.0 * cfg.L)
    return kappa, 1.0 + kappa * kappa, 0.5 * (inv_p + inv_q)


def magnitude_residual(
    cfg: TwoPointConfig, s_p: float, s_q: float, y, lam: float
) -> float:
    """Máximo residuo de λ² + |y − x|² − λ/√s_x en x = p, q."""
    y = np.asarray(y, dtype=float)
    res_p = lam * lam + np.sum((y - cfg.p) ** 2) - lam / np.sqrt(s_p)
    res_q = lam * lam + np.sum((y - cfg.q) ** 2) - lam / np.sqrt(s_q)
    return float(max(abs(res_p), abs(res_q)))


def solve_magnitude(cfg: TwoPointConfig, s_p: float, s_q: float, y_imag) -> List[MagnitudeRoot]:
    """Resuelve las ecuaciones de magnitud para la parte imaginaria y_I del centro.

    Args:
        cfg: Configuración de dos puntos
        s_p: Tamaño objetivo en p (> 0)
        s_q: Tamaño objetivo en q (> 0)
        y_imag: Parte imaginaria y_I (3-vector)

    Returns:
        Lista con 0, 1 (raíz doble) o 2 raíces, primero la rama pequeña

    Raises:
        PreconditionError: Si s_p o s_q no son positivos
    """
    kappa, a, b = _coefficients(cfg, s_p, s_q)
    y_imag = np.asarray(y_imag, dtype=float)
    c = cfg.L**2 + float(y_imag @ y_imag)
    disc = b * b - 4.0 * a * c

    if abs(disc) <= DOUBLE_ROOT_TOL * b * b:
        lams = [(b / (2.0 * a), DOUBLE)]
    elif disc < 0:
        return []
    else:
        root = np.sqrt(disc)
        lams = [(2.0 * c / (b + root), SMALL), ((b + root) / (2.0 * a), LARGE)]

    roots = []
    for lam, branch in lams:
        y0 = kappa * lam
        y = np.concatenate([[y0], y_imag])
        roots.append(
            MagnitudeRoot(
                y0=y0,
                lam=lam,
                branch=branch,
                residual=magnitude_residual(cfg, s_p, s_q, y, lam),
            )
        )
    return roots


def small_root_batch(
    cfg: TwoPointConfig, s_p: float, s_q: float, y_imag
) -> Tuple[np.ndarray, np.ndarray]:
    """Rama pequeña vectorizada sobre y_I de forma (..., 3).

    Returns:
        Tupla (y₀, λ) con NaN donde no hay raíz real
    """
    kappa, a, b = _coefficients(cfg, s_p, s_q)
    y_imag = np.asarray(y_imag, dtype=float)
    c = cfg.L**2 + np.sum(y_imag * y_imag, axis=-1)
    disc = b * b - 4.0 * a * c
    with np.errstate(invalid="ignore"):
        lam = np.where(disc >= 0, 2.0 * c / (b + np.sqrt(np.maximum(disc, 0.0))), np.nan)
    return kappa * lam, lam


def branch_limit(cfg: TwoPointConfig, s_p: float, s_q: float) -> float:
    """Escala b/(2a) que separa la rama pequeña de la grande."""
    _, a, b = _coefficients(cfg, s_p, s_q)
    return b / (2.0 * a)


def admissible_radius(
    cfg: TwoPointConfig, s_p: float, s_q: float, K: float, alpha: float
) -> float:
    """Radio R tal que |y_I| ≤ R equivale a λ ≤ K·L^α en la rama pequeña.

    Con Λ = min(K·L^α, b/(2a)) se tiene R² = b·Λ − a·Λ² − L².

    Returns:
        R ≥ 0 (0 si ningún y_I es admisible)
    """
    _, a, b = _coefficients(cfg, s_p, s_q)
    cap = min(K * cfg.L**alpha, b / (2.0 * a))
    r2 = b * cap - a * cap * cap - cfg.L**2
    return float(np.sqrt(r2)) if r2 > 0 else 0.0


def uncovered_angle(cfg: TwoPointConfig, radius: float) -> float:
    """Ángulo de giro por debajo del cual ρ(g(y)) se alcanza una sola vez en |y_I| ≤ R."""
    if radius <= 0:
        return float(np.pi)
    return float(min(4.0 * np.arctan(cfg.L / radius), np.pi))
