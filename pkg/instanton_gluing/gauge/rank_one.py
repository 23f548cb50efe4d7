"""Lema de rango uno sobre SO(3).

Para P con valores singulares distintos existen exactamente dos pares
(s, M) ∈ (0, ∞) × SO(3) con P + s·M de rango uno, y s = σ₂(P). Este
módulo da la forma cerrada con certificado en tiempo de ejecución y un
oráculo de fuerza bruta multi-arranque independiente.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import least_squares

from instanton_gluing.core.config import LemmaConfig
from instanton_gluing.core.exceptions import OracleInconclusiveError, PreconditionError
from instanton_gluing.geometry.linalg3 import (
    Stratum,
    StratumTag,
    as_mat3,
    classify_stratum,
    cofactor,
    svd,
    svd_signed,
)
from instanton_gluing.geometry.rotations import (
    Rotation,
    rho_matrix,
    rotation_distance,
    rotation_from_vector,
    sample_unit_quaternion,
)
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

INCONCLUSIVE_MIN_STARTS = 1000

_DOUBLE_ROOT_TAGS = (StratumTag.TOP_PAIR_EQUAL, StratumTag.BOTTOM_PAIR_EQUAL)
_TWO_ROOT_TAGS = (StratumTag.GENERIC, StratumTag.SIGMA3_ZERO)


class LemmaKind(Enum):
    """Tipos de resultado del lema."""

    TWO_DISTINCT = "TwoDistinct"
    DOUBLE_ROOT = "DoubleRoot"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class RankOnePair:
    """Par (s, M) con P + s·M de rango uno.

    Atributos:
        s: Tamaño, igual a σ₂(P)
        m: Rotación M
        residual: σ₂(P + s·M), el defecto de rango uno
        branch: Signo de n₁ en coordenadas reducidas (+1 o -1); 0 en el oráculo
    """

    s: float
    m: Rotation
    residual: float
    branch: int = 0


@dataclass(frozen=True)
class LemmaOutcome:
    """Resultado etiquetado de solve_rank_one."""

    kind: LemmaKind
    pairs: List[RankOnePair] = field(default_factory=list)
    stratum: Optional[Stratum] = None


def _reduced_axis_square(sigma: Sequence[float], det_sign: int) -> float:
    """n₁² de la forma cerrada, recortado a [0, 1]."""
    s1, s2, s3 = (float(x) for x in sigma)
    c = det_sign * s3
    a = (s1 - s2) * (s2 + c) / (2.0 * s2 * (s1 - c))
    return min(max(a, 0.0), 1.0)


def _reduced_rotation(a: float, branch: int) -> Rotation:
    """M' = 2nnᵀ − I con n = (branch·√a, 0, √(1−a))."""
    n = np.array([branch * np.sqrt(a), 0.0, np.sqrt(1.0 - a)])
    return Rotation(2.0 * np.outer(n, n) - np.eye(3))


def solve_rank_one_reduced(sigma: Sequence[float], det_sign: int) -> List[Rotation]:
    """Forma cerrada en coordenadas reducidas P ≡ diag(σ₁, σ₂, det_sign·σ₃).

    Args:
        sigma: Valores singulares con σ₁ > σ₂ > σ₃ ≥ 0
        det_sign: Signo del determinante (±1)

    Returns:
        Las dos rotaciones π M' = 2nnᵀ − I, primero la de n₁ ≥ 0

    Raises:
        PreconditionError: Si los valores singulares no están estrictamente ordenados
    """
    s1, s2, s3 = (float(x) for x in sigma)
    if not (s1 > s2 > s3 >= 0.0) or det_sign not in (1, -1):
        raise PreconditionError(t.LEMMA_ERROR_NOT_SORTED.format(sigma=(s1, s2, s3)))
    a = _reduced_axis_square((s1, s2, s3), det_sign)
    return [_reduced_rotation(a, 1), _reduced_rotation(a, -1)]


def rank_one_residual(p: np.ndarray, s: float, m: Rotation) -> Tuple[float, float]:
    """Devuelve (σ₁, σ₂) de P + s·M."""
    sigma = svd(p + s * m.matrix).sigma
    return float(sigma[0]), float(sigma[1])


def _certified_pair(
    p: np.ndarray,
    s: float,
    m: Rotation,
    branch: int,
    stratum: Stratum,
    residual_tol: float,
) -> Optional[RankOnePair]:
    """Comprueba el certificado de rango exactamente uno."""
    s1_p, s2_p, _ = stratum.sigma
    top, residual = rank_one_residual(p, s, m)
    if residual <= residual_tol * s1_p and top >= 0.5 * (s1_p - s2_p):
        return RankOnePair(s=s, m=m, residual=residual, branch=branch)
    Logger.warning(
        t.LEMMA_WARNING_UNCERTIFIED.format(residual=residual, top=top, tag=stratum.tag.value)
    )
    return None


def solve_rank_one(
    p,
    rel_tol: float = 1e-8,
    residual_tol: Optional[float] = None,
) -> LemmaOutcome:
    """Resuelve el lema de rango uno para P.

    Para P genérica devuelve dos pares con s = σ₂(P). Si coinciden los dos
    valores superiores o los dos inferiores (con valor común no nulo)
    devuelve una raíz doble. El resto de estratos da Degenerate.

    Args:
        p: Matriz 3×3 finita
        rel_tol: Tolerancia de estratificación en (0, 0.5)
        residual_tol: Cota relativa del certificado; por defecto la de LemmaConfig

    Returns:
        LemmaOutcome etiquetado
    """
    p = as_mat3(p)
    if residual_tol is None:
        residual_tol = LemmaConfig.default().residual_tol
    stratum = classify_stratum(p, rel_tol)

    if stratum.tag not in _TWO_ROOT_TAGS + _DOUBLE_ROOT_TAGS:
        Logger.debug(t.LEMMA_DEBUG_DEGENERATE.format(tag=stratum.tag.value))
        return LemmaOutcome(kind=LemmaKind.DEGENERATE, stratum=stratum)

    factors = svd_signed(p)
    s = float(factors.sigma[1])
    a = _reduced_axis_square(factors.sigma, factors.det_sign)
    branches = (1, -1) if stratum.tag in _TWO_ROOT_TAGS else (1,)

    pairs = []
    for branch in branches:
        m = Rotation(factors.u @ _reduced_rotation(a, branch).matrix @ factors.v.T)
        pair = _certified_pair(p, s, m, branch, stratum, residual_tol)
        if pair is None:
            return LemmaOutcome(kind=LemmaKind.DEGENERATE, stratum=stratum)
        pairs.append(pair)

    kind = LemmaKind.TWO_DISTINCT if len(pairs) == 2 else LemmaKind.DOUBLE_ROOT
    return LemmaOutcome(kind=kind, pairs=pairs, stratum=stratum)


def dedupe_rotations(
    pairs: Sequence[RankOnePair], angle_tol: float
) -> List[RankOnePair]:
    """Elimina pares cuya rotación dista menos de angle_tol de uno ya aceptado.

    Conserva el de menor residuo y ordena el resultado por ángulo a la identidad.
    """
    kept: List[RankOnePair] = []
    for pair in sorted(pairs, key=lambda item: item.residual):
        if all(rotation_distance(pair.m, other.m) >= angle_tol for other in kept):
            kept.append(pair)
    return sorted(kept, key=lambda item: item.m.angle)


def oracle_rank_one(
    p,
    n_starts: int,
    rng: np.random.Generator,
    config: Optional[LemmaConfig] = None,
) -> List[RankOnePair]:
    """Oráculo multi-arranque para el lema.

    Minimiza por Levenberg–Marquardt los nueve cofactores de
    P + σ₂(P)·ρ(g₀)·R(ω) sobre ω, desde n_starts arranques g₀ de Haar.

    Args:
        p: Matriz 3×3 genérica
        n_starts: Número de arranques
        rng: Generador de numpy con semilla fijada
        config: Parámetros del lema (tolerancias de residuo y deduplicación)

    Returns:
        Soluciones distintas encontradas, ordenadas por ángulo a la identidad

    Raises:
        PreconditionError: Si P no es genérica
        OracleInconclusiveError: Si con al menos 1000 arranques hay menos de dos mínimos
    """
    config = config or LemmaConfig.default()
    p = as_mat3(p)
    stratum = classify_stratum(p, config.rel_tol)
    if not stratum.is_generic:
        raise PreconditionError(t.LEMMA_ERROR_NOT_GENERIC.format(tag=stratum.tag.value))

    s1, s, _ = stratum.sigma
    scale = 1.0 / (s1 * s1)
    starts = rho_matrix(sample_unit_quaternion(rng, n_starts))

    candidates = []
    for index, base in enumerate(starts):

        def residuals(omega, base=base):
            m = base @ rotation_from_vector(omega).matrix
            return scale * cofactor(p + s * m).ravel()

        result = least_squares(
            residuals, np.zeros(3), method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15
        )
        m = Rotation(base @ rotation_from_vector(result.x).matrix)
        _, residual = rank_one_residual(p, s, m)
        Logger.debug(t.ORACLE_DEBUG_START.format(index=index, residual=residual))
        if residual < config.residual_tol * s1:
            candidates.append(RankOnePair(s=s, m=m, residual=residual))

    found = dedupe_rotations(candidates, config.dedupe_angle)
    if len(found) < 2 and n_starts >= INCONCLUSIVE_MIN_STARTS:
        raise OracleInconclusiveError(
            t.LEMMA_ERROR_ORACLE_INCONCLUSIVE.format(found=len(found), starts=n_starts)
        )
    return found


def pairs_agree(
    first: Sequence[RankOnePair], second: Sequence[RankOnePair], angle_tol: float = 1e-6
) -> bool:
    """Comprueba que dos conjuntos de pares coinciden en rotación y tamaño."""
    if len(first) != len(second):
        return False
    for pair in first:
        matches = [
            other
            for other in second
            if rotation_distance(pair.m, other.m) < angle_tol
            and abs(pair.s - other.s) <= 1e-9 * max(pair.s, 1.0)
        ]
        if len(matches) != 1:
            return False
    return True


def solution_separation(outcome: LemmaOutcome) -> float:
    """Ángulo entre las dos soluciones; 0 para raíces dobles."""
    if outcome.kind is not LemmaKind.TWO_DISTINCT:
        return 0.0
    first, second = outcome.pairs
    return rotation_distance(first.m, second.m)
