"""Batería de comprobaciones del lema de rango uno.

Compara la forma cerrada con el oráculo multi-arranque sobre matrices
aleatorias genéricas y recorre las familias degeneradas: coalescencia
de las dos soluciones, múltiplos escalares de rotaciones y
equivariancia bajo rotaciones a izquierda y derecha.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from instanton_gluing.core.config import LemmaConfig
from instanton_gluing.core.exceptions import OracleInconclusiveError, PreconditionError
from instanton_gluing.gauge.rank_one import (
    LemmaKind,
    RankOnePair,
    oracle_rank_one,
    pairs_agree,
    solution_separation,
    solve_rank_one,
)
from instanton_gluing.geometry.linalg3 import classify_stratum
from instanton_gluing.geometry.rotations import Rotation, sample_rotation
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

COALESCENCE_EXPONENTS = range(1, 7)
SLOPE_TARGET = 0.5
SLOPE_TOL = 0.15
EQUIVARIANCE_CASES = 10


@dataclass(frozen=True)
class PropertyCheck:
    """Resultado de una propiedad."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class LemmaSuiteSummary:
    """Resumen de lemma_suite."""

    checks: List[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def lines(self) -> List[str]:
        return [
            t.LEMMA_SUITE_LINE.format(
                name=check.name,
                status=t.LEMMA_SUITE_PASS if check.passed else t.LEMMA_SUITE_FAIL,
                detail=check.detail,
            )
            for check in self.checks
        ]


def random_generic_matrix(rng: np.random.Generator, rel_tol: float = 1e-8) -> np.ndarray:
    """Matriz uniforme en [−1, 1]³ˣ³ con estrato genérico."""
    while True:
        p = rng.uniform(-1.0, 1.0, (3, 3))
        if classify_stratum(p, rel_tol).is_generic:
            return p


def check_oracle_agreement(
    n: int, seed: int, oracle_starts: int, config: LemmaConfig
) -> PropertyCheck:
    """Forma cerrada frente al oráculo sobre n matrices genéricas."""
    rng = np.random.default_rng(seed)
    agreed = 0
    for k in range(n):
        p = random_generic_matrix(rng, config.rel_tol)
        outcome = solve_rank_one(p, config.rel_tol, config.residual_tol)
        try:
            found = oracle_rank_one(p, oracle_starts, np.random.default_rng([seed, k]), config)
        except OracleInconclusiveError as e:
            Logger.warning(t.LEMMA_SUITE_WARNING_INCONCLUSIVE.format(index=k, error=e))
            continue
        if outcome.kind is LemmaKind.TWO_DISTINCT and pairs_agree(outcome.pairs, found):
            agreed += 1
        else:
            Logger.warning(t.LEMMA_SUITE_WARNING_MISMATCH.format(index=k, found=len(found)))
    return PropertyCheck("closed_form_vs_oracle", agreed == n, f"{agreed}/{n}")


def coalescence_separations(base: str = "top") -> List[float]:
    """Separaciones a lo largo de diag(2+ε, 2, 1) o diag(3, 1+ε, 1), ε = 10^-k."""
    separations = []
    for k in COALESCENCE_EXPONENTS:
        eps = 10.0 ** (-k)
        diagonal = (2.0 + eps, 2.0, 1.0) if base == "top" else (3.0, 1.0 + eps, 1.0)
        separations.append(solution_separation(solve_rank_one(np.diag(diagonal))))
    return separations


def coalescence_slope(separations: List[float]) -> float:
    """Pendiente log-log de la separación frente a ε."""
    eps = [10.0 ** (-k) for k in COALESCENCE_EXPONENTS]
    slope, _ = np.polyfit(np.log(eps), np.log(separations), 1)
    return float(slope)


def check_coalescence() -> PropertyCheck:
    """Separación monótona decreciente con pendiente 1/2 en ambas familias."""
    top = coalescence_separations("top")
    bottom = coalescence_separations("bottom")
    monotone = all(a > b > 0 for a, b in zip(top, top[1:])) and all(
        a > b > 0 for a, b in zip(bottom, bottom[1:])
    )
    slope = coalescence_slope(top)
    passed = monotone and abs(slope - SLOPE_TARGET) <= SLOPE_TOL
    return PropertyCheck("coalescence", passed, f"slope={slope:.3f}")


def check_scalar_rotations(n: int, seed: int) -> PropertyCheck:
    """c·R con R de Haar se clasifica siempre como Degenerate."""
    rng = np.random.default_rng([seed, 1])
    degenerate = 0
    for _ in range(n):
        scale = rng.uniform(0.5, 5.0)
        outcome = solve_rank_one(scale * sample_rotation(rng).matrix)
        degenerate += outcome.kind is LemmaKind.DEGENERATE
    return PropertyCheck("scalar_rotation_degenerate", degenerate == n, f"{degenerate}/{n}")


def _transformed(pairs: List[RankOnePair], left: Rotation, right: Rotation) -> List[RankOnePair]:
    return [
        RankOnePair(s=pair.s, m=left @ pair.m @ right.inverse(), residual=pair.residual)
        for pair in pairs
    ]


def check_equivariance(seed: int, cases: int = EQUIVARIANCE_CASES) -> PropertyCheck:
    """Las soluciones de R·P·Sᵀ son (s, R·M·Sᵀ)."""
    rng = np.random.default_rng([seed, 2])
    ok = 0
    for _ in range(cases):
        p = random_generic_matrix(rng)
        left, right = sample_rotation(rng), sample_rotation(rng)
        base = solve_rank_one(p)
        moved = solve_rank_one(left.matrix @ p @ right.matrix.T)
        ok += pairs_agree(_transformed(base.pairs, left, right), moved.pairs)
    return PropertyCheck("equivariance", ok == cases, f"{ok}/{cases}")


def lemma_suite(
    n: int,
    seed: int,
    oracle_starts: Optional[int] = None,
    config: Optional[LemmaConfig] = None,
) -> LemmaSuiteSummary:
    """Ejecuta todas las comprobaciones del lema.

    Args:
        n: Número de matrices aleatorias (≥ 1)
        seed: Semilla
        oracle_starts: Arranques del oráculo por matriz
        config: Parámetros del lema

    Returns:
        LemmaSuiteSummary con una entrada por propiedad

    Raises:
        PreconditionError: Si n < 1
    """
    if n < 1:
        raise PreconditionError(t.LEMMA_SUITE_ERROR_N.format(n=n))
    config = config or LemmaConfig.default()
    starts = oracle_starts or config.oracle_starts

    summary = LemmaSuiteSummary()
    summary.checks.append(check_oracle_agreement(n, seed, starts, config))
    summary.checks.append(check_coalescence())
    summary.checks.append(check_scalar_rotations(n, seed))
    summary.checks.append(check_equivariance(seed))

    for line in summary.lines():
        Logger.info(line)
    return summary
