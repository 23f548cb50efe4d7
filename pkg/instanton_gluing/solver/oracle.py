"""Oráculo global multi-arranque sobre el sistema completo de 8 incógnitas.

Cada arranque refina por Levenberg–Marquardt los 18 cofactores de las
dos curvaturas pegadas, en la carta θ = (y/L, log λ, ω) con m = m₀·R(ω).
Las raíces de la rama grande o por encima del corte se informan como
rechazadas.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import least_squares

from instanton_gluing.core.config import SolverConfig
from instanton_gluing.core.exceptions import InstantonGluingError, NearDegenerateError
from instanton_gluing.data.background import BackgroundField, TargetData, targets
from instanton_gluing.gauge.instanton import TwoPointConfig
from instanton_gluing.geometry.linalg3 import cofactor
from instanton_gluing.geometry.rotations import (
    Rotation,
    rho_matrix,
    rotation_distance,
    rotation_from_vector,
    sample_unit_quaternion,
)
from instanton_gluing.solver.defect import relative_defect
from instanton_gluing.solver.magnitude import admissible_radius, branch_limit
from instanton_gluing.solver.orientation import orientation_sign
from instanton_gluing.solver.records import (
    GluingData,
    SolutionRecord,
    dedupe_records,
    glued_curvatures,
    joint_distance,
)
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

Start = Tuple[np.ndarray, float, np.ndarray]

REJECTED_LARGE_BRANCH = "large_branch"
REJECTED_INADMISSIBLE = "inadmissible"


@dataclass(frozen=True)
class OracleReport:
    """Resultado de oracle_search.

    Atributos:
        records: Soluciones admisibles certificadas y deduplicadas
        rejected: Raíces certificadas descartadas, con el motivo
        n_starts: Arranques ejecutados
        n_converged: Arranques que llegaron a una raíz certificada
    """

    records: List[SolutionRecord]
    rejected: List[Tuple[GluingData, str]] = field(default_factory=list)
    n_starts: int = 0
    n_converged: int = 0


@dataclass(frozen=True)
class SetComparison:
    """Diferencias entre dos conjuntos de soluciones."""

    only_structured: List[SolutionRecord]
    only_oracle: List[SolutionRecord]

    @property
    def agree(self) -> bool:
        return not self.only_structured and not self.only_oracle


def draw_starts(
    cfg: TwoPointConfig,
    config: SolverConfig,
    target_data: TargetData,
    n_starts: int,
    rng: np.random.Generator,
    lam_range: Optional[Tuple[float, float]] = None,
) -> List[Start]:
    """Arranques (y, λ, m₀) extraídos del generador antes de refinar.

    y_I es uniforme en la bola admisible, y₀ uniforme en ±L/4, λ
    log-uniforme en [L³, K·L^α] (o en lam_range) y m₀ de Haar.
    """
    L = cfg.L
    radius = admissible_radius(cfg, target_data.s_p, target_data.s_q, config.K, config.alpha)
    radius = radius if radius > 0 else L
    low, high = lam_range or (L**3, config.cutoff(L))

    directions = rng.standard_normal((n_starts, 3))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = radius * rng.uniform(0.0, 1.0, n_starts) ** (1.0 / 3.0)
    y0 = rng.uniform(-0.25 * L, 0.25 * L, n_starts)
    lams = np.exp(rng.uniform(np.log(low), np.log(high), n_starts))
    bases = rho_matrix(sample_unit_quaternion(rng, n_starts))

    return [
        (np.concatenate([[y0[k]], radii[k] * directions[k]]), float(lams[k]), bases[k])
        for k in range(n_starts)
    ]


def _refine(
    background: BackgroundField, cfg: TwoPointConfig, scale: float, start: Start
) -> GluingData:
    y_start, lam_start, base = start

    def unpack(theta: np.ndarray) -> GluingData:
        return GluingData(
            y=cfg.L * theta[:4],
            lam=float(np.exp(theta[4])),
            m=Rotation(base @ rotation_from_vector(theta[5:]).matrix),
        )

    def residuals(theta: np.ndarray) -> np.ndarray:
        f_p, f_q = glued_curvatures(background, cfg, unpack(theta))
        return scale * np.concatenate([cofactor(f_p).ravel(), cofactor(f_q).ravel()])

    theta0 = np.concatenate([y_start / cfg.L, [np.log(lam_start)], np.zeros(3)])
    result = least_squares(residuals, theta0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
    return unpack(result.x)


def _refine_chunk(
    args: Tuple[BackgroundField, TwoPointConfig, float, Sequence[Start]]
) -> List[Optional[GluingData]]:
    background, cfg, scale, starts = args
    refined = []
    for start in starts:
        try:
            refined.append(_refine(background, cfg, scale, start))
        except (InstantonGluingError, ValueError, ArithmeticError):
            refined.append(None)
    return refined


def _pairing_of(target_data: TargetData, cfg: TwoPointConfig, gluing: GluingData) -> Tuple[int, int]:
    """Etiqueta (i, j) por la rotación objetivo más cercana en p y en q."""
    labels = []
    for point, rotations in ((cfg.p, target_data.m_p), (cfg.q, target_data.m_q)):
        direction = (gluing.y - point) / np.linalg.norm(gluing.y - point)
        seen = Rotation(gluing.m.matrix.T @ rho_matrix(direction))
        distances = [rotation_distance(seen, target) for target in rotations]
        labels.append(int(np.argmin(distances)) + 1)
    return labels[0], labels[1]


def oracle_search(
    background: BackgroundField,
    cfg: TwoPointConfig,
    config: Optional[SolverConfig] = None,
    n_starts: int = 1000,
    rng: Optional[np.random.Generator] = None,
    target_data: Optional[TargetData] = None,
    lam_range: Optional[Tuple[float, float]] = None,
) -> OracleReport:
    """Búsqueda global multi-arranque con informe de raíces rechazadas.

    Args:
        background: Campo de fondo
        cfg: Configuración de dos puntos
        config: Parámetros del resolvedor
        n_starts: Número de arranques
        rng: Generador con semilla fijada
        target_data: Objetivos ya calculados
        lam_range: Intervalo de λ de los arranques (por defecto [L³, K·L^α])

    Returns:
        OracleReport con soluciones admisibles y rechazadas
    """
    config = config or SolverConfig.default()
    rng = rng or np.random.default_rng(0)
    target_data = target_data or targets(background, cfg, config.rel_tol)

    starts = draw_starts(cfg, config, target_data, n_starts, rng, lam_range)
    sigma1 = max(
        np.linalg.norm(background.evaluate(cfg.p), 2), np.linalg.norm(background.evaluate(cfg.q), 2)
    )
    scale = 1.0 / sigma1**2

    workers = max(1, min(config.workers, n_starts))
    chunks = [starts[k::workers] for k in range(workers)]
    tasks = [(background, cfg, scale, chunk) for chunk in chunks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_refine_chunk, tasks))
    else:
        results = [_refine_chunk(task) for task in tasks]
    refined = [gluing for chunk in results for gluing in chunk]

    limit = branch_limit(cfg, target_data.s_p, target_data.s_q)
    records, rejected = [], []
    for index, gluing in enumerate(refined):
        if gluing is None:
            continue
        f_p, f_q = glued_curvatures(background, cfg, gluing)
        defect = max(relative_defect(f_p), relative_defect(f_q))
        Logger.debug(t.ORACLE_DEBUG_START.format(index=index, residual=defect))
        if defect > config.certify_tol:
            continue
        if gluing.lam >= limit:
            rejected.append((gluing, REJECTED_LARGE_BRANCH))
            continue
        if gluing.lam > config.cutoff(cfg.L):
            rejected.append((gluing, REJECTED_INADMISSIBLE))
            continue
        try:
            sign = orientation_sign(background, cfg, gluing, config.fd_step)
        except NearDegenerateError:
            sign = 0
        y_imag = gluing.y[1:]
        records.append(
            SolutionRecord(
                gluing=gluing,
                pairing=_pairing_of(target_data, cfg, gluing),
                defect_norm=defect,
                sign=sign,
                lambda_over_L2=gluing.lam / cfg.L**2,
                scale_ratio=gluing.lam
                / ((cfg.L**2 + float(y_imag @ y_imag)) * np.sqrt(target_data.s_p)),
            )
        )

    n_converged = len(records) + len(rejected)
    records = dedupe_records(records, config.dedupe_radius)
    Logger.info(
        t.ORACLE_LOG_SUMMARY.format(
            starts=n_starts, converged=n_converged, found=len(records), rejected=len(rejected)
        )
    )
    return OracleReport(
        records=records, rejected=rejected, n_starts=n_starts, n_converged=n_converged
    )


def oracle_enumerate(
    background: BackgroundField,
    cfg: TwoPointConfig,
    config: Optional[SolverConfig] = None,
    n_starts: int = 1000,
    rng: Optional[np.random.Generator] = None,
) -> List[SolutionRecord]:
    """Soluciones admisibles encontradas por el oráculo global."""
    return oracle_search(background, cfg, config, n_starts, rng).records


def compare_solution_sets(
    structured: Sequence[SolutionRecord],
    oracle: Sequence[SolutionRecord],
    tol: float = 1e-6,
) -> SetComparison:
    """Lista las soluciones de cada método sin pareja en el otro."""

    def unmatched(source, other):
        return [
            record
            for record in source
            if not any(joint_distance(record.gluing, candidate.gluing) < tol for candidate in other)
        ]

    comparison = SetComparison(
        only_structured=unmatched(structured, oracle), only_oracle=unmatched(oracle, structured)
    )
    if not comparison.agree:
        Logger.warning(
            t.ORACLE_WARNING_DISAGREEMENT.format(
                structured=len(comparison.only_structured), oracle=len(comparison.only_oracle)
            )
        )
    return comparison
