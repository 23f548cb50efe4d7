"""Enumeración estructurada de los datos de pegado.

Para cada emparejamiento (i, j) se busca y_I con ρ(g(y)) = M_i(p)⁻¹·M_j(q),
donde y₀ y λ salen de la rama pequeña de las ecuaciones de magnitud. La
ecuación se resuelve sobre su levantamiento: la parte imaginaria de
conj(g_T)·g(y) se anula exactamente cuando g(y) = ±g_T.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from instanton_gluing.core.config import SolverConfig
from instanton_gluing.core.exceptions import CountAnomalyError, NearDegenerateError
from instanton_gluing.data.background import BackgroundField, TargetData, targets
from instanton_gluing.gauge.instanton import TwoPointConfig, g_map_batch, g_preimages
from instanton_gluing.geometry.rotations import (
    Rotation,
    quat_conj,
    quat_mul,
    rho_inverse_pair,
    rho_matrix,
)
from instanton_gluing.solver.defect import relative_defect
from instanton_gluing.solver.magnitude import (
    admissible_radius,
    branch_limit,
    small_root_batch,
)
from instanton_gluing.solver.orientation import orientation_sign
from instanton_gluing.solver.records import (
    PAIRINGS,
    CountReport,
    GluingData,
    Pairing,
    SolutionRecord,
    dedupe_records,
    glued_curvatures,
)
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

MAX_GRID_SEEDS = 64
MIN_BACKTRACK = 1.0 / 1024.0
JACOBIAN_STEP = 1e-7


@dataclass(frozen=True, eq=False)
class PairingProblem:
    """Tarea independiente para un emparejamiento (serializable entre procesos)."""

    background: BackgroundField
    cfg: TwoPointConfig
    config: SolverConfig
    pairing: Pairing
    s_p: float
    s_q: float
    m_p: Rotation
    target: Rotation

    @property
    def lift(self) -> np.ndarray:
        """Levantamiento canónico g_T de la rotación objetivo."""
        return rho_inverse_pair(self.target)[0]


def lift_residual_batch(problem: PairingProblem, y_imag) -> np.ndarray:
    """Parte imaginaria de conj(g_T)·g(y) sobre y_I de forma (..., 3).

    Vale NaN donde la ecuación de magnitud no tiene raíz real.
    """
    y_imag = np.asarray(y_imag, dtype=float)
    y0, _ = small_root_batch(problem.cfg, problem.s_p, problem.s_q, y_imag)
    y = np.concatenate([np.asarray(y0)[..., None], y_imag], axis=-1)
    g = g_map_batch(problem.cfg.L, y)
    return quat_mul(quat_conj(problem.lift), g)[..., 1:]


def _residual(problem: PairingProblem) -> Callable[[np.ndarray], Optional[np.ndarray]]:
    def residual(x: np.ndarray) -> Optional[np.ndarray]:
        value = lift_residual_batch(problem, x)
        return value if np.all(np.isfinite(value)) else None

    return residual


def _central_jacobian(residual, x: np.ndarray, h: float) -> Optional[np.ndarray]:
    jac = np.empty((3, 3))
    for k in range(3):
        step = np.zeros(3)
        step[k] = h
        plus = residual(x + step)
        minus = residual(x - step)
        if plus is None or minus is None:
            return None
        jac[:, k] = (plus - minus) / (2.0 * h)
    return jac


def damped_newton(
    residual: Callable[[np.ndarray], Optional[np.ndarray]],
    x0: np.ndarray,
    scale: float,
    tol: float,
    max_iters: int,
) -> Optional[np.ndarray]:
    """Newton amortiguado con jacobiano por diferencias centradas.

    Args:
        residual: Función R³ → R³; devuelve None fuera de su dominio
        x0: Punto inicial
        scale: Longitud característica para el paso de diferencias
        tol: Tolerancia sobre la norma del residuo
        max_iters: Iteraciones máximas

    Returns:
        El punto convergido o None
    """
    x = np.asarray(x0, dtype=float)
    r = residual(x)
    if r is None:
        return None
    norm = float(np.linalg.norm(r))

    for _ in range(max_iters):
        if norm <= tol:
            return x
        h = JACOBIAN_STEP * max(scale, float(np.linalg.norm(x)))
        jac = _central_jacobian(residual, x, h)
        if jac is None:
            return None
        try:
            step = np.linalg.solve(jac, -r)
        except np.linalg.LinAlgError:
            return None

        damping = 1.0
        while damping >= MIN_BACKTRACK:
            candidate = x + damping * step
            r_new = residual(candidate)
            if r_new is not None and np.linalg.norm(r_new) < norm:
                break
            damping *= 0.5
        else:
            return None
        x, r = candidate, r_new
        norm = float(np.linalg.norm(r))

    return x if norm <= tol else None


def grid_seeds(problem: PairingProblem, radius: float) -> List[np.ndarray]:
    """Mínimos locales del residuo sobre una rejilla cúbica en |y_I| ≤ radius."""
    n = problem.config.grid_density
    axis = np.linspace(-radius, radius, n)
    points = np.stack(np.meshgrid(axis, axis, axis, indexing="ij"), axis=-1)

    values = np.linalg.norm(lift_residual_batch(problem, points), axis=-1)
    values[~np.isfinite(values)] = np.inf
    values[np.linalg.norm(points, axis=-1) > radius] = np.inf

    padded = np.pad(values, 1, constant_values=np.inf)
    is_min = np.isfinite(values)
    for dim in range(3):
        for shift in (-1, 1):
            neighbour = np.roll(padded, shift, axis=dim)[1:-1, 1:-1, 1:-1]
            is_min &= values <= neighbour

    idx = np.argwhere(is_min)
    order = np.argsort(values[is_min], kind="stable")
    return [points[tuple(idx[k])] for k in order[:MAX_GRID_SEEDS]]


def analytic_seeds(problem: PairingProblem) -> List[np.ndarray]:
    """Preimágenes de ±g_T en el plano medio."""
    seeds = []
    for lift in (problem.lift, -problem.lift):
        seeds.extend(g_preimages(problem.cfg, lift))
    return seeds


def _build_record(problem: PairingProblem, y_imag: np.ndarray) -> Optional[SolutionRecord]:
    cfg, config = problem.cfg, problem.config
    y0, lam = small_root_batch(cfg, problem.s_p, problem.s_q, y_imag)
    y0, lam = float(y0), float(lam)
    if not np.isfinite(lam):
        return None
    if lam > config.cutoff(cfg.L) or lam >= branch_limit(cfg, problem.s_p, problem.s_q):
        Logger.debug(t.SOLVER_DEBUG_INADMISSIBLE.format(pairing=problem.pairing, lam=lam))
        return None

    y = np.concatenate([[y0], y_imag])
    direction = (y - cfg.p) / np.linalg.norm(y - cfg.p)
    m = Rotation(rho_matrix(direction) @ problem.m_p.matrix.T)
    gluing = GluingData(y=y, lam=lam, m=m)

    f_p, f_q = glued_curvatures(problem.background, cfg, gluing)
    defect = max(relative_defect(f_p), relative_defect(f_q))
    if defect > config.certify_tol:
        Logger.warning(
            t.SOLVER_WARNING_UNCERTIFIED.format(pairing=problem.pairing, defect=defect)
        )
        return None

    g = g_map_batch(cfg.L, y)
    lift = 1 if quat_mul(quat_conj(problem.lift), g)[0] > 0 else -1
    try:
        sign = orientation_sign(problem.background, cfg, gluing, config.fd_step)
    except NearDegenerateError as e:
        Logger.warning(t.SOLVER_WARNING_NOT_TRANSVERSE.format(pairing=problem.pairing, error=e))
        sign = 0

    return SolutionRecord(
        gluing=gluing,
        pairing=problem.pairing,
        defect_norm=defect,
        sign=sign,
        lambda_over_L2=lam / cfg.L**2,
        scale_ratio=lam / ((cfg.L**2 + float(y_imag @ y_imag)) * np.sqrt(problem.s_p)),
        lift=lift,
    )


def solve_pairing(problem: PairingProblem) -> List[SolutionRecord]:
    """Todas las soluciones certificadas y admisibles de un emparejamiento."""
    cfg, config = problem.cfg, problem.config
    radius = admissible_radius(cfg, problem.s_p, problem.s_q, config.K, config.alpha)
    seeds = analytic_seeds(problem) + grid_seeds(problem, radius if radius > 0 else cfg.L)

    residual = _residual(problem)
    records = []
    for index, seed in enumerate(seeds):
        root = damped_newton(
            residual, seed, cfg.L, config.newton_tol, config.max_newton_iters
        )
        Logger.debug(
            t.SOLVER_DEBUG_START.format(pairing=problem.pairing, index=index, ok=root is not None)
        )
        if root is None:
            continue
        record = _build_record(problem, root)
        if record is not None:
            records.append(record)
    return dedupe_records(records, config.dedupe_radius)


def pairing_problems(
    background: BackgroundField,
    cfg: TwoPointConfig,
    config: SolverConfig,
    target_data: TargetData,
) -> List[PairingProblem]:
    """Un problema por emparejamiento, en orden (1,1), (1,2), (2,1), (2,2)."""
    return [
        PairingProblem(
            background=background,
            cfg=cfg,
            config=config,
            pairing=(i, j),
            s_p=target_data.s_p,
            s_q=target_data.s_q,
            m_p=target_data.m_p[i - 1],
            target=target_data.target_rotation(i, j),
        )
        for i, j in PAIRINGS
    ]


def enumerate_solutions(
    background: BackgroundField,
    cfg: TwoPointConfig,
    config: Optional[SolverConfig] = None,
    target_data: Optional[TargetData] = None,
    strict: bool = False,
) -> List[SolutionRecord]:
    """Enumera todos los datos de pegado admisibles y certificados.

    Args:
        background: Campo de fondo genérico en p y q
        cfg: Configuración de dos puntos
        config: Parámetros del resolvedor
        target_data: Objetivos ya calculados (si no, se calculan)
        strict: Lanza CountAnomalyError si el recuento no es 1/2/2/1

    Returns:
        Registros deduplicados, ordenados por emparejamiento, λ e y

    Raises:
        DegenerateTargetError: Si el fondo no es genérico en p o en q
        CountAnomalyError: Solo en modo estricto
    """
    config = config or SolverConfig.default()
    target_data = target_data or targets(background, cfg, config.rel_tol)
    problems = pairing_problems(background, cfg, config, target_data)

    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=min(config.workers, len(problems))) as pool:
            batches = list(pool.map(solve_pairing, problems))
    else:
        batches = [solve_pairing(problem) for problem in problems]

    records = sorted((r for batch in batches for r in batch), key=SolutionRecord.sort_key)
    report = CountReport.from_records(records)
    Logger.info(
        t.SOLVER_LOG_SUMMARY.format(L=cfg.L, total=report.total, counts=report.to_dict())
    )
    if not report.is_expected:
        message = t.SOLVER_WARNING_COUNT_ANOMALY.format(L=cfg.L, anomalies=report.anomalies)
        Logger.warning(message)
        if strict:
            raise CountAnomalyError(message)
    return records
