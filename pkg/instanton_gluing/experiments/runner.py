"""Ejecutor de experimentos sobre la rejilla semillas × L × α.

Cada celda genera (o reutiliza) el campo de fondo de la semilla, enumera
las soluciones, opcionalmente las contrasta con el oráculo global y
escribe el conjunto de soluciones en JSON. Tras las celdas de cada
semilla y α se completa el barrido diádico de L que fija el umbral de
estabilidad del recuento. El CSV agregado, el CSV por rama, los umbrales,
el archivo de diagnóstico y las figuras se escriben al final.
"""

import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from instanton_gluing.core.config import SolverConfig
from instanton_gluing.core.exceptions import DegenerateTargetError, ExperimentError
from instanton_gluing.data.background import (
    BackgroundField,
    make_background,
    save_background,
    targets,
)
from instanton_gluing.data.json_store import write_json_atomic
from instanton_gluing.data.solution_store import save_solutions
from instanton_gluing.experiments.report import (
    ANOMALY_COUNT,
    ANOMALY_DEGENERATE_TARGET,
    ANOMALY_ORACLE,
    ANOMALY_SIGN,
    BRANCHES_NAME,
    BranchRow,
    ExperimentReport,
    ExperimentRow,
    branch_label,
    write_branches_csv,
    write_csv,
)
from instanton_gluing.gauge.instanton import TwoPointConfig
from instanton_gluing.solver.enumeration import enumerate_solutions
from instanton_gluing.solver.oracle import compare_solution_sets, oracle_search
from instanton_gluing.solver.records import EXPECTED_COUNTS, CountReport, SolutionRecord
from instanton_gluing.solver.stability import StabilitySweep, log_threshold, sweep_reports
from instanton_gluing.utils import paths
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

CSV_NAME = "results.csv"
DIAGNOSTICS_NAME = "diagnostics.json"
STABILITY_NAME = "stability.json"


@dataclass(frozen=True)
class ExperimentSpec:
    """Especificación de un experimento.

    Atributos:
        seeds: Semillas de los campos de fondo (no vacía)
        L_values: Semidistancias p–q, estrictamente descendentes
        alphas: Exponentes α de la cota de admisibilidad
        solver: Configuración base del resolvedor (K, tolerancias, procesos)
        out_dir: Carpeta de salida
        degree: Grado de los campos de fondo
        amplitude: Amplitud de los coeficientes
        oracle: Ejecutar el oráculo global en cada celda
        oracle_starts: Arranques del oráculo
        plots: Generar las figuras SVG
        timing: Medir wall_ms (si es False se escribe 0)
        stability_depth: Mitades diádicas extra por debajo de la menor L,
            usadas solo para fijar el umbral de estabilidad del recuento
    """

    seeds: Sequence[int]
    L_values: Sequence[float]
    alphas: Sequence[float] = (1.0,)
    solver: SolverConfig = field(default_factory=SolverConfig.default)
    out_dir: Optional[Path] = None
    degree: int = 2
    amplitude: float = 1.0
    oracle: bool = False
    oracle_starts: int = 1000
    plots: bool = False
    timing: bool = True
    stability_depth: int = 2

    def __post_init__(self):
        self._validate()

    def _validate(self) -> None:
        """Valida la especificación.

        Raises:
            ExperimentError: Si la especificación no es válida
        """
        if not self.seeds:
            raise ExperimentError(t.EXPERIMENT_ERROR_NO_SEEDS)
        if not self.L_values or any(L <= 0 for L in self.L_values):
            raise ExperimentError(t.EXPERIMENT_ERROR_L_VALUES.format(values=list(self.L_values)))
        if any(a <= b for a, b in zip(self.L_values, self.L_values[1:])):
            raise ExperimentError(t.EXPERIMENT_ERROR_L_ORDER.format(values=list(self.L_values)))
        if not self.alphas:
            raise ExperimentError(t.EXPERIMENT_ERROR_NO_ALPHAS)
        if self.oracle_starts < 1:
            raise ExperimentError(t.EXPERIMENT_ERROR_STARTS.format(starts=self.oracle_starts))
        if self.stability_depth < 0:
            raise ExperimentError(t.EXPERIMENT_ERROR_DEPTH.format(depth=self.stability_depth))

    @property
    def output_folder(self) -> Path:
        return Path(self.out_dir) if self.out_dir is not None else paths.get_output_folder()

    @property
    def sweep_L_values(self) -> List[float]:
        """L extra del barrido de estabilidad: L_min/2, L_min/4, …"""
        L_min = min(self.L_values)
        return [L_min / 2**k for k in range(1, self.stability_depth + 1)]


def _solutions_name(seed: int, L: float, alpha: float) -> str:
    return f"seed{seed}_L{L!r}_alpha{alpha!r}.json"


def _signs_ok(records: List[SolutionRecord]) -> bool:
    return bool(records) and all(record.sign == 1 for record in records)


def _run_cell(
    spec: ExperimentSpec,
    background: BackgroundField,
    seed: int,
    L_index: int,
    alpha_index: int,
    report: ExperimentReport,
) -> ExperimentRow:
    L = spec.L_values[L_index]
    alpha = spec.alphas[alpha_index]
    cfg = TwoPointConfig(L)
    config = replace(spec.solver, alpha=alpha)
    cell = {"seed": seed, "L": L, "alpha": alpha}

    started = time.perf_counter()
    try:
        target_data = targets(background, cfg, config.rel_tol)
    except DegenerateTargetError as e:
        Logger.warning(t.RUNNER_WARNING_DEGENERATE.format(seed=seed, L=L, error=e))
        report.anomalies.append({**cell, "kind": ANOMALY_DEGENERATE_TARGET, "detail": str(e)})
        save_solutions(
            paths.get_solutions_folder(spec.output_folder) / _solutions_name(seed, L, alpha),
            [],
            background,
            cfg,
            config,
        )
        return ExperimentRow(
            seed=seed,
            L=L,
            alpha=alpha,
            count=0,
            counts={},
            signs_ok=False,
            min_lambda_over_L2=float("nan"),
            max_lambda_over_L2=float("nan"),
            oracle_ok=None,
            wall_ms=0,
        )

    records = enumerate_solutions(background, cfg, config, target_data)
    counts = CountReport.from_records(records)

    oracle_ok = None
    if spec.oracle:
        rng = np.random.default_rng([seed, L_index, alpha_index])
        search = oracle_search(background, cfg, config, spec.oracle_starts, rng, target_data)
        comparison = compare_solution_sets(records, search.records)
        oracle_ok = comparison.agree
        if not oracle_ok:
            report.anomalies.append(
                {
                    **cell,
                    "kind": ANOMALY_ORACLE,
                    "only_structured": [r.to_dict() for r in comparison.only_structured],
                    "only_oracle": [r.to_dict() for r in comparison.only_oracle],
                }
            )
    wall_ms = int(round(1000 * (time.perf_counter() - started))) if spec.timing else 0

    save_solutions(
        paths.get_solutions_folder(spec.output_folder) / _solutions_name(seed, L, alpha),
        records,
        background,
        cfg,
        config,
        target_data,
    )

    if not counts.is_expected:
        report.anomalies.append(
            {**cell, "kind": ANOMALY_COUNT, "counts": counts.to_dict(), "total": counts.total}
        )
    signs_ok = _signs_ok(records)
    if not signs_ok:
        report.anomalies.append(
            {**cell, "kind": ANOMALY_SIGN, "signs": [record.sign for record in records]}
        )

    report.branches.extend(
        BranchRow(
            seed=seed,
            L=L,
            alpha=alpha,
            branch=branch_label(record.pairing, record.lift),
            lambda_over_L2=record.lambda_over_L2,
            scale_ratio=record.scale_ratio,
        )
        for record in records
    )

    ratios = [record.lambda_over_L2 for record in records]
    row = ExperimentRow(
        seed=seed,
        L=L,
        alpha=alpha,
        count=counts.total,
        counts=counts.to_dict(),
        signs_ok=signs_ok,
        min_lambda_over_L2=min(ratios) if ratios else float("nan"),
        max_lambda_over_L2=max(ratios) if ratios else float("nan"),
        oracle_ok=oracle_ok,
        wall_ms=wall_ms,
    )
    Logger.info(
        t.RUNNER_LOG_CELL.format(
            seed=seed, L=L, alpha=alpha, count=row.count, signs=signs_ok, oracle=oracle_ok
        )
    )
    return row


def _row_is_expected(row: ExperimentRow) -> bool:
    return row.counts == CountReport(dict(EXPECTED_COUNTS)).to_dict()


def _stability_sweep(
    spec: ExperimentSpec,
    background: BackgroundField,
    seed: int,
    alpha: float,
    rows: List[ExperimentRow],
) -> StabilitySweep:
    """Barrido de estabilidad de una semilla y un α.

    Reutiliza los recuentos de las celdas de la rejilla y solo enumera en
    las L extra del barrido.
    """
    config = replace(spec.solver, alpha=alpha)
    extra_L = spec.sweep_L_values
    extra = StabilitySweep.from_reports(
        seed, alpha, extra_L, sweep_reports(background, extra_L, config)
    )
    return StabilitySweep(
        seed=seed,
        alpha=alpha,
        L_values=tuple(row.L for row in rows) + extra.L_values,
        totals=tuple(row.count for row in rows) + extra.totals,
        expected=tuple(_row_is_expected(row) for row in rows) + extra.expected,
    )


def _mark_threshold(anomalies: List[dict], sweep: StabilitySweep) -> None:
    """Anota las anomalías de recuento con el umbral de su semilla y α.

    above_threshold es True si el recuento se estabiliza en alguna L menor
    del barrido; False si falla incluso en la menor L.
    """
    for item in anomalies:
        if item["kind"] != ANOMALY_COUNT:
            continue
        if item["seed"] != sweep.seed or item["alpha"] != sweep.alpha:
            continue
        item["threshold"] = sweep.threshold
        item["above_threshold"] = sweep.threshold is not None and item["L"] > sweep.threshold


def run(spec: ExperimentSpec) -> ExperimentReport:
    """Ejecuta el experimento completo.

    Args:
        spec: Especificación validada

    Returns:
        ExperimentReport con filas, anomalías y rutas escritas
    """
    out_dir = spec.output_folder
    out_dir.mkdir(parents=True, exist_ok=True)
    Logger.info(
        t.RUNNER_LOG_START.format(
            seeds=len(spec.seeds), L=list(spec.L_values), alphas=list(spec.alphas), out=out_dir
        )
    )

    report = ExperimentReport()
    configs = [TwoPointConfig(L) for L in list(spec.L_values) + spec.sweep_L_values]

    for seed in spec.seeds:
        background = make_background(
            seed, spec.degree, spec.amplitude, configs, spec.solver.rel_tol
        )
        save_background(background, paths.get_backgrounds_folder(out_dir) / f"seed{seed}.json")
        for alpha_index, alpha in enumerate(spec.alphas):
            rows = [
                _run_cell(spec, background, seed, L_index, alpha_index, report)
                for L_index in range(len(spec.L_values))
            ]
            report.rows.extend(rows)
            sweep = _stability_sweep(spec, background, seed, alpha, rows)
            log_threshold(sweep)
            _mark_threshold(report.anomalies, sweep)
            report.stability.append(sweep.to_dict())

    report.csv_path = write_csv(out_dir / CSV_NAME, report.rows)
    report.branches_path = write_branches_csv(out_dir / BRANCHES_NAME, report.branches)
    report.stability_path = write_json_atomic(
        out_dir / STABILITY_NAME, {"sweeps": report.stability}
    )
    Logger.info(t.RUNNER_LOG_STABILITY.format(path=report.stability_path))

    if report.anomalies:
        report.diagnostics_path = write_json_atomic(
            out_dir / DIAGNOSTICS_NAME, {"anomalies": report.anomalies}
        )
        Logger.warning(
            t.RUNNER_WARNING_ANOMALIES.format(
                count=len(report.anomalies), path=report.diagnostics_path
            )
        )

    if spec.plots:
        from instanton_gluing.experiments.plots import render_plots

        render_plots(report.csv_path, out_dir, report.branches_path)

    Logger.info(t.RUNNER_LOG_DONE.format(rows=len(report.rows), code=report.exit_code))
    return report
