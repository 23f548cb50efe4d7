"""Figuras SVG estáticas generadas solo a partir de los CSV de resultados."""

from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from instanton_gluing.experiments.report import (  # noqa: E402
    BRANCHES_NAME,
    BranchRow,
    ExperimentRow,
    read_branches_csv,
    read_csv,
)
from instanton_gluing.utils import translations as t  # noqa: E402
from instanton_gluing.utils.logger import Logger  # noqa: E402

SVG_HASH_SALT = "instanton-gluing"
EXPECTED_TOTAL = 6

plt.rcParams.update({"svg.hashsalt": SVG_HASH_SALT, "font.size": 10})


def _save(fig, output: Path) -> Path:
    output.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(output, format=output.suffix[1:], metadata={"Date": None})
    plt.close(fig)
    Logger.debug(t.PLOT_LOG_SAVED.format(path=output))
    return output


def _series(rows: List[ExperimentRow]) -> Dict[tuple, List[ExperimentRow]]:
    groups: Dict[tuple, List[ExperimentRow]] = defaultdict(list)
    for row in rows:
        groups[(row.seed, row.alpha)].append(row)
    return {key: sorted(value, key=lambda row: row.L) for key, value in sorted(groups.items())}


def plot_count_vs_L(rows: List[ExperimentRow], output: Path) -> Path:
    """Recuento certificado frente a L, una línea por (semilla, α)."""
    fig, ax = plt.subplots(1, 1)
    fig.set_size_inches(6, 4)
    for (seed, alpha), series in _series(rows).items():
        ax.plot(
            [row.L for row in series],
            [row.count for row in series],
            marker="o",
            markersize=3,
            linewidth=1,
            label=f"seed {seed}, alpha {alpha:g}",
        )
    ax.axhline(EXPECTED_TOTAL, color="black", linewidth=0.8, linestyle="--")
    ax.set_xscale("log")
    ax.set_xlabel("L")
    ax.set_ylabel("count")
    return _save(fig, output)


def _branch_series(rows: List[BranchRow]) -> Dict[tuple, List[BranchRow]]:
    groups: Dict[tuple, List[BranchRow]] = defaultdict(list)
    for row in rows:
        groups[(row.seed, row.alpha, row.branch)].append(row)
    return {key: sorted(value, key=lambda row: row.L) for key, value in sorted(groups.items())}


def plot_lambda_ratio_vs_L(rows: List[BranchRow], output: Path) -> Path:
    """λ/L² frente a L, una curva por rama (semilla, α, emparejamiento, signo)."""
    fig, ax = plt.subplots(1, 1)
    fig.set_size_inches(6, 4)
    for (seed, alpha, branch), series in _branch_series(rows).items():
        ax.plot(
            [row.L for row in series],
            [row.lambda_over_L2 for row in series],
            marker="o",
            markersize=3,
            linewidth=1,
            label=f"seed {seed}, alpha {alpha:g}, {branch}",
        )
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("L")
    ax.set_ylabel("lambda / L^2")
    return _save(fig, output)


def plot_sign_table(rows: List[ExperimentRow], output: Path) -> Path:
    """Tabla de signos: una celda por fila del CSV."""
    fig, ax = plt.subplots(1, 1)
    fig.set_size_inches(6, 0.6 + 0.25 * max(len(rows), 1))
    ax.axis("off")
    cells = [
        [str(row.seed), f"{row.L:g}", f"{row.alpha:g}", str(row.count), "+1" if row.signs_ok else "anomaly"]
        for row in rows
    ]
    if cells:
        ax.table(
            cellText=cells,
            colLabels=["seed", "L", "alpha", "count", "signs"],
            loc="center",
        )
    return _save(fig, output)


def render_plots(
    csv_path: Path, out_dir: Path, branches_path: Optional[Path] = None
) -> List[Path]:
    """Genera las tres figuras a partir de los CSV.

    Args:
        csv_path: CSV de celdas escrito por el ejecutor
        out_dir: Carpeta de salida
        branches_path: CSV por rama; por defecto branches.csv junto a csv_path.
            Si no existe, la figura de λ/L² queda vacía

    Returns:
        Rutas de las figuras escritas
    """
    rows = read_csv(csv_path)
    branches_path = Path(branches_path or Path(csv_path).with_name(BRANCHES_NAME))
    branches = read_branches_csv(branches_path) if branches_path.exists() else []
    out_dir = Path(out_dir)
    return [
        plot_count_vs_L(rows, out_dir / "count_vs_L.svg"),
        plot_lambda_ratio_vs_L(branches, out_dir / "lambda_ratio_vs_L.svg"),
        plot_sign_table(rows, out_dir / "sign_table.svg"),
    ]
