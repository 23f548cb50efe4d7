"""Esquema CSV y informe agregado de un experimento.

Columnas, en este orden: seed, L, alpha, count, c11, c12, c21, c22,
signs_ok, min_lambda_over_L2, max_lambda_over_L2, oracle_ok, wall_ms.
Los booleanos se escriben como true/false; oracle_ok vale "na" cuando el
oráculo no se ejecutó.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

CSV_COLUMNS = [
    "seed",
    "L",
    "alpha",
    "count",
    "c11",
    "c12",
    "c21",
    "c22",
    "signs_ok",
    "min_lambda_over_L2",
    "max_lambda_over_L2",
    "oracle_ok",
    "wall_ms",
]

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_COUNT_ANOMALY = 2
EXIT_SIGN_ANOMALY = 3
EXIT_ORACLE_DISAGREEMENT = 4

ANOMALY_COUNT = "count"
ANOMALY_DEGENERATE_TARGET = "degenerate_target"
ANOMALY_SIGN = "sign"
ANOMALY_ORACLE = "oracle"

_EXIT_BY_KIND = {
    ANOMALY_COUNT: EXIT_COUNT_ANOMALY,
    ANOMALY_DEGENERATE_TARGET: EXIT_COUNT_ANOMALY,
    ANOMALY_SIGN: EXIT_SIGN_ANOMALY,
    ANOMALY_ORACLE: EXIT_ORACLE_DISAGREEMENT,
}


def _format_bool(value: Optional[bool]) -> str:
    if value is None:
        return "na"
    return "true" if value else "false"


def _parse_bool(text: str) -> Optional[bool]:
    if text == "na":
        return None
    return text == "true"


@dataclass(frozen=True)
class ExperimentRow:
    """Una fila del CSV: una celda (semilla, L, α)."""

    seed: int
    L: float
    alpha: float
    count: int
    counts: Dict[str, int]
    signs_ok: bool
    min_lambda_over_L2: float
    max_lambda_over_L2: float
    oracle_ok: Optional[bool]
    wall_ms: int

    def to_csv(self) -> Dict[str, str]:
        return {
            "seed": str(self.seed),
            "L": repr(float(self.L)),
            "alpha": repr(float(self.alpha)),
            "count": str(self.count),
            **{key: str(self.counts.get(key, 0)) for key in ("c11", "c12", "c21", "c22")},
            "signs_ok": _format_bool(self.signs_ok),
            "min_lambda_over_L2": repr(float(self.min_lambda_over_L2)),
            "max_lambda_over_L2": repr(float(self.max_lambda_over_L2)),
            "oracle_ok": _format_bool(self.oracle_ok),
            "wall_ms": str(self.wall_ms),
        }

    @classmethod
    def from_csv(cls, row: Dict[str, str]) -> "ExperimentRow":
        return cls(
            seed=int(row["seed"]),
            L=float(row["L"]),
            alpha=float(row["alpha"]),
            count=int(row["count"]),
            counts={key: int(row[key]) for key in ("c11", "c12", "c21", "c22")},
            signs_ok=_parse_bool(row["signs_ok"]) is True,
            min_lambda_over_L2=float(row["min_lambda_over_L2"]),
            max_lambda_over_L2=float(row["max_lambda_over_L2"]),
            oracle_ok=_parse_bool(row["oracle_ok"]),
            wall_ms=int(row["wall_ms"]),
        )


BRANCH_COLUMNS = ["seed", "L", "alpha", "branch", "lambda_over_L2", "scale_ratio"]
BRANCHES_NAME = "branches.csv"


def branch_label(pairing: Tuple[int, int], lift: int) -> str:
    """Etiqueta de rama: emparejamiento más signo del levantamiento, p. ej. "12+"."""
    return f"{pairing[0]}{pairing[1]}{'+' if lift >= 0 else '-'}"


@dataclass(frozen=True)
class BranchRow:
    """Una solución de una celda, identificada por su rama (i, j, ±)."""

    seed: int
    L: float
    alpha: float
    branch: str
    lambda_over_L2: float
    scale_ratio: float

    def to_csv(self) -> Dict[str, str]:
        return {
            "seed": str(self.seed),
            "L": repr(float(self.L)),
            "alpha": repr(float(self.alpha)),
            "branch": self.branch,
            "lambda_over_L2": repr(float(self.lambda_over_L2)),
            "scale_ratio": repr(float(self.scale_ratio)),
        }

    @classmethod
    def from_csv(cls, row: Dict[str, str]) -> "BranchRow":
        return cls(
            seed=int(row["seed"]),
            L=float(row["L"]),
            alpha=float(row["alpha"]),
            branch=row["branch"],
            lambda_over_L2=float(row["lambda_over_L2"]),
            scale_ratio=float(row["scale_ratio"]),
        )


@dataclass
class ExperimentReport:
    """Filas del experimento, anomalías detectadas y rutas escritas."""

    rows: List[ExperimentRow] = field(default_factory=list)
    branches: List[BranchRow] = field(default_factory=list)
    anomalies: List[dict] = field(default_factory=list)
    stability: List[dict] = field(default_factory=list)
    csv_path: Optional[Path] = None
    branches_path: Optional[Path] = None
    diagnostics_path: Optional[Path] = None
    stability_path: Optional[Path] = None

    @property
    def exit_code(self) -> int:
        """0 si todo se verificó; si no, el código de la anomalía más prioritaria."""
        codes = [_EXIT_BY_KIND[item["kind"]] for item in self.anomalies]
        return min(codes) if codes else EXIT_OK

    @property
    def ok(self) -> bool:
        return not self.anomalies


def write_csv(path: Path, rows: List[ExperimentRow]) -> Path:
    """Escribe las filas en path con el esquema fijo."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.to_csv())
    return path


def read_csv(path: Path) -> List[ExperimentRow]:
    """Lee un CSV escrito por write_csv."""
    with open(Path(path), "r", encoding="utf-8", newline="") as f:
        return [ExperimentRow.from_csv(row) for row in csv.DictReader(f)]


def write_branches_csv(path: Path, rows: List[BranchRow]) -> Path:
    """Escribe una fila por solución con el esquema BRANCH_COLUMNS."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=BRANCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row.to_csv())
    return path


def read_branches_csv(path: Path) -> List[BranchRow]:
    with open(Path(path), "r", encoding="utf-8", newline="") as f:
        return [BranchRow.from_csv(row) for row in csv.DictReader(f)]
