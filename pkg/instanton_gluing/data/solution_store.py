"""Persistencia de conjuntos de soluciones en JSON.

Cada celda (semilla, L, α) de un experimento se guarda con la
configuración, la semilla del campo, los objetivos del lema y los
registros, de modo que cualquier fila del CSV se pueda volver a derivar.
"""

from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List, Optional

import numpy as np

from instanton_gluing.core.config import SolverConfig
from instanton_gluing.data.background import BackgroundField, TargetData
from instanton_gluing.data.json_store import read_json, write_json_atomic
from instanton_gluing.gauge.instanton import TwoPointConfig
from instanton_gluing.geometry.rotations import Rotation, rho_inverse_pair, rho_matrix
from instanton_gluing.solver.orientation import CONVENTION
from instanton_gluing.solver.records import GluingData, SolutionRecord
from instanton_gluing.utils import translations as t

FORMAT_TAG = "instanton-gluing/solutions"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class StoredSolutions:
    """Contenido de un archivo de soluciones."""

    L: float
    seed: int
    sub_seed: int
    config: SolverConfig
    records: List[SolutionRecord]
    s_p: Optional[float] = None
    s_q: Optional[float] = None


def _targets_to_dict(target_data: TargetData) -> dict:
    return {
        "s_p": target_data.s_p,
        "s_q": target_data.s_q,
        "m_p": [rho_inverse_pair(m)[0].tolist() for m in target_data.m_p],
        "m_q": [rho_inverse_pair(m)[0].tolist() for m in target_data.m_q],
        "labels_swapped": target_data.labels_swapped,
        "matched_distance": target_data.matched_distance,
        "swapped_distance": target_data.swapped_distance,
        "separation": target_data.separation,
        "ordering": target_data.ordering,
    }


def save_solutions(
    path: Path,
    records: List[SolutionRecord],
    background: BackgroundField,
    cfg: TwoPointConfig,
    config: SolverConfig,
    target_data: Optional[TargetData] = None,
) -> Path:
    """Guarda un conjunto de soluciones con escritura atómica.

    Args:
        path: Ruta del archivo JSON
        records: Registros a guardar
        background: Campo de fondo (se guarda su semilla)
        cfg: Configuración de dos puntos
        config: Parámetros del resolvedor
        target_data: Objetivos del lema en p y q

    Returns:
        La ruta escrita
    """
    document = {
        "format": FORMAT_TAG,
        "version": FORMAT_VERSION,
        "L": cfg.L,
        "seed": background.seed,
        "sub_seed": background.sub_seed,
        "config": asdict(config),
        "targets": _targets_to_dict(target_data) if target_data else None,
        "orientation_convention": CONVENTION,
        "records": [record.to_dict() for record in records],
    }
    return write_json_atomic(Path(path), document)


def _record_from_dict(data: dict) -> SolutionRecord:
    gluing = GluingData(
        y=np.asarray(data["y"], dtype=float),
        lam=float(data["lambda"]),
        m=Rotation(rho_matrix(np.asarray(data["m"], dtype=float))),
    )
    return SolutionRecord(
        gluing=gluing,
        pairing=tuple(data["pairing"]),
        defect_norm=float(data["defect_norm"]),
        sign=int(data["sign"]),
        lambda_over_L2=float(data["lambda_over_L2"]),
        scale_ratio=float(data.get("scale_ratio", float("nan"))),
        lift=int(data.get("lift", 0)),
    )


def load_solutions(path: Path) -> StoredSolutions:
    """Carga un archivo escrito por save_solutions.

    Raises:
        FileNotFoundError: Si el archivo no existe
        ValueError: Si el formato no coincide
    """
    data = read_json(Path(path))
    if not isinstance(data, dict) or data.get("format") != FORMAT_TAG:
        raise ValueError(t.STORE_ERROR_FORMAT.format(path=path))
    targets_data = data.get("targets") or {}
    return StoredSolutions(
        L=float(data["L"]),
        seed=int(data["seed"]),
        sub_seed=int(data["sub_seed"]),
        config=SolverConfig(**data["config"]),
        records=[_record_from_dict(item) for item in data["records"]],
        s_p=targets_data.get("s_p"),
        s_q=targets_data.get("s_q"),
    )
