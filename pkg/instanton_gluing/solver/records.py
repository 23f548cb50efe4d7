"""Datos de pegado, registros de solución y recuento por emparejamiento."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np

from instanton_gluing.data.background import BackgroundField
from instanton_gluing.gauge.instanton import StdInstanton, TwoPointConfig, f_std
from instanton_gluing.geometry.rotations import Rotation, rho_inverse_pair, rotation_distance

Pairing = Tuple[int, int]

PAIRINGS: Tuple[Pairing, ...] = ((1, 1), (1, 2), (2, 1), (2, 2))
EXPECTED_COUNTS: Dict[Pairing, int] = {(1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): 1}


@dataclass(frozen=True, eq=False)
class GluingData:
    """Centro y ∈ R⁴, escala λ > 0 y ángulo de pegado m ∈ SO(3)."""

    y: np.ndarray
    lam: float
    m: Rotation

    def instanton(self) -> StdInstanton:
        return StdInstanton(center=self.y, scale=self.lam, gluing_angle=self.m)


@dataclass(frozen=True, eq=False)
class SolutionRecord:
    """Datos de pegado que hacen reducible la curvatura en p y en q.

    Atributos:
        gluing: Datos de pegado (y, λ, m)
        pairing: Emparejamiento (i, j) de objetivos M_i(p), M_j(q)
        defect_norm: Máximo de σ₂/σ₁ de las dos curvaturas pegadas
        sign: Signo de orientación (+1, -1; 0 si no es transversal)
        lambda_over_L2: λ/L²
        scale_ratio: λ/((L² + |y_I|²)·√s_p)
        lift: Signo del levantamiento, g(y) = lift·g_T
    """

    gluing: GluingData
    pairing: Pairing
    defect_norm: float
    sign: int
    lambda_over_L2: float
    scale_ratio: float = float("nan")
    lift: int = 0

    def sort_key(self) -> tuple:
        return (self.pairing, self.gluing.lam, tuple(np.round(self.gluing.y, 12)))

    def to_dict(self) -> dict:
        """Documento JSON; m se guarda como su levantamiento canónico."""
        quaternion, _ = rho_inverse_pair(self.gluing.m)
        return {
            "y": self.gluing.y.tolist(),
            "lambda": self.gluing.lam,
            "m": quaternion.tolist(),
            "pairing": list(self.pairing),
            "sign": self.sign,
            "defect_norm": self.defect_norm,
            "lambda_over_L2": self.lambda_over_L2,
            "scale_ratio": self.scale_ratio,
            "lift": self.lift,
        }


def glued_curvatures(
    background: BackgroundField, cfg: TwoPointConfig, gluing: GluingData
) -> Tuple[np.ndarray, np.ndarray]:
    """F₀ + F_std evaluado en p y en q."""
    inst = gluing.instanton()
    return (
        background.evaluate(cfg.p) + f_std(inst, cfg.p),
        background.evaluate(cfg.q) + f_std(inst, cfg.q),
    )


def joint_distance(first: GluingData, second: GluingData) -> float:
    """Métrica conjunta ‖Δy‖ + |Δλ| + ángulo(m₁, m₂)."""
    return (
        float(np.linalg.norm(first.y - second.y))
        + abs(first.lam - second.lam)
        + rotation_distance(first.m, second.m)
    )


def dedupe_records(records: Iterable[SolutionRecord], radius: float) -> List[SolutionRecord]:
    """Conserva una solución por grupo a distancia conjunta < radius, ordenadas."""
    kept: List[SolutionRecord] = []
    for record in sorted(records, key=lambda item: item.defect_norm):
        if all(
            record.pairing != other.pairing
            or joint_distance(record.gluing, other.gluing) >= radius
            for other in kept
        ):
            kept.append(record)
    return sorted(kept, key=SolutionRecord.sort_key)


@dataclass(frozen=True)
class CountReport:
    """Recuento por emparejamiento frente al desglose esperado 1/2/2/1."""

    counts: Dict[Pairing, int] = field(default_factory=dict)

    @classmethod
    def from_records(cls, records: Iterable[SolutionRecord]) -> "CountReport":
        counts = {pairing: 0 for pairing in PAIRINGS}
        for record in records:
            counts[record.pairing] = counts.get(record.pairing, 0) + 1
        return cls(counts=counts)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def anomalies(self) -> List[Tuple[Pairing, int, int]]:
        """Lista de (emparejamiento, encontrado, esperado) que no coinciden."""
        return [
            (pairing, self.counts.get(pairing, 0), expected)
            for pairing, expected in EXPECTED_COUNTS.items()
            if self.counts.get(pairing, 0) != expected
        ]

    @property
    def is_expected(self) -> bool:
        return not self.anomalies

    def to_dict(self) -> dict:
        return {f"c{i}{j}": self.counts.get((i, j), 0) for i, j in PAIRINGS}
