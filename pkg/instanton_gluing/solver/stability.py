"""Barrido diádico de L y umbral de estabilidad del recuento.

Para un campo fijo, el recuento 1/2/2/1 solo se garantiza para L
suficientemente pequeña: con K y α fijos, la preimagen lejana de los
emparejamientos (1,2) y (2,1) puede quedar con λ > K·L^α. El umbral es
la mayor L del barrido tal que todas las L menores o iguales del mismo
barrido dan el recuento esperado.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from instanton_gluing.core.config import SolverConfig
from instanton_gluing.core.exceptions import DegenerateTargetError, PreconditionError
from instanton_gluing.data.background import BackgroundField
from instanton_gluing.gauge.instanton import TwoPointConfig
from instanton_gluing.solver.enumeration import enumerate_solutions
from instanton_gluing.solver.records import CountReport
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

DEGENERATE_COUNT = -1


def dyadic_L_values(L_max: float, depth: int) -> List[float]:
    """[L_max, L_max/2, …, L_max/2^(depth−1)]."""
    if not L_max > 0 or depth < 1:
        raise PreconditionError(t.STABILITY_ERROR_SWEEP.format(L=L_max, depth=depth))
    return [L_max / 2**k for k in range(depth)]


def stability_threshold(L_values: Sequence[float], expected: Sequence[bool]) -> Optional[float]:
    """Mayor L con recuento esperado en ella y en todas las L menores.

    Returns:
        El umbral, o None si la menor L del barrido ya falla
    """
    threshold = None
    for L, ok in sorted(zip(L_values, expected)):
        if not ok:
            break
        threshold = L
    return threshold


@dataclass(frozen=True)
class StabilitySweep:
    """Recuentos de un campo a lo largo de un barrido de L.

    Atributos:
        seed: Semilla del campo
        alpha: Exponente de la cota de admisibilidad
        L_values: Valores de L en orden descendente
        totals: Recuento total por L (−1 si los objetivos son degenerados)
        expected: True donde el desglose es 1/2/2/1
    """

    seed: int
    alpha: float
    L_values: Tuple[float, ...]
    totals: Tuple[int, ...]
    expected: Tuple[bool, ...]

    @classmethod
    def from_reports(
        cls,
        seed: int,
        alpha: float,
        L_values: Sequence[float],
        reports: Sequence[Optional[CountReport]],
    ) -> "StabilitySweep":
        return cls(
            seed=seed,
            alpha=alpha,
            L_values=tuple(L_values),
            totals=tuple(DEGENERATE_COUNT if r is None else r.total for r in reports),
            expected=tuple(r is not None and r.is_expected for r in reports),
        )

    @property
    def threshold(self) -> Optional[float]:
        return stability_threshold(self.L_values, self.expected)

    def is_stable_at(self, L: float) -> bool:
        threshold = self.threshold
        return threshold is not None and L <= threshold

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "alpha": self.alpha,
            "L": list(self.L_values),
            "count": list(self.totals),
            "expected": list(self.expected),
            "threshold": self.threshold,
        }


def sweep_reports(
    background: BackgroundField, L_values: Sequence[float], config: SolverConfig
) -> List[Optional[CountReport]]:
    """Recuento por emparejamiento en cada L; None si los objetivos son degenerados."""
    reports: List[Optional[CountReport]] = []
    for L in L_values:
        try:
            records = enumerate_solutions(background, TwoPointConfig(L), config)
        except DegenerateTargetError as e:
            Logger.warning(t.STABILITY_WARNING_DEGENERATE.format(seed=background.seed, L=L, error=e))
            reports.append(None)
            continue
        reports.append(CountReport.from_records(records))
    return reports


def count_sweep(
    background: BackgroundField,
    L_values: Sequence[float],
    config: Optional[SolverConfig] = None,
) -> StabilitySweep:
    """Enumera en cada L del barrido y registra el umbral de estabilidad.

    Args:
        background: Campo de fondo
        L_values: Valores de L en orden descendente
        config: Parámetros del resolvedor

    Returns:
        StabilitySweep con recuentos y umbral
    """
    config = config or SolverConfig.default()
    sweep = StabilitySweep.from_reports(
        background.seed, config.alpha, L_values, sweep_reports(background, L_values, config)
    )
    log_threshold(sweep)
    return sweep


def log_threshold(sweep: StabilitySweep) -> None:
    if sweep.threshold is None:
        Logger.warning(
            t.STABILITY_WARNING_NO_THRESHOLD.format(
                seed=sweep.seed, alpha=sweep.alpha, L=min(sweep.L_values)
            )
        )
    else:
        Logger.info(
            t.STABILITY_LOG_THRESHOLD.format(
                seed=sweep.seed, alpha=sweep.alpha, threshold=sweep.threshold
            )
        )
