"""Campos de fondo sintéticos y objetivos de reducibilidad.

Un BackgroundField es un polinomio matricial x ↦ F₀(x) de grado 0, 1 o 2
que hace el papel de la curvatura del fondo en el gauge radial del
origen. targets() aplica el lema de rango uno en p y en q.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Tuple

import numpy as np

from instanton_gluing.core.exceptions import (
    BackgroundFormatError,
    DegenerateTargetError,
    GenericityError,
    PreconditionError,
)
from instanton_gluing.data.json_store import read_json, write_json_atomic
from instanton_gluing.gauge.instanton import TwoPointConfig, as_point4
from instanton_gluing.gauge.rank_one import LemmaKind, solve_rank_one
from instanton_gluing.geometry.linalg3 import classify_stratum
from instanton_gluing.geometry.rotations import Rotation, rotation_distance
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger

FORMAT_TAG = "instanton-gluing/background"
FORMAT_VERSION = 1
MAX_RETRIES = 100
MAX_DEGREE = 2
ORDERING_CONVENTION = "M1: n1 >= 0 in reduced coordinates at p; q labels matched by proximity"


@dataclass(frozen=True, eq=False)
class BackgroundField:
    """Polinomio matricial F₀(x) = A + B·x + C·x·x.

    Atributos:
        seed: Semilla del generador
        sub_seed: Intento en el que se obtuvo un campo genérico
        degree: Grado del polinomio (0, 1 o 2)
        amplitude: Amplitud de los coeficientes uniformes
        constant: Término constante A, forma (3, 3)
        linear: Coeficientes B, forma (3, 3, 4)
        quadratic: Coeficientes C, forma (3, 3, 4, 4)
    """

    seed: int
    sub_seed: int
    degree: int
    amplitude: float
    constant: np.ndarray
    linear: np.ndarray
    quadratic: np.ndarray

    def __post_init__(self):
        shapes = {"constant": (3, 3), "linear": (3, 3, 4), "quadratic": (3, 3, 4, 4)}
        for name, shape in shapes.items():
            value = np.array(getattr(self, name), dtype=float)
            if value.shape != shape or not np.all(np.isfinite(value)):
                raise BackgroundFormatError(
                    t.BACKGROUND_ERROR_COEFFICIENTS.format(name=name, shape=value.shape)
                )
            object.__setattr__(self, name, value)

    @classmethod
    def constant_field(cls, matrix, seed: int = 0) -> "BackgroundField":
        """Campo constante igual a matrix en todo punto."""
        matrix = np.asarray(matrix, dtype=float)
        return cls(
            seed=seed,
            sub_seed=0,
            degree=0,
            amplitude=float(np.max(np.abs(matrix))),
            constant=matrix,
            linear=np.zeros((3, 3, 4)),
            quadratic=np.zeros((3, 3, 4, 4)),
        )

    def evaluate(self, x) -> np.ndarray:
        """Evalúa F₀ en x."""
        x = np.asarray(x, dtype=float)
        return (
            self.constant
            + np.einsum("abk,k->ab", self.linear, x)
            + np.einsum("abkl,k,l->ab", self.quadratic, x, x)
        )

    def to_dict(self) -> dict:
        """Documento JSON del campo."""
        return {
            "format": FORMAT_TAG,
            "version": FORMAT_VERSION,
            "seed": self.seed,
            "sub_seed": self.sub_seed,
            "degree": self.degree,
            "amplitude": self.amplitude,
            "constant": self.constant.tolist(),
            "linear": self.linear.tolist(),
            "quadratic": self.quadratic.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BackgroundField":
        """Reconstruye un campo a partir de su documento JSON.

        Raises:
            BackgroundFormatError: Si faltan claves o el formato no coincide
        """
        if not isinstance(data, dict) or data.get("format") != FORMAT_TAG:
            raise BackgroundFormatError(t.BACKGROUND_ERROR_FORMAT_TAG)
        if data.get("version") != FORMAT_VERSION:
            raise BackgroundFormatError(
                t.BACKGROUND_ERROR_VERSION.format(version=data.get("version"))
            )
        try:
            return cls(
                seed=int(data["seed"]),
                sub_seed=int(data["sub_seed"]),
                degree=int(data["degree"]),
                amplitude=float(data["amplitude"]),
                constant=data["constant"],
                linear=data["linear"],
                quadratic=data["quadratic"],
            )
        except (KeyError, TypeError, ValueError) as e:
            raise BackgroundFormatError(t.BACKGROUND_ERROR_FIELDS.format(error=e)) from e


def eval_background(f: BackgroundField, x) -> np.ndarray:
    """Matriz de curvatura del fondo en x."""
    return f.evaluate(as_point4(x))


def _draw_field(seed: int, attempt: int, degree: int, amplitude: float) -> BackgroundField:
    rng = np.random.default_rng([seed, attempt])
    constant = rng.uniform(-amplitude, amplitude, (3, 3))
    linear = rng.uniform(-amplitude, amplitude, (3, 3, 4)) if degree >= 1 else np.zeros((3, 3, 4))
    quadratic = (
        rng.uniform(-amplitude, amplitude, (3, 3, 4, 4))
        if degree >= 2
        else np.zeros((3, 3, 4, 4))
    )
    return BackgroundField(
        seed=seed,
        sub_seed=attempt,
        degree=degree,
        amplitude=amplitude,
        constant=constant,
        linear=linear,
        quadratic=quadratic,
    )


def _is_generic_at(f: BackgroundField, points: Iterable[np.ndarray], rel_tol: float) -> bool:
    return all(classify_stratum(f.evaluate(x), rel_tol).is_generic for x in points)


def make_background(
    seed: int,
    degree: int = 2,
    amplitude: float = 1.0,
    configs: Iterable[TwoPointConfig] = (),
    rel_tol: float = 1e-8,
    max_retries: int = MAX_RETRIES,
) -> BackgroundField:
    """Genera un campo de fondo genérico reproducible.

    Los coeficientes son uniformes en [−amplitude, amplitude] y se extraen
    de default_rng([seed, intento]). Si el campo no es genérico en p y q
    para alguna configuración (o en el origen si no se da ninguna) se
    vuelve a sortear con el siguiente intento.

    Args:
        seed: Semilla entera
        degree: Grado del polinomio, de 0 a 2
        amplitude: Amplitud positiva de los coeficientes
        configs: Configuraciones de dos puntos a certificar
        rel_tol: Tolerancia de estratificación
        max_retries: Número máximo de intentos

    Returns:
        BackgroundField con certificado de genericidad

    Raises:
        PreconditionError: Si amplitude o degree no son válidos
        GenericityError: Si ningún intento produce un campo genérico
    """
    if not amplitude > 0:
        raise PreconditionError(t.BACKGROUND_ERROR_AMPLITUDE.format(amplitude=amplitude))
    if degree not in range(MAX_DEGREE + 1):
        raise PreconditionError(t.BACKGROUND_ERROR_DEGREE.format(degree=degree))

    points = [x for cfg in configs for x in (cfg.p, cfg.q)] or [np.zeros(4)]

    for attempt in range(max_retries):
        field = _draw_field(seed, attempt, degree, amplitude)
        if _is_generic_at(field, points, rel_tol):
            if attempt:
                Logger.info(t.BACKGROUND_LOG_RESAMPLED.format(seed=seed, attempts=attempt + 1))
            return field
        Logger.debug(t.BACKGROUND_DEBUG_NOT_GENERIC.format(seed=seed, attempt=attempt))

    raise GenericityError(t.BACKGROUND_ERROR_GENERICITY.format(seed=seed, retries=max_retries))


@dataclass(frozen=True, eq=False)
class TargetData:
    """Objetivos del lema en p y en q.

    Atributos:
        s_p, s_q: Tamaños σ₂(F₀(p)) y σ₂(F₀(q))
        m_p: Rotaciones (M₁(p), M₂(p))
        m_q: Rotaciones (M₁(q), M₂(q)) con etiquetas emparejadas con p
        labels_swapped: True si las etiquetas de q se intercambiaron
        matched_distance: Suma de distancias del emparejamiento elegido
        swapped_distance: Suma de distancias del emparejamiento descartado
        separation: Distancia entre M₁(p) y M₂(p)
        ordering: Descripción de la convención de etiquetas
    """

    s_p: float
    s_q: float
    m_p: Tuple[Rotation, Rotation]
    m_q: Tuple[Rotation, Rotation]
    labels_swapped: bool
    matched_distance: float
    swapped_distance: float
    separation: float
    ordering: str = ORDERING_CONVENTION

    def target_rotation(self, i: int, j: int) -> Rotation:
        """Rotación objetivo M_i(p)⁻¹·M_j(q) para el emparejamiento (i, j)."""
        return self.m_p[i - 1].inverse() @ self.m_q[j - 1]

    @property
    def is_ambiguous(self) -> bool:
        """El emparejamiento p↔q no se distingue con claridad."""
        return self.matched_distance >= 0.5 * self.swapped_distance


def targets(f: BackgroundField, cfg: TwoPointConfig, rel_tol: float = 1e-8) -> TargetData:
    """Aplica el lema de rango uno a F₀(p) y F₀(q).

    M₁ es la solución con n₁ ≥ 0 en coordenadas reducidas; las etiquetas
    de q se emparejan con las de p por proximidad.

    Args:
        f: Campo de fondo
        cfg: Configuración de dos puntos
        rel_tol: Tolerancia de estratificación

    Returns:
        TargetData con diagnóstico del emparejamiento

    Raises:
        DegenerateTargetError: Si el lema no da dos soluciones en p o en q
    """
    outcomes = {}
    for name, point in (("p", cfg.p), ("q", cfg.q)):
        outcome = solve_rank_one(f.evaluate(point), rel_tol)
        if outcome.kind is not LemmaKind.TWO_DISTINCT:
            raise DegenerateTargetError(
                t.BACKGROUND_ERROR_DEGENERATE_TARGET.format(point=name, kind=outcome.kind.value)
            )
        outcomes[name] = outcome

    m_p = tuple(pair.m for pair in outcomes["p"].pairs)
    m_q = tuple(pair.m for pair in outcomes["q"].pairs)

    keep = rotation_distance(m_p[0], m_q[0]) + rotation_distance(m_p[1], m_q[1])
    swap = rotation_distance(m_p[0], m_q[1]) + rotation_distance(m_p[1], m_q[0])
    swapped = swap < keep
    if swapped:
        m_q = (m_q[1], m_q[0])

    data = TargetData(
        s_p=outcomes["p"].pairs[0].s,
        s_q=outcomes["q"].pairs[0].s,
        m_p=m_p,
        m_q=m_q,
        labels_swapped=swapped,
        matched_distance=min(keep, swap),
        swapped_distance=max(keep, swap),
        separation=rotation_distance(m_p[0], m_p[1]),
    )
    if data.is_ambiguous:
        Logger.warning(
            t.BACKGROUND_WARNING_AMBIGUOUS_LABELS.format(
                matched=data.matched_distance, swapped=data.swapped_distance, L=cfg.L
            )
        )
    return data


def save_background(f: BackgroundField, path: Path) -> Path:
    """Guarda el campo como JSON con escritura atómica."""
    return write_json_atomic(Path(path), f.to_dict())


def load_background(path: Path) -> BackgroundField:
    """Carga un campo guardado con save_background.

    Raises:
        FileNotFoundError: Si el archivo no existe
        BackgroundFormatError: Si el contenido no es un campo válido
    """
    try:
        data = read_json(Path(path))
    except json.JSONDecodeError as e:
        raise BackgroundFormatError(t.BACKGROUND_ERROR_FIELDS.format(error=e)) from e
    return BackgroundField.from_dict(data)
