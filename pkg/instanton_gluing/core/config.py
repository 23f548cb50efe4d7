"""Gestión de configuración para Instanton Gluing.

Este módulo proporciona las dataclasses SolverConfig y LemmaConfig para
gestionar los parámetros numéricos, con soporte para cargar desde
archivos JSON y validación.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict

from instanton_gluing.utils import translations as t


def _read_json_config(path: str) -> Dict[str, Any]:
    """Lee un archivo de configuración JSON.

    Args:
        path: Ruta al archivo de configuración (.json)

    Returns:
        Diccionario con los valores leídos

    Raises:
        FileNotFoundError: Si el archivo de configuración no existe
        ValueError: Si el formato del archivo no es soportado o el contenido es inválido
    """
    file_path = Path(path)

    if not file_path.exists():
        raise FileNotFoundError(t.CONFIG_ERROR_FILE_NOT_FOUND.format(path=path))

    suffix = file_path.suffix.lower()

    if suffix != ".json":
        raise ValueError(t.CONFIG_ERROR_UNSUPPORTED_FORMAT.format(suffix=suffix))

    with open(file_path, "r", encoding="utf-8") as f:
        data = json.load(f)

    if not isinstance(data, dict):
        raise ValueError(t.CONFIG_ERROR_NOT_OBJECT.format(path=path))

    return data


@dataclass(frozen=True)
class SolverConfig:
    """Parámetros del resolvedor de datos de pegado.

    Atributos:
        K: Constante de la cota de admisibilidad λ ≤ K·L^α
        alpha: Exponente de la cota, estrictamente en (0, 2)
        newton_tol: Tolerancia de Newton sobre la norma del residuo
        max_newton_iters: Iteraciones máximas de Newton por arranque
        grid_density: Puntos por eje de la rejilla de arranques en el disco y_I
        dedupe_radius: Radio de deduplicación en la métrica conjunta (y, λ, ángulo)
        certify_tol: Cota relativa del defecto σ₂/σ₁ para certificar una solución
        fd_step: Paso de diferencias finitas del jacobiano de orientación
        rel_tol: Tolerancia relativa de la estratificación por valores singulares
        workers: Procesos para paralelizar emparejamientos y arranques
    """

    K: float = 1.0
    alpha: float = 1.0
    newton_tol: float = 1e-12
    max_newton_iters: int = 50
    grid_density: int = 16
    dedupe_radius: float = 1e-6
    certify_tol: float = 1e-9
    fd_step: float = 1e-5
    rel_tol: float = 1e-8
    workers: int = 1

    def __post_init__(self):
        """Valida los valores de configuración después de la inicialización."""
        self._validate()

    def _validate(self) -> None:
        """Valida los parámetros de configuración.

        Raises:
            ValueError: Si algún valor de configuración es inválido
        """
        if self.K <= 0:
            raise ValueError(t.CONFIG_ERROR_POSITIVE.format(name="K", value=self.K))

        if not 0.0 < self.alpha < 2.0:
            raise ValueError(t.CONFIG_ERROR_ALPHA_RANGE.format(value=self.alpha))

        for name in ("newton_tol", "dedupe_radius", "certify_tol", "fd_step"):
            value = getattr(self, name)
            if value <= 0:
                raise ValueError(t.CONFIG_ERROR_POSITIVE.format(name=name, value=value))

        if not 0.0 < self.rel_tol < 0.5:
            raise ValueError(t.CONFIG_ERROR_REL_TOL_RANGE.format(value=self.rel_tol))

        for name in ("max_newton_iters", "grid_density", "workers"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(t.CONFIG_ERROR_COUNT.format(name=name, value=value))

    def cutoff(self, L: float) -> float:
        """Devuelve la escala máxima admisible K·L^α."""
        return self.K * L**self.alpha

    @classmethod
    def from_file(cls, path: str) -> "SolverConfig":
        """Carga la configuración desde un archivo JSON.

        Args:
            path: Ruta al archivo de configuración (.json)

        Returns:
            Instancia de SolverConfig cargada desde el archivo

        Raises:
            FileNotFoundError: Si el archivo de configuración no existe
            ValueError: Si el formato del archivo no es soportado o el contenido es inválido
        """
        return cls(**_read_json_config(path))

    @classmethod
    def default(cls) -> "SolverConfig":
        """Crea configuración con valores por defecto.

        Returns:
            Instancia de SolverConfig con valores por defecto
        """
        return cls()


@dataclass(frozen=True)
class LemmaConfig:
    """Parámetros del lema de rango uno y de su oráculo.

    Atributos:
        rel_tol: Tolerancia relativa de la estratificación
        oracle_starts: Arranques Haar del oráculo multi-arranque
        dedupe_angle: Ángulo geodésico por debajo del cual dos mínimos coinciden
        residual_tol: Cota relativa σ₂(P + sM) ≤ residual_tol·σ₁(P)
    """

    rel_tol: float = 1e-8
    oracle_starts: int = 1000
    dedupe_angle: float = 1e-4
    residual_tol: float = 1e-9

    def __post_init__(self):
        """Valida los valores de configuración después de la inicialización."""
        self._validate()

    def _validate(self) -> None:
        """Valida los parámetros de configuración.

        Raises:
            ValueError: Si algún valor de configuración es inválido
        """
        if not 0.0 < self.rel_tol < 0.5:
            raise ValueError(t.CONFIG_ERROR_REL_TOL_RANGE.format(value=self.rel_tol))

        if int(self.oracle_starts) != self.oracle_starts or self.oracle_starts < 1:
            raise ValueError(
                t.CONFIG_ERROR_COUNT.format(name="oracle_starts", value=self.oracle_starts)
            )

        for name in ("dedupe_angle", "residual_tol"):
            value = getattr(self, name)
            if value <= 0:
                raise ValueError(t.CONFIG_ERROR_POSITIVE.format(name=name, value=value))

    @classmethod
    def from_file(cls, path: str) -> "LemmaConfig":
        """Carga la configuración desde un archivo JSON.

        Args:
            path: Ruta al archivo de configuración (.json)

        Returns:
            Instancia de LemmaConfig cargada desde el archivo
        """
        return cls(**_read_json_config(path))

    @classmethod
    def default(cls) -> "LemmaConfig":
        """Crea configuración con valores por defecto."""
        return cls()
