"""Utilidades de rutas para los artefactos de los experimentos.

Este módulo localiza las carpetas de logs y de resultados. Las rutas
relativas se resuelven respecto al directorio de trabajo actual.
"""

import os
from pathlib import Path

OUTPUT_ENV_VAR = "INSTANTON_GLUING_OUT"


def get_base_path() -> Path:
    """Obtiene la ruta base del proyecto.

    Returns:
        Objeto Path apuntando al directorio raíz del proyecto
    """
    return Path(__file__).parent.parent.parent


def get_logs_folder() -> Path:
    """Obtiene la ruta a la carpeta de Logs.

    Returns:
        Objeto Path apuntando al directorio Logs bajo el directorio de trabajo
    """
    return Path.cwd() / "Logs"


def get_output_folder() -> Path:
    """Obtiene la carpeta de resultados por defecto.

    Usa la variable de entorno INSTANTON_GLUING_OUT si está definida;
    si no, la carpeta results bajo el directorio de trabajo.

    Returns:
        Objeto Path apuntando al directorio de resultados
    """
    override = os.environ.get(OUTPUT_ENV_VAR)
    if override:
        return Path(override)
    return Path.cwd() / "results"


def get_backgrounds_folder(out_dir: Path) -> Path:
    """Carpeta donde se guardan los campos de fondo de una ejecución."""
    return Path(out_dir) / "backgrounds"


def get_solutions_folder(out_dir: Path) -> Path:
    """Carpeta donde se guardan los conjuntos de soluciones por celda."""
    return Path(out_dir) / "solutions"
