"""
Módulo de utilidad de logging para Instanton Gluing.

Todas las capas (biblioteca numérica, ejecutor de experimentos y CLI)
registran a través de la fachada Logger, que configura un único logger
"instanton_gluing" con salida en consola y, opcionalmente, en un archivo
diario bajo la carpeta Logs.
"""

import logging
from datetime import datetime
from typing import Optional

LOGGER_NAME = "instanton_gluing"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _default_log_file() -> Optional[str]:
    """Ruta Logs/<dd-mm-aaaa>.log, o None si la carpeta no se puede crear."""
    from instanton_gluing.utils.paths import get_logs_folder

    logs_folder = get_logs_folder()
    try:
        logs_folder.mkdir(parents=True, exist_ok=True)
    except OSError:
        return None
    return str(logs_folder / f"{datetime.now().strftime('%d-%m-%Y')}.log")


class Logger:
    """
    Fachada de logging con métodos de clase.

    La primera llamada a cualquier método de registro configura un logger
    solo de consola si setup() no se ha llamado antes.
    """

    _logger: Optional[logging.Logger] = None
    _is_setup: bool = False

    @classmethod
    def setup(
        cls, level: str = "INFO", log_file: Optional[str] = None, to_file: bool = True
    ) -> None:
        """
        Configura el sistema de logging. Las llamadas posteriores no tienen efecto.

        Args:
            level: Nivel de logging (DEBUG, INFO, WARNING, ERROR)
            log_file: Ruta opcional al archivo de log; por defecto el archivo
                      diario de la carpeta Logs
            to_file: Si es False, solo se registra en consola
        """
        if cls._is_setup:
            return

        numeric_level = getattr(logging, level.upper())
        formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)

        cls._logger = logging.getLogger(LOGGER_NAME)
        cls._logger.setLevel(numeric_level)
        cls._logger.handlers.clear()

        handlers = [logging.StreamHandler()]
        if to_file:
            target = log_file or _default_log_file()
            if target:
                try:
                    handlers.append(logging.FileHandler(target, encoding="utf-8"))
                except OSError:
                    pass

        for handler in handlers:
            handler.setLevel(numeric_level)
            handler.setFormatter(formatter)
            cls._logger.addHandler(handler)

        cls._is_setup = True

    @classmethod
    def reset(cls) -> None:
        """Cierra los handlers y permite volver a llamar a setup."""
        if cls._logger:
            for handler in list(cls._logger.handlers):
                handler.close()
                cls._logger.removeHandler(handler)
        cls._logger = None
        cls._is_setup = False

    @classmethod
    def _log(cls, level: int, message: str, exc_info: bool = False) -> None:
        if not cls._is_setup:
            cls.setup(to_file=False)
        cls._logger.log(level, message, exc_info=exc_info)

    @classmethod
    def debug(cls, message: str) -> None:
        """Registra detalle por arranque o por iteración."""
        cls._log(logging.DEBUG, message)

    @classmethod
    def info(cls, message: str) -> None:
        """Registra resúmenes por celda y por ejecución."""
        cls._log(logging.INFO, message)

    @classmethod
    def warning(cls, message: str) -> None:
        """Registra anomalías de recuento, signo u oráculo."""
        cls._log(logging.WARNING, message)

    @classmethod
    def error(cls, message: str, exc_info: bool = False) -> None:
        """
        Registra mensaje de error.

        Args:
            message: Mensaje de error a registrar
            exc_info: Incluir información de excepción si es True
        """
        cls._log(logging.ERROR, message, exc_info=exc_info)
