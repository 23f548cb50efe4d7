"""Punto de entrada principal de Instanton Gluing.

Este módulo lanza la interfaz de línea de órdenes de los experimentos y
se encarga del manejo de errores y de la salida ordenada.
"""

import sys
from typing import List, Optional

from instanton_gluing.utils.logger import Logger
from instanton_gluing.utils import translations as t


def main(argv: Optional[List[str]] = None) -> int:
    """Ejecuta la CLI de experimentos.

    Args:
        argv: Argumentos de la línea de órdenes (por defecto sys.argv[1:])

    Returns:
        Código de salida (0 éxito, 2/3/4 anomalías, 1 error inesperado)
    """
    try:
        from instanton_gluing.experiments.cli import run_cli

        exit_code = run_cli(argv)
        Logger.info(t.APP_FINISHED.format(code=exit_code))
        return exit_code

    except KeyboardInterrupt:
        Logger.info(t.APP_INTERRUPTED)
        print(f"\n{t.APP_INTERRUPTED}")
        return 0

    except Exception as e:
        Logger.error(t.APP_ERROR_RUN.format(error=e), exc_info=True)
        print(t.APP_ERROR_DETAILS.format(error=e))
        print(f"\n{t.APP_ERROR_CHECK_LOGS}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
