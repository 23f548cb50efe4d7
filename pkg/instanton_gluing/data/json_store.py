"""Lectura y escritura atómica de documentos JSON."""

import json
from pathlib import Path
from typing import Any

from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger


def write_json_atomic(path: Path, data: Any) -> Path:
    """Persiste data en path usando escritura atómica.

    Escribe primero en un archivo temporal y después lo renombra, de modo
    que un fallo durante la escritura no deja un archivo a medias.

    Args:
        path: Ruta final del documento
        data: Objeto serializable a JSON

    Returns:
        La ruta escrita

    Raises:
        OSError: Si la escritura falla
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    temp_path = path.with_suffix(".tmp")
    Logger.debug(t.STORE_LOG_WRITING_TEMP.format(path=temp_path))

    with open(temp_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")

    temp_path.replace(path)
    Logger.debug(t.STORE_LOG_SAVED.format(path=path))
    return path


def read_json(path: Path) -> Any:
    """Lee un documento JSON.

    Raises:
        FileNotFoundError: Si el archivo no existe
        json.JSONDecodeError: Si el contenido no es JSON válido
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(t.STORE_ERROR_NOT_FOUND.format(path=path))
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)
