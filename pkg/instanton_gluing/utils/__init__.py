"""Módulos de utilidades."""

from instanton_gluing.utils.logger import Logger

__all__ = ["Logger"]
