"""
Instanton Gluing - Recuento de datos de pegado de instantones.

Este paquete enumera las soluciones de la ecuación de pegado de dos
instantones en un fondo de curvatura fijado, las certifica, calcula su
signo de orientación y las contrasta con un oráculo global.
"""

__version__ = "1.0.0"
__author__ = "Instanton Gluing Team"

from instanton_gluing.core.config import LemmaConfig, SolverConfig

__all__ = ["LemmaConfig", "SolverConfig"]
