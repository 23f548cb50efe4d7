"""Clases de excepciones para Instanton Gluing.

Este módulo define todas las excepciones personalizadas utilizadas
en la biblioteca y en el ejecutor de experimentos.
"""


class InstantonGluingError(Exception):
    """Excepción base para todos los errores de Instanton Gluing.

    Capturar esta excepción capturará todos los errores específicos
    de la biblioteca.
    """

    pass


class PreconditionError(InstantonGluingError, ValueError):
    """Lanzada cuando una operación recibe argumentos fuera de su dominio.

    Hereda también de ValueError para que el código cliente pueda
    tratarla como un error de valor ordinario.
    """

    pass


class RotationError(InstantonGluingError):
    """Lanzada cuando una matriz no cumple las invariantes de SO(3)."""

    pass


class GaugeSingularityError(InstantonGluingError):
    """Lanzada al evaluar en la singularidad del gauge radial exterior.

    Ocurre al evaluar la curvatura estándar en su propio centro, o el
    mapa del ángulo de pegado en uno de los puntos p, q.
    """

    pass


class LemmaError(InstantonGluingError):
    """Excepción base para errores del lema de rango uno."""

    pass


class DegenerateTargetError(LemmaError):
    """Lanzada cuando el fondo no es genérico en p o en q.

    El llamador debe regenerar el campo de fondo.
    """

    pass


class OracleInconclusiveError(LemmaError):
    """Lanzada cuando el oráculo de fuerza bruta encuentra menos de dos mínimos."""

    pass


class BackgroundError(InstantonGluingError):
    """Excepción base para errores de campos de fondo."""

    pass


class GenericityError(BackgroundError):
    """Lanzada cuando no se obtiene un fondo genérico tras todos los reintentos."""

    pass


class BackgroundFormatError(BackgroundError):
    """Lanzada cuando el JSON de un campo de fondo no tiene el formato esperado."""

    pass


class SolverError(InstantonGluingError):
    """Excepción base para errores del resolvedor de datos de pegado."""

    pass


class NearDegenerateError(SolverError):
    """Lanzada cuando el jacobiano de orientación no es transversal."""

    pass


class CountAnomalyError(SolverError):
    """Lanzada cuando el recuento certificado no es 2/2/1/1 y se pidió modo estricto."""

    pass


class ExperimentError(InstantonGluingError):
    """Lanzada cuando la especificación de un experimento no es válida."""

    pass
