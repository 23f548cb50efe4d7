"""Barridos de experimentos, informes CSV y línea de órdenes."""

from instanton_gluing.experiments.report import ExperimentReport, ExperimentRow

__all__ = ["ExperimentReport", "ExperimentRow"]
