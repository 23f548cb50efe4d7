"""Resolución, certificación y orientación de los datos de pegado."""

from instanton_gluing.solver.records import CountReport, GluingData, SolutionRecord

__all__ = ["CountReport", "GluingData", "SolutionRecord"]
