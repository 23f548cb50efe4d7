"""Instantón estándar, mapa de ángulo de pegado y lema de rango uno."""

from instanton_gluing.gauge.instanton import StdInstanton, TwoPointConfig, f_std, g_map
from instanton_gluing.gauge.rank_one import LemmaKind, LemmaOutcome, RankOnePair, solve_rank_one

__all__ = [
    "StdInstanton",
    "TwoPointConfig",
    "f_std",
    "g_map",
    "LemmaKind",
    "LemmaOutcome",
    "RankOnePair",
    "solve_rank_one",
]
