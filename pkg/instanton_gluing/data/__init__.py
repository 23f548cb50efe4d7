"""Campos de fondo y persistencia JSON."""

from instanton_gluing.data.background import BackgroundField, TargetData, make_background, targets
from instanton_gluing.data.json_store import read_json, write_json_atomic

__all__ = [
    "BackgroundField",
    "TargetData",
    "make_background",
    "targets",
    "read_json",
    "write_json_atomic",
]
