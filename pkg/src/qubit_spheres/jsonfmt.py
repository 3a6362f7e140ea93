"""Deterministic JSON number formatting shared by the CLI and reports."""

from __future__ import annotations

import json


def sig15(x: float) -> float:
    """Round to 15 significant decimal digits; normalizes -0.0 to 0.0."""
    return float(f"{float(x):.15g}") + 0.0


def dumps(obj) -> str:
    """Serialize with fixed layout: insertion-ordered keys, 2-space indent."""
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"
