"""Exact bijection between pointed nilpotent operators and all operators over GF(q)."""

import json

from ._core import (
    NilbijError,
    degree,
    forward,
    inverse,
    is_nilpotent,
    joyal_forward,
    joyal_inverse,
)
from . import _core

__all__ = [
    "NilbijError",
    "count_nilpotents",
    "degree",
    "fitting",
    "forward",
    "inverse",
    "is_nilpotent",
    "joyal_forward",
    "joyal_inverse",
    "verify_degrees",
    "verify_joyal",
    "verify_theorem",
]


def fitting(q, p, k=1, poly=None):
    """Fitting decomposition of q as a dict with keys W, V, R, S."""
    return json.loads(_core.fitting_json(q, p, k=k, poly=poly))


def count_nilpotents(p, n, k=1, poly=None, budget=1 << 24, shards=1):
    return json.loads(_core.count_nilpotents_json(p, n, k=k, poly=poly, budget=budget, shards=shards))


def verify_theorem(p, n, k=1, poly=None, budget=1 << 24, shards=1):
    return json.loads(_core.verify_theorem_json(p, n, k=k, poly=poly, budget=budget, shards=shards))


def verify_degrees(p, n, k=1, poly=None, budget=1 << 24, shards=1):
    return json.loads(_core.verify_degrees_json(p, n, k=k, poly=poly, budget=budget, shards=shards))


def verify_joyal(n, budget=1 << 24, shards=1):
    return json.loads(_core.verify_joyal_json(n, budget=budget, shards=shards))
