"""Almost contact metric structures induced by G2 structures on frame manifolds.

Specs may be given as a dict, a JSON string, a path to a JSON file, or
"builtin:NAME". Reports come back as dicts whose numbers are exact rational
strings (exact backend) or "%.17g" decimals (float backend).
"""

from __future__ import annotations

import json
import os
from typing import Any, Optional, Sequence, Union

from . import _g2c
from ._g2c import InternalConsistencyError, ValidationError

__all__ = [
    "InternalConsistencyError",
    "ValidationError",
    "analyze",
    "builtin_names",
    "builtin_spec",
    "fuzz",
    "render_text",
    "set_tolerance",
    "tables",
    "tolerance",
    "validate",
]

SpecLike = Union[dict, str, "os.PathLike[str]"]


def _source(spec: SpecLike) -> str:
    if isinstance(spec, dict):
        return json.dumps(spec)
    if isinstance(spec, os.PathLike):
        with open(spec, encoding="utf-8") as fh:
            return fh.read()
    if spec.startswith("builtin:") or spec.lstrip().startswith("{"):
        return spec
    if not os.path.exists(spec) and spec in _g2c.builtin_names():
        return "builtin:" + spec
    with open(spec, encoding="utf-8") as fh:
        return fh.read()


def _strings(values: Optional[Sequence[Any]]) -> Optional[list]:
    return None if values is None else [str(v) for v in values]


def builtin_names() -> list:
    return _g2c.builtin_names()


def builtin_spec(name: str) -> dict:
    return json.loads(_g2c.builtin_spec(name))


def validate(spec: SpecLike) -> dict:
    return json.loads(_g2c.validate(_source(spec)))


def tables(spec: SpecLike, backend: str = "") -> dict:
    return json.loads(_g2c.tables(_source(spec), backend))


def analyze(
    spec: SpecLike,
    xi: Optional[Sequence[Any]] = None,
    u: Optional[Sequence[Any]] = None,
    backend: str = "",
    normalize: bool = False,
) -> dict:
    """Full report for one unit field; xi/u entries may be ints, Fractions or "p/q" strings."""
    return json.loads(_g2c.analyze(_source(spec), _strings(xi), _strings(u), backend, normalize))


def fuzz(spec: SpecLike, trials: int, seed: int, jobs: int = 1) -> dict:
    return json.loads(_g2c.fuzz(_source(spec), trials, seed, jobs))


def render_text(report: dict) -> str:
    return _g2c.render_text(json.dumps(report))


def tolerance() -> float:
    return _g2c.tolerance()


def set_tolerance(tau: float) -> None:
    _g2c.set_tolerance(tau)
