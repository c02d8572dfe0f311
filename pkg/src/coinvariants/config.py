"""Desk-scale guards (largest n per computation).

Defaults ship in ``guards.json`` next to this module. Set the environment
variable ``COINVARIANTS_GUARDS`` to the path of a JSON file to override any
subset of them.
"""
from __future__ import annotations

import json
import os
import warnings
from functools import lru_cache
from importlib import resources


class GuardExceeded(ValueError):
    pass


@lru_cache(maxsize=None)
def guards() -> dict[str, int]:
    data = json.loads(resources.files(__package__).joinpath("guards.json").read_text("utf-8"))
    override = os.environ.get("COINVARIANTS_GUARDS")
    if override:
        with open(override, encoding="utf-8") as fh:
            data.update(json.load(fh))
    return {k: int(v) for k, v in data.items()}


def guard(name: str) -> int:
    return guards()[name]


def check_guard(name: str, n: int, strict: bool = False) -> None:
    """Warn (or raise, with ``strict``) when ``n`` exceeds the guard ``name``."""
    limit = guard(name)
    if n > limit:
        msg = f"n={n} exceeds the desk-scale guard {name}={limit}"
        if strict:
            raise GuardExceeded(msg)
        warnings.warn(msg, RuntimeWarning, stacklevel=3)
