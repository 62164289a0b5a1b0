"""Shared memoization.

``LGRDUAL_CACHE_SIZE`` sets the per-function LRU size; ``0`` disables
caching, ``none`` (the default) leaves it unbounded.
"""

from __future__ import annotations

import functools
import os

ENV_VAR = "LGRDUAL_CACHE_SIZE"


def cache_size() -> int | None:
    raw = os.environ.get(ENV_VAR, "none").strip().lower()
    if raw in ("", "none", "unbounded"):
        return None
    size = int(raw)
    if size < 0:
        raise ValueError(f"{ENV_VAR} must be non-negative, got {raw}")
    return size


def memoize(func):
    # functools.lru_cache keeps its bookkeeping consistent under threads
    return functools.lru_cache(maxsize=cache_size())(func)
