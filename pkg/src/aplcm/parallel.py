"""Process-pool map whose result order never depends on the worker count."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from .errors import InvalidInputError

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    raw = os.environ.get("WORKERS", "").strip()
    if not raw:
        return os.cpu_count() or 1
    try:
        w = int(raw)
    except ValueError:
        raise InvalidInputError(f"WORKERS must be a positive integer, got {raw!r}") from None
    if w < 1:
        raise InvalidInputError(f"WORKERS must be a positive integer, got {raw!r}")
    return w


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Map ``fn`` over ``items`` and return results in input order.

    ``fn`` must be a picklable module-level function when ``workers > 1``.
    """
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunksize = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))
