"""Tracing wrapper for experiment entry points."""

from __future__ import annotations

import functools
import logging
import time
from collections.abc import Callable
from typing import Any, Protocol, TypeVar, cast

from edgelab.obs.setup import current_run_id

R = TypeVar("R", covariant=True)

logger = logging.getLogger(__name__)


class TracedCallable(Protocol[R]):
    """A callable that carries tracing metadata as a discoverable attribute."""

    __trace_meta__: dict[str, Any]

    def __call__(self, *args: Any, **kwargs: Any) -> R: ...


def traced_experiment(
    fn: Callable[..., R],
    *,
    name: str | None = None,
    metadata: dict[str, Any] | None = None,
) -> TracedCallable[R]:
    """Log start, finish, elapsed time and failures of *fn* under the run id."""
    exp_name = name if name is not None else str(getattr(fn, "__name__", "experiment"))
    meta = metadata or {}

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> R:
        started = time.perf_counter()
        logger.info("experiment %s started (run %s)", exp_name, current_run_id())
        try:
            result = fn(*args, **kwargs)
        except Exception:
            logger.warning(
                "experiment %s failed after %.3fs", exp_name, time.perf_counter() - started
            )
            raise
        failures = getattr(result, "failures", 0)
        logger.info(
            "experiment %s finished in %.3fs with %d failed samples",
            exp_name,
            time.perf_counter() - started,
            failures,
        )
        return result

    traced = cast(TracedCallable[R], wrapper)
    traced.__trace_meta__ = {"experiment": exp_name, **meta}
    return traced
