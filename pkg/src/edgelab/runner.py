"""Bounded-concurrency map over sample indices.

Per-sample work runs in worker threads (numpy and LAPACK release the GIL)
behind an ``asyncio.Semaphore``.  Results come back ordered by sample
index, so any reduction over them is independent of the thread count.
"""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Generic, TypeVar

import numpy as np
import scipy.linalg

from edgelab.errors import EdgeLabError

logger = logging.getLogger(__name__)

T = TypeVar("T")

_SAMPLE_ERRORS: tuple[type[Exception], ...] = (
    EdgeLabError,
    np.linalg.LinAlgError,
    scipy.linalg.LinAlgError,
)


@dataclass(frozen=True, slots=True)
class SampleOutcome(Generic[T]):
    index: int
    value: T | None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True, slots=True)
class SampleBatch(Generic[T]):
    outcomes: list[SampleOutcome[T]]

    @property
    def values(self) -> list[T]:
        return [o.value for o in self.outcomes if o.error is None and o.value is not None]

    @property
    def failures(self) -> int:
        return sum(1 for o in self.outcomes if o.error is not None)

    @property
    def succeeded(self) -> int:
        return len(self.outcomes) - self.failures


def _run_one(fn: Callable[[int], T], index: int) -> SampleOutcome[T]:
    try:
        return SampleOutcome(index, fn(index))
    except _SAMPLE_ERRORS as exc:
        logger.warning("sample %d failed: %s", index, exc)
        return SampleOutcome(index, None, f"{type(exc).__name__}: {exc}")


async def _map_async(fn: Callable[[int], T], count: int, threads: int) -> list[SampleOutcome[T]]:
    semaphore = asyncio.Semaphore(threads)

    async def guarded(index: int) -> SampleOutcome[T]:
        async with semaphore:
            return await asyncio.to_thread(_run_one, fn, index)

    return list(await asyncio.gather(*(guarded(i) for i in range(count))))


def map_samples(fn: Callable[[int], T], count: int, threads: int = 1) -> SampleBatch[T]:
    """Evaluate ``fn(i)`` for i in [0, count), at most ``threads`` at a time.

    Failures of the numerical kind are captured per sample; anything else
    propagates.
    """
    if count < 0 or threads < 1:
        raise ValueError(f"need count >= 0 and threads >= 1, got {count}, {threads}")
    if threads == 1:
        return SampleBatch([_run_one(fn, i) for i in range(count)])
    return SampleBatch(asyncio.run(_map_async(fn, count, threads)))
