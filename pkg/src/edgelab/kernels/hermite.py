"""Orthonormal Hermite functions by upward recurrence.

phi_0(x) = pi^{-1/4} e^{-x^2/2},
phi_k(x) = x sqrt(2/k) phi_{k-1}(x) - sqrt((k-1)/k) phi_{k-2}(x).

The recurrence runs on scaled values with a per-point log scale, so it
survives arguments where e^{-x^2/2} underflows and orders up to 1e5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import overload

import numpy as np
from numpy.typing import ArrayLike, NDArray

from edgelab.errors import InvalidOrderError

_RESCALE_AT = 1e100
_LOG_PI_QUARTER = 0.25 * math.log(math.pi)


@dataclass(slots=True)
class _ScaledState:
    prev: NDArray[np.float64]
    cur: NDArray[np.float64]
    log_scale: NDArray[np.float64]
    acc: NDArray[np.float64]

    def rescale(self) -> None:
        peak = np.maximum(np.abs(self.cur), np.abs(self.prev))
        big = peak > _RESCALE_AT
        if np.any(big):
            s = np.where(big, peak, 1.0)
            self.prev /= s
            self.cur /= s
            self.acc /= s * s
            self.log_scale += np.log(s)

    def step(self, j: int, x: NDArray[np.float64]) -> None:
        nxt = x * math.sqrt(2.0 / j) * self.cur - math.sqrt((j - 1) / j) * self.prev
        self.prev, self.cur = self.cur, nxt
        self.rescale()


def _unscale(p: NDArray[np.float64], log_scale: NDArray[np.float64]) -> NDArray[np.float64]:
    with np.errstate(divide="ignore"):
        out: NDArray[np.float64] = np.sign(p) * np.exp(np.log(np.abs(p)) + log_scale)
    return out


def _start(x: NDArray[np.float64]) -> _ScaledState:
    return _ScaledState(
        prev=np.zeros_like(x),
        cur=np.ones_like(x),
        log_scale=-0.5 * x * x - _LOG_PI_QUARTER,
        acc=np.ones_like(x),
    )


def _run(k: int, x: NDArray[np.float64], *, accumulate: bool = False) -> _ScaledState:
    state = _start(x)
    for j in range(1, k + 1):
        state.step(j, x)
        if accumulate:
            state.acc += state.cur * state.cur
    return state


def _as_points(x: ArrayLike) -> NDArray[np.float64]:
    return np.atleast_1d(np.asarray(x, dtype=np.float64))


def _check_order(k: int, minimum: int = 0) -> None:
    if k < minimum:
        raise InvalidOrderError(f"Hermite order must be >= {minimum}, got {k}")


@overload
def hermite_phi(k: int, x: float) -> float: ...
@overload
def hermite_phi(k: int, x: NDArray[np.float64]) -> NDArray[np.float64]: ...
def hermite_phi(k: int, x: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    _check_order(k)
    pts = _as_points(x)
    state = _run(k, pts)
    out = _unscale(state.cur, state.log_scale)
    return float(out[0]) if np.ndim(x) == 0 else out


def hermite_phi_pair(
    k: int, x: ArrayLike
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """(phi_{k-1}(x), phi_k(x)) from a single recurrence pass, k >= 1."""
    _check_order(k, 1)
    pts = _as_points(x)
    state = _run(k, pts)
    return _unscale(state.prev, state.log_scale), _unscale(state.cur, state.log_scale)


def gue_one_point(n: int, x: ArrayLike) -> NDArray[np.float64]:
    """K_N(x, x) = sum_{k<N} phi_k(x)^2, the unscaled GUE eigenvalue density."""
    _check_order(n, 1)
    pts = _as_points(x)
    state = _run(n - 1, pts, accumulate=True)
    return np.exp(np.log(state.acc) + 2.0 * state.log_scale)


@dataclass(frozen=True, slots=True)
class HermiteContext:
    """All orders 0..max_order at a set of points, evaluated by the same recurrence."""

    max_order: int

    def __post_init__(self) -> None:
        _check_order(self.max_order)

    def table(self, x: ArrayLike) -> NDArray[np.float64]:
        pts = _as_points(x)
        out = np.empty((self.max_order + 1, pts.size))
        state = _start(pts)
        out[0] = _unscale(state.cur, state.log_scale)
        for j in range(1, self.max_order + 1):
            state.step(j, pts)
            out[j] = _unscale(state.cur, state.log_scale)
        return out

    def phi(self, k: int, x: ArrayLike) -> NDArray[np.float64]:
        if k > self.max_order:
            raise InvalidOrderError(f"order {k} exceeds max_order={self.max_order}")
        return hermite_phi(k, _as_points(x))
