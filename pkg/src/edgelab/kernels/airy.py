"""Airy function helpers on top of :mod:`scipy.special`."""

from __future__ import annotations

import math
from typing import overload

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate, special

from edgelab.errors import DomainError

AIRY_RANGE = (-20.0, 200.0)
_DIAGONAL_GAP = 1e-8
# Beyond this, 1/3 - int_0^x Ai cancels; integrate the tail directly.
_TAIL_SWITCH = 2.0


def _check_range(x: ArrayLike) -> None:
    arr = np.asarray(x, dtype=np.float64)
    lo, hi = AIRY_RANGE
    if np.any(~np.isfinite(arr)) or np.any(arr < lo) or np.any(arr > hi):
        raise DomainError(f"Airy evaluation is supported on [{lo}, {hi}]")


@overload
def airy_ai(x: float) -> float: ...
@overload
def airy_ai(x: NDArray[np.float64]) -> NDArray[np.float64]: ...
def airy_ai(x: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """Ai(x) on [-20, 200]; underflows to 0.0 past x ~ 104, see log_airy_ai."""
    _check_range(x)
    ai = special.airy(x)[0]
    return float(ai) if np.ndim(x) == 0 else np.asarray(ai, dtype=np.float64)


@overload
def airy_ai_prime(x: float) -> float: ...
@overload
def airy_ai_prime(x: NDArray[np.float64]) -> NDArray[np.float64]: ...
def airy_ai_prime(x: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    _check_range(x)
    aip = special.airy(x)[1]
    return float(aip) if np.ndim(x) == 0 else np.asarray(aip, dtype=np.float64)


def log_airy_ai(x: float) -> float:
    """log |Ai(x)|; for x > 0 through the exponentially scaled Ai."""
    if x > 0:
        return math.log(float(special.airye(x)[0])) - (2.0 / 3.0) * x**1.5
    return math.log(abs(float(special.airy(x)[0])))


def airy_kernel(a: ArrayLike, b: ArrayLike) -> NDArray[np.float64]:
    """K_Ai(a, b) = (Ai(a) Ai'(b) - Ai'(a) Ai(b)) / (a - b), Ai'^2 - a Ai^2 on the diagonal."""
    a_arr, b_arr = np.broadcast_arrays(
        np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
    )
    ai_a, aip_a, _, _ = special.airy(a_arr)
    ai_b, aip_b, _, _ = special.airy(b_arr)
    diff = a_arr - b_arr
    near = np.abs(diff) < _DIAGONAL_GAP
    with np.errstate(divide="ignore", invalid="ignore"):
        off = (ai_a * aip_b - aip_a * ai_b) / diff
    diag = aip_a * aip_b - 0.5 * (a_arr + b_arr) * ai_a * ai_b
    return np.asarray(np.where(near, diag, off), dtype=np.float64)


def airy_integral_tail(x: float) -> float:
    """int_x^inf Ai(s) ds."""
    if x > _TAIL_SWITCH:
        return _airy_quad(x, np.inf)
    # int_0^inf Ai = 1/3
    if x >= 0:
        return 1.0 / 3.0 - _airy_quad(0.0, x)
    return 1.0 / 3.0 + _airy_quad(x, 0.0)


def _airy_quad(a: float, b: float) -> float:
    value, _ = integrate.quad(
        lambda s: float(special.airy(s)[0]), a, b, epsabs=1e-16, epsrel=1e-13, limit=200
    )
    return float(value)


def airy_envelope(x: float) -> float:
    """e^{-(2/3) x^{3/2}} / (2 sqrt(pi) x^{1/4}), the x -> inf asymptote of Ai."""
    if x <= 0:
        raise DomainError(f"the Airy envelope needs x > 0, got {x!r}")
    return math.exp(-(2.0 / 3.0) * x**1.5) / (2.0 * math.sqrt(math.pi) * x**0.25)
