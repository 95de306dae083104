"""Semicircle law: density, distribution function, Stieltjes transform, quantiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import overload

import numpy as np
from numpy.typing import ArrayLike, NDArray

from edgelab.errors import DomainError, InvalidDimensionError

_NEWTON_MAX_ITER = 200
_CDF_TOL = 1e-14


@dataclass(frozen=True, slots=True)
class ClassicalLocations:
    """gamma_j solving j/N = int_{-inf}^{gamma_j} rho_sc, for j = 1..N (stored 0-based)."""

    n: int
    gamma: NDArray[np.float64]


@overload
def semicircle_density(e: float) -> float: ...
@overload
def semicircle_density(e: NDArray[np.float64]) -> NDArray[np.float64]: ...
def semicircle_density(e: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """rho_sc(E) = sqrt((4 - E^2)_+) / (2 pi)."""
    out = np.sqrt(np.maximum(4.0 - np.square(e), 0.0)) / (2.0 * np.pi)
    return float(out) if np.ndim(out) == 0 else out


@overload
def semicircle_cdf(x: float) -> float: ...
@overload
def semicircle_cdf(x: NDArray[np.float64]) -> NDArray[np.float64]: ...
def semicircle_cdf(x: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """F(x) = 1/2 + x sqrt(4 - x^2)/(4 pi) + arcsin(x/2)/pi, clamped to [0, 1] off support."""
    xc = np.clip(x, -2.0, 2.0)
    out = 0.5 + xc * np.sqrt(4.0 - xc * xc) / (4.0 * np.pi) + np.arcsin(xc / 2.0) / np.pi
    return float(out) if np.ndim(out) == 0 else out


def semicircle_stieltjes(z: complex | ArrayLike) -> NDArray[np.complex128] | complex:
    """m_sc(z), the root of 1 + z m + m^2 = 0 with Im m > 0.

    sqrt(z - 2) * sqrt(z + 2) is the branch of sqrt(z^2 - 4) that behaves
    like z at infinity and is continuous in the upper half plane; the root is
    then taken as -2 / (z + sqrt(z^2 - 4)), which never cancels.
    """
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(zz.imag <= 0):
        raise DomainError("semicircle_stieltjes needs Im z > 0")
    s = np.sqrt(zz - 2.0) * np.sqrt(zz + 2.0)
    m = -2.0 / (zz + s)
    # The product of the two roots is 1; swap wherever the branch landed low.
    m = np.where(m.imag > 0, m, 1.0 / m)
    return complex(m) if m.ndim == 0 else m


def classical_locations(n: int) -> ClassicalLocations:
    """Semicircle quantiles gamma_j for j = 1..n by bracketed Newton on the closed-form CDF."""
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    j = np.arange(1, n + 1, dtype=np.float64)
    target = j / n
    lo = np.full(n, -2.0)
    hi = np.full(n, 2.0)
    x = np.zeros(n)
    for _ in range(_NEWTON_MAX_ITER):
        f = semicircle_cdf(x) - target
        if np.all(np.abs(f) <= _CDF_TOL):
            break
        lo = np.where(f < 0, x, lo)
        hi = np.where(f > 0, x, hi)
        rho = semicircle_density(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = x - f / rho
        inside = np.isfinite(step) & (step > lo) & (step < hi)
        x = np.where(np.abs(f) <= _CDF_TOL, x, np.where(inside, step, 0.5 * (lo + hi)))
    x[-1] = 2.0
    if n % 2 == 0:
        x[n // 2 - 1] = 0.0
    x.setflags(write=False)
    return ClassicalLocations(n, x)
