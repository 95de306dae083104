"""The smooth cut-off F: 0 on [0, 1/9], 1 on [2/9, inf), C-infinity and non-decreasing.

F is the normalised integral of the standard bump b(t) = exp(-1/(t(1-t)))
moved onto [1/9, 2/9]:

    F(x) = Z^{-1} int_0^{9x-1} b(t) dt,   Z = int_0^1 b(t) dt.
"""

from __future__ import annotations

import math
from functools import cache

import numpy as np
from numpy.polynomial import Polynomial
from numpy.typing import NDArray
from scipy import integrate

from edgelab.errors import DomainError, InvalidOrderError, NumericError

RAMP_START = 1.0 / 9.0
RAMP_END = 2.0 / 9.0
_MAX_BOUND_ORDER = 4
_GRID = 200_001


def _bump(t: float) -> float:
    return math.exp(-1.0 / (t * (1.0 - t))) if 0.0 < t < 1.0 else 0.0


def _bump_integral(a: float, b: float) -> float:
    try:
        value, _ = integrate.quad(_bump, a, b, epsabs=0.0, epsrel=1e-13)
    except ValueError as exc:
        raise NumericError(f"bump quadrature on [{a}, {b}] failed: {exc}") from exc
    return float(value)


@cache
def _bump_mass() -> float:
    return _bump_integral(0.0, 1.0)


def cutoff_F(x: float) -> float:  # noqa: N802
    if x < 0:
        raise DomainError(f"F is defined on [0, inf), got {x!r}")
    if x <= RAMP_START:
        return 0.0
    if x >= RAMP_END:
        return 1.0
    t = 9.0 * x - 1.0
    if t <= 0.5:
        return min(1.0, _bump_integral(0.0, t) / _bump_mass())
    return max(0.0, 1.0 - _bump_integral(t, 1.0) / _bump_mass())


def cutoff_F_tilde(x: float) -> float:  # noqa: N802
    """1 - F, the left-tail cut-off."""
    return 1.0 - cutoff_F(x)


def cutoff_F_array(x: NDArray[np.float64]) -> NDArray[np.float64]:  # noqa: N802
    return np.array([cutoff_F(float(v)) for v in np.ravel(x)]).reshape(np.shape(x))


@cache
def _bump_derivative_numerators() -> tuple[Polynomial, ...]:
    # b^{(j)}(t) = p_j(t) / D^{2j} * b(t) with D = t(1 - t);
    # p_{j+1} = p_j' D^2 - 2j p_j D' D + D' p_j.
    d = Polynomial([0.0, 1.0, -1.0])
    dp = d.deriv()
    polys = [Polynomial([1.0])]
    for j in range(_MAX_BOUND_ORDER):
        p = polys[-1]
        polys.append(p.deriv() * d * d - 2 * j * p * dp * d + dp * p)
    return tuple(polys)


@cache
def derivative_bound(k: int) -> float:
    """sup |F^{(k)}| for 0 <= k <= 4, from the bump derivatives on a fine grid."""
    if not 0 <= k <= _MAX_BOUND_ORDER:
        raise InvalidOrderError(f"derivative bounds exist for 0 <= k <= {_MAX_BOUND_ORDER}")
    if k == 0:
        return 1.0
    j = k - 1
    t = np.linspace(0.0, 1.0, _GRID)[1:-1]
    d = t * (1.0 - t)
    p = _bump_derivative_numerators()[j](t)
    with np.errstate(divide="ignore"):
        log_abs = np.log(np.abs(p)) - 2 * j * np.log(d) - 1.0 / d
    return float(9.0**k * np.exp(log_abs.max()) / _bump_mass())
