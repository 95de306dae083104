"""The interpolating flow H(t) = e^{-t/2} H0 + sqrt(1 - e^{-t}) W."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray

from edgelab.ensembles.distributions import EntryDistribution, cumulant
from edgelab.ensembles.sampling import WignerMatrix
from edgelab.errors import DomainError, InvalidOrderError, InvalidPairError


def _coefficients(t: float) -> tuple[float, float]:
    return math.exp(-t / 2.0), math.sqrt(-math.expm1(-t))


def _check_pair(h0: WignerMatrix, w: WignerMatrix) -> None:
    if h0.n != w.n or h0.beta != w.beta:
        raise InvalidPairError(
            f"cannot couple n={h0.n}, beta={h0.beta} with n={w.n}, beta={w.beta}"
        )


def interpolate(h0: WignerMatrix, w: WignerMatrix, t: float) -> WignerMatrix:
    """Flowed matrix at time t; W is expected to be the Gaussian endpoint.

    t = 0 returns H0's entries unchanged.  Each off-diagonal entry keeps
    variance 1/N for every t since e^{-t} + (1 - e^{-t}) = 1.
    """
    _check_pair(h0, w)
    if t < 0:
        raise DomainError(f"flow time must be >= 0, got {t!r}")
    if t == 0:
        return h0
    a, b = _coefficients(t)
    h = a * h0.entries + b * w.entries
    h.setflags(write=False)
    return WignerMatrix(h0.n, h0.beta, h, h0.master_seed, h0.sample_index)


def flow_velocity(
    h0: WignerMatrix, w: WignerMatrix, t: float
) -> NDArray[np.float64] | NDArray[np.complex128]:
    """dH/dt = -e^{-t/2}/2 H0 + e^{-t} / (2 sqrt(1 - e^{-t})) W, for t > 0."""
    _check_pair(h0, w)
    if t <= 0:
        raise DomainError(f"the velocity is singular at t = 0; got t={t!r}")
    a, b = _coefficients(t)
    return -0.5 * a * h0.entries + math.exp(-t) / (2.0 * b) * w.entries


def flow_cumulant(dist: EntryDistribution, k: int, t: float) -> float:
    """k-th cumulant of sqrt(N) h_ab(t) when sqrt(N) h_ab(0) ~ dist.

    The Gaussian part contributes only to k = 2, so higher cumulants decay
    as e^{-kt/2} and the variance stays that of the initial law blended
    with 1.
    """
    if k < 1:
        raise InvalidOrderError(f"cumulant order must be >= 1, got {k}")
    if t < 0:
        raise DomainError(f"flow time must be >= 0, got {t!r}")
    value = math.exp(-k * t / 2.0) * cumulant(dist, k)
    if k == 2:
        value += -math.expm1(-t)
    return value
