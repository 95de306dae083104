"""Hastings-McLeod solution of q'' = x q + 2 q^3 by backward integration.

The state carries q, q' and three running integrals,

    I1(x) = int_x^inf q,   J(x) = int_x^inf q^2,   I2(x) = int_x^inf (t - x) q^2 = int_x^inf J,

so the Tracy-Widom distributions come out of the same stepper as q.  Beyond
x_R the solution is replaced by Ai, whose integrals are closed-form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cache

import numpy as np
from numpy.typing import NDArray
from scipy import integrate, special
from scipy.interpolate import CubicHermiteSpline

from edgelab.errors import DomainError, NumericError, WrongBranchError
from edgelab.kernels.airy import airy_integral_tail

logger = logging.getLogger(__name__)

X_LEFT = -8.0
X_RIGHT = 8.0
RTOL = 1e-12
ATOL = 1e-22
GRID_STEP = 1.0 / 128.0
BLOW_UP = 1e6


@dataclass(frozen=True)
class PainleveSolution:
    """Solution tabulated on a descending grid from x_R to x_L."""

    grid: NDArray[np.float64]
    q: NDArray[np.float64]
    dq: NDArray[np.float64]
    i1: NDArray[np.float64]
    j: NDArray[np.float64]
    i2: NDArray[np.float64]

    splines: dict[str, CubicHermiteSpline] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        q, dq, grid = self.q, self.dq, self.grid
        ddq = grid * q + 2.0 * q**3

        def spline(values: NDArray[np.float64], slopes: NDArray[np.float64]) -> CubicHermiteSpline:
            return CubicHermiteSpline(grid[::-1], values[::-1], slopes[::-1])

        object.__setattr__(
            self,
            "splines",
            {
                "q": spline(q, dq),
                "dq": spline(dq, ddq),
                "i1": spline(self.i1, -q),
                "j": spline(self.j, -(q**2)),
                "i2": spline(self.i2, -self.j),
            },
        )

    @property
    def x_left(self) -> float:
        return float(self.grid[-1])

    @property
    def x_right(self) -> float:
        return float(self.grid[0])

    def contains(self, x: float) -> bool:
        return self.x_left <= x <= self.x_right

    def _at(self, name: str, x: float) -> float:
        if not self.contains(x):
            raise DomainError(
                f"x={x!r} is outside the solved range [{self.x_left}, {self.x_right}]"
            )
        return float(self.splines[name](x))

    def q_at(self, x: float) -> float:
        return self._at("q", x)

    def dq_at(self, x: float) -> float:
        return self._at("dq", x)

    def i1_at(self, x: float) -> float:
        return self._at("i1", x)

    def j_at(self, x: float) -> float:
        return self._at("j", x)

    def i2_at(self, x: float) -> float:
        return self._at("i2", x)



def _airy_boundary(x: float) -> NDArray[np.float64]:
    ai, aip, _, _ = special.airy(x)
    return np.array(
        [
            ai,
            aip,
            airy_integral_tail(x),
            aip * aip - x * ai * ai,
            (2.0 * x * x * ai * ai - 2.0 * x * aip * aip - ai * aip) / 3.0,
        ]
    )


def _rhs(x: float, y: NDArray[np.float64]) -> NDArray[np.float64]:
    q, dq, _, j, _ = y
    return np.array([dq, x * q + 2.0 * q**3, -q, -(q * q), -j])


def _blow_up(x: float, y: NDArray[np.float64]) -> float:
    return BLOW_UP - abs(y[0])


_blow_up.terminal = True  # type: ignore[attr-defined]


def hastings_mcleod(
    x_left: float = X_LEFT,
    x_right: float = X_RIGHT,
    rtol: float = RTOL,
    *,
    grid_step: float = GRID_STEP,
) -> PainleveSolution:
    """Integrate from (Ai(x_R), Ai'(x_R)) down to x_L with DOP853."""
    if x_right < 6.0 or x_left > -8.0:
        raise DomainError(f"need x_R >= 6 and x_L <= -8, got [{x_left}, {x_right}]")
    points = int(round((x_right - x_left) / grid_step)) + 1
    grid = np.linspace(x_right, x_left, points)
    result = integrate.solve_ivp(
        _rhs,
        (x_right, x_left),
        _airy_boundary(x_right),
        method="DOP853",
        t_eval=grid,
        rtol=rtol,
        atol=ATOL,
        events=_blow_up,
    )
    if result.t_events[0].size:
        raise WrongBranchError(f"|q| exceeded {BLOW_UP:g} near x={result.t_events[0][0]:.4g}")
    if not result.success:
        raise NumericError(f"Painleve integration failed: {result.message}")
    q, dq, i1, j, i2 = result.y
    if np.any(q <= 0):
        bad = float(grid[np.argmax(q <= 0)])
        raise WrongBranchError(f"q changed sign near x={bad:.4g}")
    logger.debug("Hastings-McLeod solved on [%s, %s] with %d steps", x_left, x_right, result.nfev)
    return PainleveSolution(grid, q, dq, i1, j, i2)


@cache
def default_solution() -> PainleveSolution:
    return hastings_mcleod()


def left_asymptote(x: float) -> float:
    """sqrt(-x/2), the x -> -inf behaviour of the Hastings-McLeod solution."""
    if x >= 0:
        raise DomainError(f"the left asymptote needs x < 0, got {x!r}")
    return math.sqrt(-x / 2.0)
