"""Finite-N edge kernels and expected eigenvalue counts above the edge.

Edge coordinates: a Hermite argument s = sqrt(2N) + x / (sqrt(2) N^{1/6})
corresponds to lambda = 2 + N^{-2/3} x for the normalised matrix, and

    f(x) = N^{1/12} phi_N(s),   g(x) = N^{1/12} phi_{N-1}(s).

The rescaled GUE kernel on the diagonal is (1/sqrt 2) int_x^inf f g, so the
expected number of eigenvalues above 2 + N^{-2/3} r is
(1/sqrt 2) int_r^inf (s - r) f(s) g(s) ds.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cache
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate

from edgelab.ensembles.spec import Beta
from edgelab.errors import DomainError, NumericError, UnsupportedDimensionError
from edgelab.kernels.hermite import hermite_phi, hermite_phi_pair
from edgelab.kernels.quadrature import VectorFn, composite_gauss_legendre

logger = logging.getLogger(__name__)

GoeConvention = Literal["printed", "half-sgn"]

_SQRT2 = math.sqrt(2.0)
# (3/4) log(1e18) and (3/2) log(1e18): exponents at which e^{-(4/3) s^{3/2}}
# (products f g) and e^{-(2/3) s^{3/2}} (single f or g) drop by 1e-18.
_PRODUCT_DECAY = 31.09
_SINGLE_DECAY = 62.17
# Largest offset from sqrt(2N), in unscaled Hermite units, we integrate to.
_MAX_HERMITE_OFFSET = 10.0
_DENSE_STEP = 2e-3


@dataclass(frozen=True, slots=True)
class EdgeKernelEval:
    n: int
    beta: Beta
    x: float
    y: float
    value: float


@dataclass(frozen=True, slots=True)
class TailIntegral:
    """Expected count of eigenvalues above 2 + N^{-2/3} r, with the asymptote shape at r."""

    n: int
    beta: Beta
    r: float
    expected_count: float
    reference: float
    cross_check: float | None = None
    convention: GoeConvention | None = None


def _check_n(n: int) -> None:
    if n < 2:
        raise UnsupportedDimensionError(f"edge kernels need N >= 2, got {n}")


def _hermite_argument(n: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
    return math.sqrt(2.0 * n) + x / (_SQRT2 * n ** (1.0 / 6.0))


def _fg(n: int, x: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    pts = np.atleast_1d(np.asarray(x, dtype=np.float64))
    phi_prev, phi_n = hermite_phi_pair(n, _hermite_argument(n, pts))
    scale = n ** (1.0 / 12.0)
    return scale * phi_n, scale * phi_prev


def edge_fg(n: int, x: float) -> tuple[float, float]:
    """(f(x), g(x)) for x in [-10, 4 N^{1/6}]."""
    _check_n(n)
    hi = 4.0 * n ** (1.0 / 6.0)
    if not -10.0 <= x <= hi:
        raise DomainError(f"edge_fg is defined on [-10, {hi:.6g}] at N={n}, got {x!r}")
    f, g = _fg(n, x)
    return float(f[0]), float(g[0])


def _cutoff(n: int, r: float, decay: float) -> float:
    upper = (max(r, 0.0) ** 1.5 + decay) ** (2.0 / 3.0)
    limit = _MAX_HERMITE_OFFSET * _SQRT2 * n ** (1.0 / 6.0)
    if upper > limit:
        raise NumericError(f"truncation point {upper:.4g} is beyond the evaluable edge range")
    return upper


def _fg_product(n: int) -> VectorFn:
    def fn(s: NDArray[np.float64]) -> NDArray[np.float64]:
        f, g = _fg(n, s)
        return f * g

    return fn


def _diag_kernel_gue(n: int, x: float) -> float:
    f_g = _fg_product(n)
    upper = _cutoff(n, x, _PRODUCT_DECAY)
    return composite_gauss_legendre(f_g, x, upper) / _SQRT2


def gue_edge_kernel(n: int, x: float, y: float) -> EdgeKernelEval:
    """K~_{N,2}(x, y) = (1/(2 sqrt 2)) int_0^inf [f(x+z) g(y+z) + g(x+z) f(y+z)] dz."""
    _check_n(n)
    lo = min(x, y)
    z_max = _cutoff(n, lo, _PRODUCT_DECAY) - lo

    def integrand(z: NDArray[np.float64]) -> NDArray[np.float64]:
        fx, gx = _fg(n, x + z)
        fy, gy = _fg(n, y + z)
        return fx * gy + gx * fy

    value = composite_gauss_legendre(integrand, 0.0, z_max) / (2.0 * _SQRT2)
    return EdgeKernelEval(n=n, beta=2, x=x, y=y, value=value)


def _shape(beta: Beta, r: float) -> float:
    if r <= 0:
        return math.inf
    return r ** (-0.75 * beta) * math.exp(-(2.0 * beta / 3.0) * r**1.5)


def _dense(
    n: int, r: float, upper: float
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
    points = max(2001, int(math.ceil((upper - r) / _DENSE_STEP)) | 1)
    grid = np.linspace(r, upper, points)
    f, g = _fg(n, grid)
    return grid, f, g


def _tail_cumulative(
    grid: NDArray[np.float64], values: NDArray[np.float64]
) -> NDArray[np.float64]:
    """int_{grid_i}^{grid_end} values on every grid point."""
    running = integrate.cumulative_simpson(values, x=grid, initial=0.0)
    return np.asarray(running[-1] - running, dtype=np.float64)


def gue_count_double_integral(n: int, r: float) -> float:
    """(1/sqrt 2) int_r^inf int_x^inf f g, the form before exchanging the integrals."""
    upper = _cutoff(n, r, _PRODUCT_DECAY)
    grid, f, g = _dense(n, r, upper)
    inner = _tail_cumulative(grid, f * g)
    return float(integrate.simpson(inner, x=grid)) / _SQRT2


def gue_expected_count_above(n: int, r: float, *, cross_check: bool = True) -> TailIntegral:
    """(1/sqrt 2) int_r^inf (s - r) f(s) g(s) ds, for r >= 0."""
    _check_n(n)
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r!r}")
    upper = _cutoff(n, r, _PRODUCT_DECAY)

    def weighted(s: NDArray[np.float64]) -> NDArray[np.float64]:
        f, g = _fg(n, s)
        return (s - r) * f * g

    value = composite_gauss_legendre(weighted, r, upper) / _SQRT2
    check = gue_count_double_integral(n, r) if cross_check else None
    if check is not None and abs(check - value) > 1e-6 * abs(value):
        logger.warning("GUE count forms disagree at N=%d r=%s: %r vs %r", n, r, value, check)
    return TailIntegral(
        n=n, beta=2, r=r, expected_count=value, reference=_shape(2, r), cross_check=check
    )


@cache
def hermite_half_integral(n: int) -> float:
    """I_N = int_0^inf phi_N(t) dt by quadrature."""
    upper = math.sqrt(2.0 * n + 1.0) + _MAX_HERMITE_OFFSET

    def phi(t: NDArray[np.float64]) -> NDArray[np.float64]:
        return hermite_phi(n, t)

    return composite_gauss_legendre(phi, 0.0, upper)


def _require_even(n: int) -> None:
    _check_n(n)
    if n % 2:
        raise UnsupportedDimensionError(f"the GOE one-point function is for even N, got {n}")


def _convention_weight(convention: GoeConvention) -> float:
    return 1.0 if convention == "printed" else 0.5


def goe_edge_one_point(n: int, x: float, *, convention: GoeConvention = "printed") -> float:
    """K~_{N,1}(x, x) = K~_{N,2}(x, x) + w [N^{1/4} I_N g(x) - (1/sqrt 2) g(x) int_x^inf f].

    w = 1 for the printed formula, 1/2 for the half-weighted sign kernel.
    """
    _require_even(n)
    _, g = edge_fg(n, x)
    f_tail = composite_gauss_legendre(
        lambda s: _fg(n, s)[0], x, _cutoff(n, x, _SINGLE_DECAY)
    )
    correction = n**0.25 * hermite_half_integral(n) * g - g * f_tail / _SQRT2
    return _diag_kernel_gue(n, x) + _convention_weight(convention) * correction


def goe_expected_count_above(
    n: int, r: float, *, convention: GoeConvention = "printed"
) -> TailIntegral:
    """int_r^inf K~_{N,1}(x, x) dx for even N, r >= 0."""
    _require_even(n)
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r!r}")
    gue = gue_expected_count_above(n, r, cross_check=False).expected_count
    upper = _cutoff(n, r, _SINGLE_DECAY)
    grid, f, g = _dense(n, r, upper)
    g_total = float(integrate.simpson(g, x=grid))
    g_f_tail = float(integrate.simpson(g * _tail_cumulative(grid, f), x=grid))
    correction = n**0.25 * hermite_half_integral(n) * g_total - g_f_tail / _SQRT2
    value = gue + _convention_weight(convention) * correction
    return TailIntegral(
        n=n,
        beta=1,
        r=r,
        expected_count=value,
        reference=_shape(1, r),
        convention=convention,
    )
