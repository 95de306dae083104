"""Plancherel-Rotach asymptotics of Hermite polynomials near the turning point.

With x = sqrt(2N+1) t,

    q_N(x) ~ sqrt(2 pi) (2N+1)^{N/2+1/6} e^{(2N+1)(t^2 - 1/2)/2}
             (xi / (t^2 - 1))^{1/4} Ai((2N+1)^{2/3} xi),

and xi(t) the turning-point variable, negative for t < 1.  Everything is
carried in log space since q_N overflows long before N = 200.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import special

from edgelab.errors import DomainError
from edgelab.kernels.airy import log_airy_ai

T_RANGE = (0.5, 3.0)
_SERIES_SWITCH = 1e-4
_CBRT2 = 2.0 ** (1.0 / 3.0)


@dataclass(frozen=True, slots=True)
class PlancherelRotach:
    n: int
    t: float
    log_abs_q: float
    sign: float
    phi: float


def xi(t: float) -> float:
    """Turning-point variable: 2^{1/3}(t-1)(1 + (t-1)/10) + O((t-1)^3) near t = 1."""
    if t < 0 or t > T_RANGE[1]:
        raise DomainError(f"xi is evaluated on [0, {T_RANGE[1]}], got {t!r}")
    u = t - 1.0
    if abs(u) < _SERIES_SWITCH:
        return _CBRT2 * u * (1.0 + u / 10.0)
    if t > 1.0:
        return (0.75 * (t * math.sqrt(t * t - 1.0) - math.acosh(t))) ** (2.0 / 3.0)
    return -((0.75 * (math.acos(t) - t * math.sqrt(1.0 - t * t))) ** (2.0 / 3.0))


def _log_xi_ratio(t: float, xi_t: float) -> float:
    """log (xi / (t^2 - 1)); finite through t = 1."""
    u = t - 1.0
    if abs(u) < _SERIES_SWITCH:
        return math.log(2.0 ** (-2.0 / 3.0) * (1.0 - 0.4 * u))
    return math.log(xi_t / (t * t - 1.0))


def _log_norm(n: int) -> float:
    # log sqrt(2^N N! sqrt(pi))
    return 0.5 * (n * math.log(2.0) + special.gammaln(n + 1) + 0.5 * math.log(math.pi))


def plancherel_rotach(n: int, t: float) -> PlancherelRotach:
    """Asymptotic q_N(sqrt(2N+1) t) and the matching phi_N, for t in [0.5, 3]."""
    lo, hi = T_RANGE
    if not lo <= t <= hi:
        raise DomainError(f"t must lie in [{lo}, {hi}], got {t!r}")
    m = 2 * n + 1
    xi_t = xi(t)
    arg = m ** (2.0 / 3.0) * xi_t
    sign = 1.0 if arg >= 0 else math.copysign(1.0, float(special.airy(arg)[0]))
    log_phi = (
        0.5 * math.log(2.0 * math.pi)
        + (n / 2.0 + 1.0 / 6.0) * math.log(m)
        - m / 4.0
        + 0.25 * _log_xi_ratio(t, xi_t)
        + log_airy_ai(arg)
        - _log_norm(n)
    )
    log_q = log_phi + 0.5 * m * t * t + _log_norm(n)
    return PlancherelRotach(n=n, t=t, log_abs_q=log_q, sign=sign, phi=sign * math.exp(log_phi))


def int_even_printed(m: int) -> float:
    """2^{1/4} sqrt((2m)!) / (pi^{1/4} 2^m m!), the printed closed form for int_0^inf phi_{2m}.

    Kept for comparison only; it disagrees with quadrature already at m = 0.
    """
    log_value = (
        0.25 * math.log(2.0)
        + 0.5 * special.gammaln(2 * m + 1)
        - 0.25 * math.log(math.pi)
        - m * math.log(2.0)
        - special.gammaln(m + 1)
    )
    return math.exp(log_value)
