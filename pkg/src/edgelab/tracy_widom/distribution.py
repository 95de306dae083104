"""Tracy-Widom distribution functions for beta = 1, 2 and their tail shapes.

TW_2(x) = exp(-I2(x)) and TW_1(x) = sqrt(TW_2(x)) exp(-I1(x) / 2), with
I1, I2 the running integrals of the Hastings-McLeod solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from scipy import optimize

from edgelab.ensembles.spec import Beta
from edgelab.errors import DomainError
from edgelab.tracy_widom.painleve import PainleveSolution, default_solution

Side = Literal["right", "left"]


@dataclass(frozen=True, slots=True)
class TWValue:
    beta: Beta
    x: float
    value: float


def _log_cdf(beta: Beta, x: float, solution: PainleveSolution) -> float:
    i2 = solution.i2_at(x)
    if beta == 2:
        return -i2
    return -0.5 * (i2 + solution.i1_at(x))


def tw_cdf(beta: Beta, x: float, solution: PainleveSolution | None = None) -> TWValue:
    sol = solution or default_solution()
    return TWValue(beta, x, math.exp(_log_cdf(beta, x, sol)))


def tw_sf(beta: Beta, x: float, solution: PainleveSolution | None = None) -> float:
    """1 - TW_beta(x) without cancellation in the right tail."""
    sol = solution or default_solution()
    return -math.expm1(_log_cdf(beta, x, sol))


def tw_pdf(beta: Beta, x: float, solution: PainleveSolution | None = None) -> float:
    """Density: TW_2 J for beta = 2 and TW_1 (J + q) / 2 for beta = 1."""
    sol = solution or default_solution()
    cdf = math.exp(_log_cdf(beta, x, sol))
    if beta == 2:
        return cdf * sol.j_at(x)
    return 0.5 * cdf * (sol.j_at(x) + sol.q_at(x))


def tw_quantile(beta: Beta, p: float, solution: PainleveSolution | None = None) -> float:
    """Bisection for TW_beta(x) = p on the solved range."""
    sol = solution or default_solution()
    lo, hi = sol.x_left, sol.x_right
    c_lo = tw_cdf(beta, lo, sol).value
    c_hi = tw_cdf(beta, hi, sol).value
    if not c_lo < p < c_hi:
        raise DomainError(f"p={p!r} is outside ({c_lo:.3g}, {c_hi:.12g}) on the solved range")
    root = optimize.bisect(lambda x: tw_cdf(beta, x, sol).value - p, lo, hi, xtol=1e-12)
    return float(root)


def tail_asymptote(beta: Beta, x: float, side: Side = "right") -> float:
    """Tail shape without its constant.

    Right (x >= 1): x^{-3b/4} e^{-(2b/3) x^{3/2}}.  Left (x <= -1): |x|^{-b/16} e^{-(b/24)|x|^3}.
    """
    if side == "right":
        if x < 1:
            raise DomainError(f"the right asymptote needs x >= 1, got {x!r}")
        return x ** (-0.75 * beta) * math.exp(-(2.0 * beta / 3.0) * x**1.5)
    if x > -1:
        raise DomainError(f"the left asymptote needs x <= -1, got {x!r}")
    a = abs(x)
    return a ** (-beta / 16.0) * math.exp(-(beta / 24.0) * a**3)


def gue_sharp_shape(x: float) -> float:
    """x^{-3/2} e^{-(4/3) x^{3/2}}, the two-sided GUE right-tail shape."""
    if x <= 0:
        raise DomainError(f"the GUE tail shape needs x > 0, got {x!r}")
    return x**-1.5 * math.exp(-(4.0 / 3.0) * x**1.5)
