"""Interval estimates and small fits used by the experiments."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy import stats

from edgelab.ensembles.spec import Beta
from edgelab.errors import InvalidInputError

logger = logging.getLogger(__name__)


def wilson_interval(hits: int, trials: int, level: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1 or not 0 <= hits <= trials:
        raise InvalidInputError(f"need 0 <= hits <= trials and trials >= 1, got {hits}/{trials}")
    if not 0.0 < level < 1.0:
        raise InvalidInputError(f"level must lie in (0, 1), got {level!r}")
    z = float(stats.norm.ppf(0.5 + level / 2.0))
    p = hits / trials
    z2n = z * z / trials
    centre = (p + z2n / 2.0) / (1.0 + z2n)
    half = z * math.sqrt(p * (1.0 - p) / trials + z2n / (4.0 * trials)) / (1.0 + z2n)
    low = 0.0 if hits == 0 else min(p, max(0.0, centre - half))
    high = 1.0 if hits == trials else max(p, min(1.0, centre + half))
    return low, high


def binomial_stderr(p: float, trials: int) -> float:
    return math.sqrt(p * (1.0 - p) / trials) if trials > 0 else math.inf


def two_sample_difference(p1: float, n1: int, p2: float, n2: int) -> tuple[float, float]:
    """(p1 - p2, combined standard error)."""
    if n1 < 1 or n2 < 1:
        raise InvalidInputError(f"sample sizes must be >= 1, got {n1}, {n2}")
    return p1 - p2, math.hypot(binomial_stderr(p1, n1), binomial_stderr(p2, n2))


@dataclass(frozen=True, slots=True)
class PrefactorFit:
    """count(r) ~ c shape(r): log c by least squares, and the spread about it.

    ``window_constant`` is the smallest C with c shape / C <= count <= C c shape
    on the fitted points.
    """

    log_c: float
    c: float
    window_constant: float
    points: int


def fit_prefactor(
    r: Sequence[float], counts: Sequence[float], shape: Sequence[float]
) -> PrefactorFit:
    ratios = np.log(np.asarray(counts, dtype=np.float64)) - np.log(
        np.asarray(shape, dtype=np.float64)
    )
    if ratios.size == 0 or len(r) != ratios.size:
        raise InvalidInputError("fit_prefactor needs matching, non-empty r, counts and shape")
    if not np.all(np.isfinite(ratios)):
        raise InvalidInputError("counts and shapes must be positive and finite to fit")
    log_c = float(np.mean(ratios))
    spread = float(np.max(np.abs(ratios - log_c)))
    return PrefactorFit(log_c, math.exp(log_c), math.exp(spread), int(ratios.size))


@dataclass(frozen=True, slots=True)
class LeftTailFit:
    """log p ~ log C - beta x^3 / C0."""

    log_c: float
    c0: float
    points: int


def fit_left_constant(x: Sequence[float], p: Sequence[float], beta: Beta) -> LeftTailFit:
    xs = np.asarray(x, dtype=np.float64)
    ps = np.asarray(p, dtype=np.float64)
    keep = ps > 0
    xs, ps = xs[keep], ps[keep]
    if np.unique(xs).size < 2:
        raise InvalidInputError("the left-tail fit needs two distinct x with p > 0")
    slope, intercept = np.polyfit(xs**3, np.log(ps), 1)
    if slope >= 0:
        logger.warning("left-tail fit has non-negative slope %.3g; C0 reported as inf", slope)
        return LeftTailFit(float(intercept), math.inf, int(xs.size))
    return LeftTailFit(float(intercept), float(-beta / slope), int(xs.size))
