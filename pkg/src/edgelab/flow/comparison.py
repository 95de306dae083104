"""Flow-time observable E[F(X(t))] and the Wigner-vs-Gaussian endpoint comparison."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy import stats

from edgelab.ensembles.sampling import sample_gaussian, sample_wigner
from edgelab.ensembles.spec import Beta, EnsembleSpec
from edgelab.errors import DomainError
from edgelab.flow.interpolation import interpolate
from edgelab.resolvent.counting import CountingConfig, Side, mollified_count
from edgelab.resolvent.cutoff import cutoff_F
from edgelab.runner import SampleBatch, map_samples
from edgelab.spectral.eigen import Spectrum, eigen

logger = logging.getLogger(__name__)

# Numerical constant of the left-tail bound when none is fitted.
DEFAULT_LEFT_C0 = 24.0

H0_STREAM = "h0"
W_STREAM = "w"
GAUSS_STREAM = "gauss"


class FlowConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    n: int = Field(ge=2)
    samples: int = Field(ge=1)
    epsilon: float = Field(default=0.15, gt=0.0, lt=2.0 / 3.0)
    times: tuple[float, ...] = (0.0, 50.0)
    side: Side = "right"
    c0: float = Field(default=DEFAULT_LEFT_C0, gt=0.0)

    @field_validator("times")
    @classmethod
    def _times_start_at_zero(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v or v[0] != 0.0:
            raise ValueError("times must start at 0")
        if any(b < a for a, b in zip(v, v[1:], strict=False)):
            raise ValueError("times must be sorted")
        return v

    @property
    def counting(self) -> CountingConfig:
        return CountingConfig.from_edge(self.x, self.n, self.epsilon, self.side)

    @property
    def terminal_time(self) -> float:
        return self.times[-1]

    def with_samples(self, samples: int) -> Self:
        return self.model_copy(update={"samples": samples})


@dataclass(frozen=True, slots=True)
class FlowPoint:
    t: float
    mean: float
    stderr: float
    count: int


@dataclass(frozen=True, slots=True)
class FlowCurve:
    points: list[FlowPoint]
    failures: int

    def max_deviation(self) -> tuple[float, float]:
        """max_t |mean(t) - mean(0)| and the combined standard error at the argmax."""
        base = self.points[0]
        worst = max(self.points, key=lambda p: abs(p.mean - base.mean))
        return abs(worst.mean - base.mean), math.hypot(worst.stderr, base.stderr)


@dataclass(frozen=True, slots=True)
class EndpointDifference:
    delta: float
    stderr: float
    ci_low: float
    ci_high: float
    bound: float
    mean_wigner: float
    mean_gaussian: float
    samples: int
    failures: int


def observable_FX(s: Spectrum, cfg: FlowConfig) -> float:  # noqa: N802
    """F(X) on the right side, 1 - F(X) on the left, X the mollified window count."""
    x_count = max(0.0, mollified_count(s, cfg.counting))
    value = cutoff_F(x_count)
    return value if cfg.side == "right" else 1.0 - value


def _mean_stderr(values: NDArray[np.float64]) -> tuple[float, float]:
    m = values.shape[0]
    mean = float(np.mean(values)) if m else math.nan
    stderr = float(np.std(values, ddof=1) / math.sqrt(m)) if m > 1 else math.inf
    return mean, stderr


def comparison_curve(
    spec: EnsembleSpec, cfg: FlowConfig, master_seed: int, *, threads: int = 1
) -> FlowCurve:
    """E[F(X(t))] along the flow, with (H0, W) shared across all t of a sample."""

    def one(index: int) -> list[float]:
        h0 = sample_wigner(spec, cfg.n, master_seed, index, stream=H0_STREAM)
        w = sample_gaussian(spec.beta, cfg.n, master_seed, index, stream=W_STREAM)
        return [observable_FX(eigen(interpolate(h0, w, t)), cfg) for t in cfg.times]

    batch: SampleBatch[list[float]] = map_samples(one, cfg.samples, threads)
    table = np.array(batch.values, dtype=np.float64).reshape(-1, len(cfg.times))
    points = []
    for col, t in enumerate(cfg.times):
        mean, stderr = _mean_stderr(table[:, col])
        points.append(FlowPoint(t, mean, stderr, table.shape[0]))
    logger.info(
        "flow curve n=%d x=%s samples=%d failures=%d", cfg.n, cfg.x, cfg.samples, batch.failures
    )
    return FlowCurve(points, batch.failures)


def theorem_bound(
    n: int,
    x: float,
    epsilon: float,
    beta: Beta,
    side: Side = "right",
    c0: float = DEFAULT_LEFT_C0,
) -> float:
    """N^{-1/6+4eps} times the tail shape: x^{-3b/4} e^{-(2b/3) x^{3/2}} or e^{-b x^3 / C0}."""
    if x <= 0:
        raise DomainError(f"the bound needs x > 0, got {x!r}")
    prefactor = n ** (-1.0 / 6.0 + 4.0 * epsilon)
    if side == "right":
        return prefactor * x ** (-0.75 * beta) * math.exp(-(2.0 * beta / 3.0) * x**1.5)
    return prefactor * math.exp(-beta * x**3 / c0)


def endpoint_difference(
    spec: EnsembleSpec,
    cfg: FlowConfig,
    master_seed: int,
    *,
    threads: int = 1,
    level: float = 0.95,
) -> EndpointDifference:
    """mean_Wigner F(X) - mean_Gaussian F(X) from independent samples."""

    def wigner(index: int) -> float:
        h = sample_wigner(spec, cfg.n, master_seed, index, stream=H0_STREAM)
        return observable_FX(eigen(h), cfg)

    def gaussian(index: int) -> float:
        h = sample_gaussian(spec.beta, cfg.n, master_seed, index, stream=GAUSS_STREAM)
        return observable_FX(eigen(h), cfg)

    w_batch = map_samples(wigner, cfg.samples, threads)
    g_batch = map_samples(gaussian, cfg.samples, threads)
    mean_w, se_w = _mean_stderr(np.array(w_batch.values, dtype=np.float64))
    mean_g, se_g = _mean_stderr(np.array(g_batch.values, dtype=np.float64))
    delta = mean_w - mean_g
    stderr = math.hypot(se_w, se_g)
    z = float(stats.norm.ppf(0.5 + level / 2.0))
    return EndpointDifference(
        delta=delta,
        stderr=stderr,
        ci_low=delta - z * stderr,
        ci_high=delta + z * stderr,
        bound=theorem_bound(cfg.n, cfg.x, cfg.epsilon, spec.beta, cfg.side, cfg.c0),
        mean_wigner=mean_w,
        mean_gaussian=mean_g,
        samples=cfg.samples,
        failures=w_batch.failures + g_batch.failures,
    )
