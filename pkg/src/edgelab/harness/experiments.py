"""The five experiments behind the CLI subcommands.

Every experiment is a pure function of its config: per-sample randomness
comes from counter-based streams and reductions run in sample order, so
the emitted CSV does not depend on the thread count.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np

from edgelab.ensembles.distributions import cumulant
from edgelab.ensembles.sampling import sample_wigner
from edgelab.ensembles.spec import Beta
from edgelab.errors import (
    DomainError,
    EdgeLabError,
    InvalidInputError,
    SampleFailureError,
    UnsupportedDimensionError,
)
from edgelab.flow.comparison import FlowConfig, comparison_curve, endpoint_difference
from edgelab.harness.config import ExperimentConfig
from edgelab.harness.csvio import (
    EXACT_HEADER,
    FLOW_HEADER,
    LOCAL_LAW_HEADER,
    TAIL_HEADER,
    TW_HEADER,
    Cell,
)
from edgelab.harness.registry import ExperimentResult, register
from edgelab.harness.stats import PrefactorFit, fit_left_constant, fit_prefactor, wilson_interval
from edgelab.kernels.edge import goe_expected_count_above, gue_expected_count_above
from edgelab.obs.wrappers import traced_experiment
from edgelab.resolvent.counting import CountingConfig, count_window, sandwich_check
from edgelab.resolvent.green import local_law_report
from edgelab.runner import map_samples
from edgelab.spectral.eigen import edge_statistic, eigen, largest_eigenvalue
from edgelab.spectral.rigidity import rigidity_report
from edgelab.tracy_widom.distribution import Side, tail_asymptote, tw_cdf

logger = logging.getLogger(__name__)

MAX_FAILURE_FRACTION = 0.01
FIT_WINDOW = (1.5, 3.5)
# Imaginary part of the local-law probe point is N^{-2/3 + LOCAL_LAW_OFFSET}.
LOCAL_LAW_OFFSET = 0.05


def check_failures(failures: int, samples: int) -> None:
    if failures > MAX_FAILURE_FRACTION * samples:
        raise SampleFailureError(f"{failures} of {samples} samples failed")


def edge_drift(cfg: ExperimentConfig) -> float:
    """Leading finite-N shift of lambda_N in edge units, kappa_4 N^{-1/3} (halved for beta=2).

    Zero for Gaussian entries. Tail estimates for other laws sit this far
    from the Gaussian ones at desk-scale N.
    """
    return cumulant(cfg.spec.offdiag, 4) / cfg.beta * cfg.n ** (-1.0 / 3.0)


# ---------------------------------------------------------------------------
# tail-mc
# ---------------------------------------------------------------------------


def _exact_reference(cfg: ExperimentConfig, x: float) -> float | None:
    if cfg.side != "right" or not cfg.spec.is_gaussian or not 0.0 <= x < math.inf:
        return None
    try:
        if cfg.beta == 2:
            return gue_expected_count_above(cfg.n, x, cross_check=False).expected_count
        if cfg.n % 2:
            return None
        return goe_expected_count_above(cfg.n, x, convention=cfg.convention).expected_count
    except EdgeLabError as exc:
        logger.debug("no exact reference at x=%s: %s", x, exc)
        return None


def _asymptote_reference(cfg: ExperimentConfig, x: float) -> float | None:
    if not 1.0 <= x < math.inf:
        return None
    if cfg.side == "right":
        return tail_asymptote(cfg.beta, x, "right")
    return tail_asymptote(cfg.beta, -x, "left")


def _left_fit(cfg: ExperimentConfig, estimates: list[tuple[float, float]]) -> float | None:
    if cfg.side != "left":
        return None
    usable = [(x, p) for x, p in estimates if 0.0 < x < math.inf and 0.0 < p < 1.0]
    try:
        return fit_left_constant([x for x, _ in usable], [p for _, p in usable], cfg.beta).c0
    except InvalidInputError:
        return None


@register("tail-mc")
@traced_experiment
def run_tail_mc(cfg: ExperimentConfig) -> ExperimentResult:
    """Monte Carlo P(N^{2/3}(lambda_N - 2) > x), or < -x on the left side."""
    spec = cfg.spec

    def one(index: int) -> float:
        h = sample_wigner(spec, cfg.n, cfg.seed, index)
        top = largest_eigenvalue(h) if cfg.fast_largest else eigen(h).largest
        return edge_statistic(top, cfg.n)

    batch = map_samples(one, cfg.samples, cfg.threads)
    check_failures(batch.failures, cfg.samples)
    stats_ = np.array(batch.values, dtype=np.float64)
    trials = stats_.size
    estimates: list[tuple[float, float]] = []
    rows: list[list[Cell]] = []
    for x in cfg.x_grid:
        hits = int(np.count_nonzero(stats_ > x if cfg.side == "right" else stats_ < -x))
        p_hat = hits / trials
        low, high = wilson_interval(hits, trials)
        estimates.append((x, p_hat))
        rows.append(
            [
                x,
                cfg.side,
                cfg.n,
                cfg.beta,
                trials,
                hits,
                p_hat,
                low,
                high,
                _exact_reference(cfg, x),
                _asymptote_reference(cfg, x),
                cfg.in_window(x),
                batch.failures,
                None,
            ]
        )
    c0 = _left_fit(cfg, estimates)
    for row in rows:
        row[-1] = c0
    notes = {} if spec.is_gaussian else {"edge_drift": f"{edge_drift(cfg):.4g}"}
    return ExperimentResult(TAIL_HEADER, rows, cfg.samples, batch.failures, notes)


# ---------------------------------------------------------------------------
# exact-tails
# ---------------------------------------------------------------------------


def _shape(beta: int, r: float) -> float | None:
    return r ** (-0.75 * beta) * math.exp(-(2.0 * beta / 3.0) * r**1.5) if r > 0 else None


def _fit(r: Sequence[float], counts: Sequence[float | None], beta: int) -> PrefactorFit | None:
    lo, hi = FIT_WINDOW
    pts = [
        (x, c, s)
        for x, c in zip(r, counts, strict=True)
        if lo <= x <= hi and c is not None and c > 0 and (s := _shape(beta, x)) is not None
    ]
    if not pts:
        return None
    return fit_prefactor([p[0] for p in pts], [p[1] for p in pts], [p[2] for p in pts])


@register("exact-tails")
@traced_experiment
def run_exact_tails(cfg: ExperimentConfig) -> ExperimentResult:
    """Kernel-based expected counts above 2 + N^{-2/3} r with fitted prefactors."""
    if cfg.n % 2 and cfg.beta == 1:
        raise UnsupportedDimensionError(f"GOE tails need even n, got {cfg.n}")
    r = list(cfg.x_grid)
    gue = [gue_expected_count_above(cfg.n, x).expected_count for x in r]
    goe: list[float | None] = (
        [goe_expected_count_above(cfg.n, x, convention=cfg.convention).expected_count for x in r]
        if cfg.n % 2 == 0
        else [None] * len(r)
    )
    gue_fit = _fit(r, gue, 2)
    goe_fit = _fit(r, goe, 1)
    rows: list[list[Cell]] = [
        [
            x,
            g2,
            g1,
            _shape(2, x),
            _shape(1, x),
            gue_fit.c if gue_fit else None,
            goe_fit.c if goe_fit else None,
            gue_fit.window_constant if gue_fit else None,
            goe_fit.window_constant if goe_fit else None,
        ]
        for x, g2, g1 in zip(r, gue, goe, strict=True)
    ]
    return ExperimentResult(EXACT_HEADER, rows)


# ---------------------------------------------------------------------------
# flow-compare
# ---------------------------------------------------------------------------


def flow_config(cfg: ExperimentConfig) -> FlowConfig:
    if len(cfg.x_grid) != 1:
        raise InvalidInputError("flow-compare takes a single x")
    return FlowConfig(
        x=cfg.x_grid[0],
        n=cfg.n,
        samples=cfg.samples,
        epsilon=cfg.epsilon,
        times=cfg.times,
        side=cfg.side,
        c0=cfg.c0,
    )


@register("flow-compare")
@traced_experiment
def run_flow_compare(cfg: ExperimentConfig) -> ExperimentResult:
    """E[F(X(t))] along the flow plus the Wigner-vs-Gaussian endpoint row."""
    fcfg = flow_config(cfg)
    curve = comparison_curve(cfg.spec, fcfg, cfg.seed, threads=cfg.threads)
    check_failures(curve.failures, cfg.samples)
    end = endpoint_difference(cfg.spec, fcfg, cfg.seed, threads=cfg.threads)
    check_failures(end.failures, 2 * cfg.samples)
    rows: list[list[Cell]] = [
        ["curve", p.t, p.mean, p.stderr, p.count, None, None, None, None, curve.failures]
        for p in curve.points
    ]
    rows.append(
        [
            "endpoint",
            fcfg.terminal_time,
            end.mean_wigner,
            end.stderr,
            end.samples,
            end.delta,
            end.ci_low,
            end.ci_high,
            end.bound,
            end.failures,
        ]
    )
    return ExperimentResult(FLOW_HEADER, rows, cfg.samples, curve.failures + end.failures)


# ---------------------------------------------------------------------------
# local-law
# ---------------------------------------------------------------------------


@register("local-law")
@traced_experiment
def run_local_law(cfg: ExperimentConfig) -> ExperimentResult:
    """Per sample: local-law residuals at the edge, rigidity and the counting sandwich."""
    spec = cfg.spec
    z = complex(2.0, cfg.n ** (-2.0 / 3.0 + LOCAL_LAW_OFFSET))
    counting = CountingConfig.from_edge(0.0, cfg.n, cfg.epsilon)

    def one(index: int) -> list[Cell]:
        h = sample_wigner(spec, cfg.n, cfg.seed, index)
        s = eigen(h, eigenvectors=True)
        law = local_law_report(h, z, cfg.epsilon, spectrum=s)
        rig = rigidity_report(s, cfg.rigidity_exponent)
        sandwich = sandwich_check(s, 2.0, counting)
        iso = law.isotropic_residuals
        return [
            index,
            law.entrywise_max,
            law.trace_residual,
            iso.get("e1,e1"),
            iso.get("e1,e2"),
            iso.get("u,u"),
            law.bound,
            law.psi,
            rig.max_residual,
            rig.threshold,
            len(rig.flagged),
            sandwich.holds,
            sandwich.lower_margin,
            sandwich.upper_margin,
            count_window(s, counting).above_window,
        ]

    batch = map_samples(one, cfg.samples, cfg.threads)
    check_failures(batch.failures, cfg.samples)
    return ExperimentResult(LOCAL_LAW_HEADER, batch.values, cfg.samples, batch.failures)


# ---------------------------------------------------------------------------
# tw-table
# ---------------------------------------------------------------------------


def _shape_or_none(beta: Beta, x: float, side: Side) -> float | None:
    try:
        return tail_asymptote(beta, x, side)
    except DomainError:
        return None


@register("tw-table")
@traced_experiment
def run_tw_table(cfg: ExperimentConfig) -> ExperimentResult:
    """TW_1, TW_2 and the tail shapes on the x grid."""
    rows: list[list[Cell]] = [
        [
            x,
            tw_cdf(1, x).value,
            tw_cdf(2, x).value,
            _shape_or_none(1, x, "right"),
            _shape_or_none(2, x, "right"),
            _shape_or_none(1, x, "left"),
            _shape_or_none(2, x, "left"),
        ]
        for x in cfg.x_grid
    ]
    return ExperimentResult(TW_HEADER, rows)
