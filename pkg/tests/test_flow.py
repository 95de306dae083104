"""The interpolating flow, the flow-time observable and the sample runner."""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import optimize

from edgelab.ensembles import (
    EntryDistribution,
    goe_spec,
    sample_gaussian,
    sample_wigner,
    wigner_spec,
)
from edgelab.errors import DomainError, InvalidOrderError, InvalidPairError, NumericError
from edgelab.flow import (
    FlowConfig,
    comparison_curve,
    endpoint_difference,
    flow_cumulant,
    flow_velocity,
    interpolate,
    observable_FX,
    theorem_bound,
)
from edgelab.resolvent import mollified_count
from edgelab.runner import map_samples
from edgelab.spectral import Spectrum

RADEMACHER = EntryDistribution(family="rademacher")


class TestInterpolate:
    def test_time_zero_is_identity(self):
        h0 = sample_gaussian(1, 8, 1, 0, stream="h0")
        w = sample_gaussian(1, 8, 1, 0, stream="w")
        assert interpolate(h0, w, 0.0) is h0

    def test_large_time_reaches_gaussian(self):
        h0 = sample_gaussian(1, 8, 1, 0, stream="h0")
        w = sample_gaussian(1, 8, 1, 0, stream="w")
        h = interpolate(h0, w, 60.0)
        assert np.allclose(h.entries, w.entries, atol=1e-12)

    def test_coefficients(self):
        h0 = sample_gaussian(1, 5, 2, 0, stream="h0")
        w = sample_gaussian(1, 5, 2, 0, stream="w")
        t = 0.7
        expected = math.exp(-t / 2) * h0.entries + math.sqrt(1 - math.exp(-t)) * w.entries
        assert np.allclose(interpolate(h0, w, t).entries, expected)

    def test_mismatched_pair(self):
        with pytest.raises(InvalidPairError):
            interpolate(sample_gaussian(1, 5, 0, 0), sample_gaussian(1, 6, 0, 0), 1.0)
        with pytest.raises(InvalidPairError):
            interpolate(sample_gaussian(1, 5, 0, 0), sample_gaussian(2, 5, 0, 0), 1.0)

    def test_negative_time(self):
        h = sample_gaussian(1, 4, 0, 0)
        with pytest.raises(DomainError):
            interpolate(h, h, -0.1)


class TestVelocity:
    def test_matches_finite_difference(self):
        h0 = sample_gaussian(2, 6, 3, 0, stream="h0")
        w = sample_gaussian(2, 6, 3, 0, stream="w")
        t, dt = 0.8, 1e-6
        fd = (interpolate(h0, w, t + dt).entries - interpolate(h0, w, t - dt).entries) / (2 * dt)
        assert np.allclose(flow_velocity(h0, w, t), fd, atol=1e-7)

    def test_singular_at_zero(self):
        h = sample_gaussian(1, 4, 0, 0)
        with pytest.raises(DomainError):
            flow_velocity(h, h, 0.0)


class TestFlowCumulant:
    @pytest.mark.parametrize("t", [0.0, 0.3, 2.0, 50.0])
    def test_variance_preserved(self, t):
        assert flow_cumulant(RADEMACHER, 2, t) == pytest.approx(1.0)

    def test_fourth_cumulant_decays(self):
        assert flow_cumulant(RADEMACHER, 4, 1.0) == pytest.approx(-2.0 * math.exp(-2.0))
        assert flow_cumulant(RADEMACHER, 4, 0.0) == pytest.approx(-2.0)

    def test_entry_variance_preserved_empirically(self):
        n = 450
        h0 = sample_wigner(wigner_spec("rademacher", 1), n, 8, 0, stream="h0")
        w = sample_gaussian(1, n, 8, 0, stream="w")
        h = interpolate(h0, w, 1.0)
        squares = (np.asarray(h.entries)[np.triu_indices(n, k=1)] * math.sqrt(n)) ** 2
        assert squares.size > 100_000
        stderr = float(np.std(squares) / math.sqrt(squares.size))
        assert abs(float(np.mean(squares)) - 1.0) <= 4.0 * stderr

    def test_odd_cumulants_vanish(self):
        assert flow_cumulant(RADEMACHER, 3, 0.5) == 0.0

    def test_invalid_arguments(self):
        with pytest.raises(InvalidOrderError):
            flow_cumulant(RADEMACHER, 0, 1.0)
        with pytest.raises(DomainError):
            flow_cumulant(RADEMACHER, 2, -1.0)


class TestObservable:
    def test_empty_window(self):
        cfg = FlowConfig(x=1.0, n=100, samples=1)
        s = Spectrum.from_values(np.linspace(-2.0, 1.5, 100))
        assert observable_FX(s, cfg) == 0.0
        left = cfg.model_copy(update={"side": "left"})
        assert observable_FX(s, left) == 1.0

    def test_occupied_window(self):
        cfg = FlowConfig(x=1.0, n=100, samples=1)
        inside = 0.5 * (cfg.counting.e1 + cfg.counting.e2)
        s = Spectrum.from_values([*np.linspace(-2.0, 1.5, 99), inside])
        assert observable_FX(s, cfg) == 1.0

    def test_count_on_the_ramp(self):
        cfg = FlowConfig(x=1.0, n=100, samples=1)
        c = cfg.counting

        def excess(lam: float) -> float:
            return mollified_count(Spectrum.from_values([lam]), c) - 1.0 / 6.0

        lam = optimize.brentq(excess, c.e1 - 50.0 * c.eta, c.e1, xtol=1e-15)
        s = Spectrum.from_values([lam])
        assert observable_FX(s, cfg) == pytest.approx(0.5, abs=1e-9)


class TestFlowConfig:
    def test_times_must_start_at_zero(self):
        with pytest.raises(ValidationError):
            FlowConfig(x=1.0, n=10, samples=1, times=(1.0, 2.0))

    def test_times_sorted(self):
        with pytest.raises(ValidationError):
            FlowConfig(x=1.0, n=10, samples=1, times=(0.0, 5.0, 2.0))

    def test_terminal_time(self):
        assert FlowConfig(x=1.0, n=10, samples=1, times=(0.0, 1.0, 9.0)).terminal_time == 9.0


class TestTheoremBound:
    def test_right_tail_value(self):
        expected = 400 ** (-1.0 / 6.0 + 0.6) * math.exp(-2.0 / 3.0)
        assert theorem_bound(400, 1.0, 0.15, 1) == pytest.approx(expected)

    def test_gue_shape(self):
        expected = 100 ** (-1.0 / 6.0 + 0.4) * 4.0**-1.5 * math.exp(-(4.0 / 3.0) * 8.0)
        assert theorem_bound(100, 4.0, 0.1, 2) == pytest.approx(expected)

    def test_left_tail(self):
        expected = 400 ** (-1.0 / 6.0 + 0.6) * math.exp(-8.0 / 24.0)
        assert theorem_bound(400, 2.0, 0.15, 1, side="left") == pytest.approx(expected)

    def test_nonpositive_x(self):
        with pytest.raises(DomainError):
            theorem_bound(400, 0.0, 0.15, 1)


class TestComparison:
    def test_gaussian_flow_is_flat(self):
        cfg = FlowConfig(x=-1.0, n=30, samples=40, times=(0.0, 1.0, 5.0))
        curve = comparison_curve(goe_spec(), cfg, master_seed=5)
        assert [p.t for p in curve.points] == [0.0, 1.0, 5.0]
        assert all(p.count == 40 for p in curve.points)
        deviation, stderr = curve.max_deviation()
        assert deviation <= 3.0 * stderr + 1e-12
        assert curve.failures == 0

    def test_single_sample_has_infinite_stderr(self):
        cfg = FlowConfig(x=0.0, n=10, samples=1, times=(0.0, 1.0))
        curve = comparison_curve(goe_spec(), cfg, master_seed=2)
        assert all(p.count == 1 for p in curve.points)
        assert all(math.isinf(p.stderr) for p in curve.points)
        assert all(0.0 <= p.mean <= 1.0 for p in curve.points)

    def test_thread_count_does_not_change_results(self):
        cfg = FlowConfig(x=0.0, n=20, samples=12, times=(0.0, 2.0))
        spec = wigner_spec("rademacher", 1)
        serial = comparison_curve(spec, cfg, master_seed=9, threads=1)
        threaded = comparison_curve(spec, cfg, master_seed=9, threads=4)
        assert serial == threaded

    def test_endpoint_difference_for_gaussian_input(self):
        cfg = FlowConfig(x=0.5, n=30, samples=60)
        result = endpoint_difference(goe_spec(), cfg, master_seed=3)
        assert result.ci_low <= result.delta <= result.ci_high
        assert abs(result.delta) <= 4.0 * result.stderr + 1e-12
        assert result.bound == pytest.approx(theorem_bound(30, 0.5, 0.15, 1))
        assert result.samples == 60


class TestMapSamples:
    def test_order_preserved_across_threads(self):
        serial = map_samples(lambda i: i * i, 25, threads=1)
        threaded = map_samples(lambda i: i * i, 25, threads=6)
        assert serial.values == threaded.values == [i * i for i in range(25)]

    def test_numeric_failures_are_counted(self):
        def fn(i: int) -> int:
            if i % 5 == 0:
                raise NumericError("did not settle")
            return i

        batch = map_samples(fn, 20, threads=3)
        assert batch.failures == 4
        assert batch.succeeded == 16
        assert 0 not in batch.values

    def test_linalg_failures_are_counted(self):
        def fn(i: int) -> float:
            raise np.linalg.LinAlgError("singular")

        assert map_samples(fn, 3).failures == 3

    def test_other_errors_propagate(self):
        def fn(i: int) -> int:
            raise KeyError(i)

        with pytest.raises(KeyError):
            map_samples(fn, 2)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            map_samples(lambda i: i, 3, threads=0)
