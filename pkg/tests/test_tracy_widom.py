"""Hastings-McLeod solution, Tracy-Widom laws and the Fredholm oracle."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import integrate, special

from edgelab.errors import DomainError, WrongBranchError
from edgelab.kernels import airy_integral_tail
from edgelab.tracy_widom import (
    default_solution,
    fredholm_oracle,
    gue_sharp_shape,
    hastings_mcleod,
    left_asymptote,
    painleve,
    tail_asymptote,
    tw_cdf,
    tw_pdf,
    tw_quantile,
    tw_sf,
)


@pytest.fixture(scope="module")
def solution():
    return default_solution()


class TestHastingsMcLeod:
    def test_airy_behaviour_on_the_right(self, solution):
        assert solution.q_at(6.0) / special.airy(6.0)[0] == pytest.approx(1.0, abs=1e-6)

    def test_value_at_zero(self, solution):
        assert solution.q_at(0.0) == pytest.approx(0.3670615515, abs=1e-7)
        assert solution.dq_at(0.0) == pytest.approx(-0.2953721054, abs=1e-7)

    def test_left_asymptote(self, solution):
        assert solution.q_at(-8.0) == pytest.approx(left_asymptote(-8.0), rel=1e-3)
        assert left_asymptote(-8.0) == 2.0

    def test_positive_on_solved_range(self, solution):
        assert np.all(solution.q > 0)

    @pytest.mark.parametrize("x", [-7.0, -3.3, 0.0, 2.5, 7.0])
    def test_ode_residual(self, solution, x):
        h = 1e-3
        ddq = (solution.dq_at(x + h) - solution.dq_at(x - h)) / (2 * h)
        q = solution.q_at(x)
        assert ddq == pytest.approx(x * q + 2 * q**3, abs=1e-4)

    def test_auxiliary_integrals(self, solution):
        x = -1.0
        i1, _ = integrate.quad(solution.q_at, x, solution.x_right, epsabs=1e-13)
        i1 += airy_integral_tail(solution.x_right)
        assert solution.i1_at(x) == pytest.approx(i1, abs=1e-8)
        j, _ = integrate.quad(lambda s: solution.q_at(s) ** 2, x, solution.x_right)
        assert solution.j_at(x) == pytest.approx(j, abs=1e-8)

    def test_outside_range(self, solution):
        assert not solution.contains(-9.0)
        with pytest.raises(DomainError):
            solution.q_at(-9.0)

    def test_interval_requirements(self):
        with pytest.raises(DomainError):
            hastings_mcleod(x_right=5.0)
        with pytest.raises(DomainError):
            hastings_mcleod(x_left=-6.0)

    def test_off_branch_data_detected(self, monkeypatch):
        original = painleve._airy_boundary

        def perturbed(x: float) -> np.ndarray:
            return original(x) * np.array([1.01, 1.01, 1.0, 1.0, 1.0])

        monkeypatch.setattr(painleve, "_airy_boundary", perturbed)
        with pytest.raises(WrongBranchError):
            hastings_mcleod()

    def test_left_asymptote_domain(self):
        with pytest.raises(DomainError):
            left_asymptote(0.0)


class TestDistribution:
    @pytest.mark.parametrize("x", [-3.0, -1.0, 0.0, 1.0, 2.0, 3.0])
    def test_agrees_with_fredholm(self, solution, x):
        assert tw_cdf(2, x, solution).value == pytest.approx(fredholm_oracle(x), abs=1e-6)

    def test_known_values(self, solution):
        assert tw_cdf(2, 0.0, solution).value == pytest.approx(0.9694, abs=2e-3)
        assert tw_cdf(1, 0.0, solution).value == pytest.approx(0.8319, abs=5e-3)

    def test_upper_end_is_one(self, solution):
        assert 1.0 - tw_cdf(2, 8.0, solution).value < 1e-14
        assert tw_cdf(1, 8.0, solution).value == pytest.approx(1.0, abs=1e-7)

    @pytest.mark.parametrize("beta", [1, 2])
    @pytest.mark.parametrize("x", [-3.0, -1.0, 1.0])
    def test_pdf_is_cdf_derivative(self, solution, beta, x):
        h = 1e-4
        fd = (tw_cdf(beta, x + h, solution).value - tw_cdf(beta, x - h, solution).value) / (2 * h)
        assert tw_pdf(beta, x, solution) == pytest.approx(fd, rel=1e-5)

    @pytest.mark.parametrize(("beta", "mean"), [(1, -1.2065335745), (2, -1.7710868074)])
    def test_means(self, solution, beta, mean):
        total, _ = integrate.quad(lambda x: tw_pdf(beta, x, solution), -8.0, 8.0, limit=200)
        first, _ = integrate.quad(lambda x: x * tw_pdf(beta, x, solution), -8.0, 8.0, limit=200)
        assert total == pytest.approx(1.0, abs=1e-6)
        assert first == pytest.approx(mean, abs=1e-5)

    def test_survival_without_cancellation(self, solution):
        sf = tw_sf(2, 8.0, solution)
        assert 0.0 < sf < 1e-15

    @pytest.mark.parametrize(("beta", "p", "expected"), [(2, 0.95, -0.2325), (1, 0.95, 0.9793)])
    def test_quantiles(self, solution, beta, p, expected):
        x = tw_quantile(beta, p, solution)
        assert x == pytest.approx(expected, abs=1e-2)
        assert tw_cdf(beta, x, solution).value == pytest.approx(p, abs=1e-10)

    def test_quantile_domain(self, solution):
        with pytest.raises(DomainError):
            tw_quantile(2, 1.0, solution)


class TestTails:
    def test_gue_right_tail_constant(self, solution):
        ratio = tw_sf(2, 8.0, solution) / gue_sharp_shape(8.0)
        assert ratio == pytest.approx(1.0 / (16.0 * math.pi), rel=0.15)

    def test_goe_right_tail_constant(self, solution):
        ratio = tw_sf(1, 8.0, solution) / tail_asymptote(1, 8.0)
        assert ratio == pytest.approx(1.0 / (4.0 * math.sqrt(math.pi)), rel=0.15)

    def test_ratio_improves_further_out(self, solution):
        target = 1.0 / (16.0 * math.pi)
        near = tw_sf(2, 3.0, solution) / gue_sharp_shape(3.0)
        far = tw_sf(2, 7.0, solution) / gue_sharp_shape(7.0)
        assert abs(far - target) < abs(near - target)

    def test_left_tail_cubic_rate(self, solution):
        xs = np.linspace(-8.0, -5.0, 13)
        logs = np.array([math.log(tw_cdf(2, float(x), solution).value) for x in xs])
        slope = np.polyfit(np.abs(xs) ** 3, logs, 1)[0]
        assert -2.0 / slope == pytest.approx(24.0, abs=0.5)

    def test_asymptote_domains(self):
        with pytest.raises(DomainError):
            tail_asymptote(2, 0.5)
        with pytest.raises(DomainError):
            tail_asymptote(2, -0.5, side="left")
        with pytest.raises(DomainError):
            gue_sharp_shape(0.0)

    def test_left_asymptote_shape(self):
        assert tail_asymptote(1, -2.0, side="left") == pytest.approx(
            2.0 ** (-1.0 / 16.0) * math.exp(-8.0 / 24.0)
        )


class TestFredholm:
    def test_domain(self):
        with pytest.raises(DomainError):
            fredholm_oracle(11.0)

    def test_monotone(self):
        values = [fredholm_oracle(x) for x in (-4.0, -2.0, 0.0, 2.0)]
        assert values == sorted(values)
