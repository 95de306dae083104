"""Green functions, local-law residuals, mollified counting and the cut-off F."""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import integrate

from edgelab.ensembles import WignerMatrix, sample_gaussian
from edgelab.errors import DomainError, InvalidOrderError, NumericError
from edgelab.resolvent import (
    RAMP_END,
    RAMP_START,
    CountingConfig,
    SpectralDomain,
    count_window,
    cutoff_F,
    cutoff_F_array,
    cutoff_F_tilde,
    derivative_bound,
    edge_scales,
    green_derivative,
    green_derivative_fd,
    green_entry_grid,
    local_law_bound,
    local_law_report,
    m_n,
    mollified_count,
    mollified_count_quadrature,
    sandwich_check,
)
from edgelab.spectral import Spectrum, eigen, semicircle_stieltjes


class TestGreen:
    def test_diagonal_matrix(self):
        h = WignerMatrix.from_array(np.diag([1.0, 2.0]))
        g = green_entry_grid(h, 1j)
        assert g[0, 0] == pytest.approx(1.0 / (1.0 - 1j))
        assert g[1, 1] == pytest.approx(1.0 / (2.0 - 1j))
        assert g[0, 1] == pytest.approx(0.0)

    def test_matches_direct_inverse(self):
        h = sample_gaussian(2, 8, 1, 0)
        z = 0.2 + 0.1j
        direct = np.linalg.inv(h.entries - z * np.eye(8))
        assert np.allclose(green_entry_grid(h, z), direct, atol=1e-10)

    def test_lower_half_plane_rejected(self):
        h = WignerMatrix.from_array(np.eye(2))
        with pytest.raises(DomainError):
            green_entry_grid(h, 1.0 - 0.1j)

    def test_m_n_single_eigenvalue(self):
        assert m_n(Spectrum.from_values([0.0]), 1j) == pytest.approx(1j)

    def test_m_n_is_herglotz(self):
        s = eigen(sample_gaussian(1, 50, 9, 0))
        z = np.array([-3.0 + 0.01j, 0.0 + 1e-3j, 1.99 + 1e-4j, 4.0 + 2.0j])
        values = m_n(s, z)
        assert values.shape == (4,)
        assert np.all(values.imag > 0)

    def test_m_n_equals_normalised_trace(self):
        h = sample_gaussian(1, 10, 2, 0)
        z = -0.4 + 0.2j
        trace = np.trace(green_entry_grid(h, z)) / 10
        assert m_n(eigen(h), z) == pytest.approx(trace)


class TestLocalLaw:
    def test_domain_membership(self):
        dom = SpectralDomain(0.15)
        assert dom.contains(0.5 + 0.1j, 400)
        assert not dom.contains(0.5 + 1e-4j, 400)
        assert not dom.contains(6.0 + 0.1j, 400)

    def test_bound_positive(self):
        assert local_law_bound(400, 0.3 + 0.05j) > 0

    def test_goe_within_bound(self):
        n = 400
        h = sample_gaussian(1, n, 17, 0)
        report = local_law_report(h, 0.3 + 0.05j, 0.15)
        assert set(report.isotropic_residuals) == {"e1,e1", "e1,e2", "u,u"}
        assert report.within(n**0.3)

    def test_outside_domain(self):
        h = sample_gaussian(1, 50, 0, 0)
        with pytest.raises(DomainError):
            local_law_report(h, 0.3 + 20.0j, 0.15)

    def test_custom_probes(self):
        h = sample_gaussian(1, 20, 0, 0)
        e = np.zeros(20, dtype=np.complex128)
        e[3] = 1.0
        z = 0.1 + 0.2j
        report = local_law_report(h, z, 0.15, {"e4": (e, e)})
        g = green_entry_grid(h, z)
        msc_residual = report.isotropic_residuals["e4"]
        assert msc_residual == pytest.approx(abs(g[3, 3] - semicircle_stieltjes(z)))


class TestGreenDerivative:
    @pytest.mark.parametrize("index", [(0, 1, 2, 3), (0, 0, 2, 2), (4, 4, 1, 4)])
    def test_matches_finite_difference(self, index):
        h = sample_gaussian(1, 6, 4, 0)
        z = 0.1 + 0.5j
        g = green_entry_grid(h, z)
        exact = green_derivative(g, *index)
        approx = green_derivative_fd(np.asarray(h.entries), z, *index)
        assert abs(exact - approx) < 1e-7


class TestMollifiedCount:
    def test_single_eigenvalue(self):
        s = Spectrum.from_values([0.0])
        cfg = CountingConfig(e1=-1.0, e2=1.0, eta=1e-3)
        assert mollified_count(s, cfg) == pytest.approx(2.0 / math.pi * math.atan(1000.0))

    def test_quadrature_agrees_with_closed_form(self):
        s = Spectrum.from_values([-0.5, 0.1, 0.15, 0.9, 1.4])
        cfg = CountingConfig(e1=0.0, e2=1.0, eta=1e-2)
        assert mollified_count_quadrature(s, cfg) == pytest.approx(
            mollified_count(s, cfg), abs=1e-9
        )

    def test_count_window(self):
        s = Spectrum.from_values([-1.0, 0.2, 0.5, 2.5])
        result = count_window(s, CountingConfig(e1=0.0, e2=1.0, eta=1e-4))
        assert result.sharp == 2
        assert result.above_window == 1
        assert result.mollified == pytest.approx(2.0, abs=1e-3)

    def test_window_must_be_ordered(self):
        with pytest.raises(ValidationError):
            CountingConfig(e1=1.0, e2=0.5, eta=1e-3)

    def test_edge_scales(self):
        eta, l, e_l = edge_scales(1000, 0.3)
        assert eta == pytest.approx(1000 ** (-2.0 / 3.0 - 0.3))
        assert l == pytest.approx(1000 ** (-2.0 / 3.0 - 0.3 / 9.0))
        assert e_l == pytest.approx(2.0 + 1000 ** (-2.0 / 3.0 + 0.3))
        assert eta < l

    def test_from_edge(self):
        n, eps = 1000, 0.3
        _, l, e_l = edge_scales(n, eps)
        right = CountingConfig.from_edge(1.5, n, eps)
        assert right.e1 == pytest.approx(2.0 + 1.5 * n ** (-2.0 / 3.0) - l)
        assert right.e2 == pytest.approx(e_l)
        left = CountingConfig.from_edge(1.5, n, eps, side="left")
        assert left.e1 == pytest.approx(2.0 - 1.5 * n ** (-2.0 / 3.0) + l)


class TestSandwich:
    @pytest.mark.parametrize("sample_index", [0, 1, 2])
    def test_holds_on_goe_samples(self, sample_index):
        n, eps = 200, 0.5
        s = eigen(sample_gaussian(1, n, 31, sample_index))
        cfg = CountingConfig.from_edge(0.0, n, eps)
        result = sandwich_check(s, 2.0 - n ** (-2.0 / 3.0), cfg)
        assert result.holds, result
        assert result.lower <= result.sharp <= result.upper

    def test_energy_outside_edge_window(self):
        s = Spectrum.from_values(np.linspace(-2.0, 2.0, 100))
        cfg = CountingConfig.from_edge(0.0, 100, 0.15)
        with pytest.raises(DomainError):
            sandwich_check(s, 1.0, cfg)


class TestCutoff:
    def test_flat_regions(self):
        assert cutoff_F(0.0) == 0.0
        assert cutoff_F(RAMP_START) == 0.0
        assert cutoff_F(RAMP_END) == 1.0
        assert cutoff_F(5.0) == 1.0

    def test_midpoint_by_symmetry(self):
        assert cutoff_F(1.5 / 9.0) == pytest.approx(0.5, abs=1e-12)

    def test_monotone(self):
        values = cutoff_F_array(np.linspace(0.0, 0.3, 301))
        assert np.all(np.diff(values) >= 0)
        assert values[0] == 0.0
        assert values[-1] == 1.0

    def test_tilde_is_complement(self):
        for x in (0.05, 0.13, 0.17, 0.21, 0.4):
            assert cutoff_F_tilde(x) == pytest.approx(1.0 - cutoff_F(x))

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            cutoff_F(-0.01)

    def test_first_derivative_bound(self):
        mass, _ = integrate.quad(lambda t: math.exp(-1.0 / (t * (1.0 - t))), 0.0, 1.0)
        assert derivative_bound(1) == pytest.approx(9.0 * math.exp(-4.0) / mass, rel=1e-6)

    def test_bounds_dominate_finite_differences(self):
        h = 1e-4
        x = np.linspace(RAMP_START + h, RAMP_END - h, 201)
        f_plus, f_mid, f_minus = (cutoff_F_array(x + h), cutoff_F_array(x), cutoff_F_array(x - h))
        first = np.abs(f_plus - f_minus) / (2 * h)
        second = np.abs(f_plus - 2 * f_mid + f_minus) / h**2
        assert first.max() <= derivative_bound(1) * 1.001
        assert second.max() <= derivative_bound(2) * 1.01
        assert derivative_bound(0) == 1.0

    def test_order_out_of_range(self):
        with pytest.raises(InvalidOrderError):
            derivative_bound(5)

    def test_ramp_interior_strictly_between(self):
        for x in (0.12, 0.15, 1.5 / 9.0, 0.19, 0.22):
            assert 0.0 < cutoff_F(x) < 1.0
        assert cutoff_F(0.13) + cutoff_F(3.0 / 9.0 - 0.13) == pytest.approx(1.0, abs=1e-12)

    def test_quadrature_failure_is_numeric_error(self, monkeypatch):
        def refuse(*args, **kwargs):
            raise ValueError("tolerance too small")

        monkeypatch.setattr(integrate, "quad", refuse)
        with pytest.raises(NumericError):
            cutoff_F(0.15)
