"""Eigensolves, the semicircle law and rigidity diagnostics."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from edgelab.ensembles import WignerMatrix, sample_gaussian
from edgelab.errors import DomainError, InvalidDimensionError, NumericInputError
from edgelab.spectral import (
    Spectrum,
    classical_locations,
    edge_statistic,
    eigen,
    largest_eigenvalue,
    rigidity_report,
    semicircle_cdf,
    semicircle_density,
    semicircle_stieltjes,
)


class TestEigen:
    @pytest.mark.parametrize("beta", [1, 2])
    def test_largest_matches_full_solve(self, beta):
        h = sample_gaussian(beta, 60, 11, 0)
        assert largest_eigenvalue(h) == pytest.approx(eigen(h).largest, abs=1e-10)

    def test_sorted_and_read_only(self):
        s = eigen(sample_gaussian(1, 30, 0, 0))
        assert np.all(np.diff(s.eigenvalues) >= 0)
        assert not s.eigenvalues.flags.writeable
        assert s.eigenvectors is None

    def test_eigenvectors(self):
        h = sample_gaussian(2, 12, 3, 0)
        s = eigen(h, eigenvectors=True)
        assert s.eigenvectors is not None
        residual = h.entries @ s.eigenvectors - s.eigenvectors * s.eigenvalues
        assert np.max(np.abs(residual)) < 1e-10

    def test_diagonal_matrix(self):
        h = WignerMatrix.from_array(np.diag([3.0, -1.0, 0.5]))
        assert eigen(h).eigenvalues == pytest.approx([-1.0, 0.5, 3.0])
        assert largest_eigenvalue(h) == pytest.approx(3.0)

    def test_non_finite_entries(self):
        h = WignerMatrix.from_array(np.array([[np.nan, 0.0], [0.0, 1.0]]))
        with pytest.raises(NumericInputError):
            eigen(h)

    def test_edge_statistic(self):
        n = 1000
        assert edge_statistic(2.0 + n ** (-2.0 / 3.0), n) == pytest.approx(1.0)
        assert edge_statistic(2.0, n) == 0.0

    def test_top_eigenvalue_near_two(self):
        h = sample_gaussian(1, 400, 5, 0)
        assert abs(edge_statistic(largest_eigenvalue(h), 400)) < 8.0


class TestSemicircle:
    def test_density_normalised(self):
        total, _ = integrate.quad(semicircle_density, -2.0, 2.0)
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_density_vanishes_off_support(self):
        assert semicircle_density(2.5) == 0.0
        assert semicircle_density(0.0) == pytest.approx(1.0 / np.pi)

    def test_cdf_values(self):
        assert semicircle_cdf(0.0) == pytest.approx(0.5)
        assert semicircle_cdf(-3.0) == 0.0
        assert semicircle_cdf(2.0) == pytest.approx(1.0)

    def test_cdf_matches_density_integral(self):
        part, _ = integrate.quad(semicircle_density, -2.0, 1.2)
        assert semicircle_cdf(1.2) == pytest.approx(part, abs=1e-10)

    def test_stieltjes_at_i(self):
        assert semicircle_stieltjes(1j) == pytest.approx(1j * (np.sqrt(5.0) - 1.0) / 2.0)

    @pytest.mark.parametrize("z", [0.5 + 0.3j, -1.9 + 1e-3j, 2.1 + 1e-4j, -5.0 + 2.0j])
    def test_self_consistent_equation(self, z):
        m = semicircle_stieltjes(z)
        assert abs(1.0 + z * m + m * m) < 1e-12
        assert m.imag > 0

    @given(
        st.floats(min_value=-10.0, max_value=10.0),
        st.floats(min_value=1e-3, max_value=10.0),
    )
    def test_stieltjes_property(self, e, eta):
        z = complex(e, eta)
        m = semicircle_stieltjes(z)
        assert m.imag > 0
        assert abs(m) <= 1.0 + 1e-12
        assert abs(1.0 + z * m + m * m) < 1e-9 * (1.0 + abs(z))

    def test_stieltjes_matches_integral(self):
        z = 0.5 + 0.3j
        re, _ = integrate.quad(lambda x: (semicircle_density(x) / (x - z)).real, -2.0, 2.0)
        im, _ = integrate.quad(lambda x: (semicircle_density(x) / (x - z)).imag, -2.0, 2.0)
        assert semicircle_stieltjes(z) == pytest.approx(complex(re, im), abs=1e-8)

    def test_vectorised(self):
        out = semicircle_stieltjes(np.array([1j, 2j]))
        assert out.shape == (2,)

    def test_real_axis_rejected(self):
        with pytest.raises(DomainError):
            semicircle_stieltjes(0.5 + 0j)


class TestClassicalLocations:
    @pytest.mark.parametrize("n", [1, 2, 7, 100, 1001])
    def test_quantiles(self, n):
        gamma = classical_locations(n).gamma
        j = np.arange(1, n + 1)
        assert np.allclose(semicircle_cdf(gamma), j / n, atol=1e-12)
        assert gamma[-1] == 2.0
        assert np.all(np.diff(gamma) > 0)

    @pytest.mark.parametrize("n", [10, 11, 500])
    def test_antisymmetry(self, n):
        gamma = classical_locations(n).gamma
        # gamma_j + gamma_{n-j} = 0 for 1 <= j <= n-1 (1-based)
        assert np.allclose(gamma[: n - 1] + gamma[n - 2 :: -1], 0.0, atol=1e-12)

    def test_even_midpoint(self):
        assert classical_locations(10).gamma[4] == 0.0

    def test_invalid_dimension(self):
        with pytest.raises(InvalidDimensionError):
            classical_locations(0)


class TestRigidity:
    def test_classical_locations_are_perfectly_rigid(self):
        s = Spectrum.from_values(classical_locations(50).gamma)
        report = rigidity_report(s, 0.1)
        assert report.max_residual == 0.0
        assert report.passed

    def test_displaced_eigenvalue_flagged(self):
        gamma = np.array(classical_locations(50).gamma)
        gamma[24] += 0.05
        report = rigidity_report(Spectrum.from_values(gamma), 0.1)
        assert report.flagged == (25,)
        assert not report.passed

    def test_goe_sample_within_loose_tolerance(self):
        s = eigen(sample_gaussian(1, 200, 2024, 0))
        report = rigidity_report(s, 0.5)
        assert report.threshold == pytest.approx(200**0.5)
        assert report.passed, report.flagged
