"""Green functions G(z) = (H - z)^{-1}, their normalised trace and local-law diagnostics."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike, NDArray

from edgelab.ensembles.sampling import WignerMatrix
from edgelab.errors import DomainError
from edgelab.spectral.eigen import Spectrum, eigen
from edgelab.spectral.semicircle import semicircle_stieltjes

ProbePair = tuple[NDArray[np.complex128], NDArray[np.complex128]]


@dataclass(frozen=True, slots=True)
class SpectralDomain:
    """S(eps) = {E + i eta : |E| <= 5, N^{-1+eps} <= eta <= 10}."""

    epsilon: float

    def contains(self, z: complex, n: int) -> bool:
        return abs(z.real) <= 5.0 and n ** (-1.0 + self.epsilon) <= z.imag <= 10.0


@dataclass(frozen=True, slots=True)
class LocalLawReport:
    z: complex
    entrywise_max: float
    trace_residual: float
    isotropic_residuals: dict[str, float]
    bound: float
    psi: float

    def within(self, factor: float) -> bool:
        """Entrywise, trace and isotropic residuals all below ``factor * bound``."""
        worst = max(self.entrywise_max, self.trace_residual, *self.isotropic_residuals.values())
        return worst <= factor * self.bound


def _require_upper(z: complex) -> None:
    if z.imag <= 0:
        raise DomainError(f"resolvent needs Im z > 0, got {z!r}")


def _with_vectors(h: WignerMatrix, spectrum: Spectrum | None) -> Spectrum:
    if spectrum is not None and spectrum.eigenvectors is not None:
        return spectrum
    return eigen(h, eigenvectors=True)


def green_entry_grid(
    h: WignerMatrix, z: complex, *, spectrum: Spectrum | None = None
) -> NDArray[np.complex128]:
    """All entries of G(z) via G = V diag(1/(lambda - z)) V*."""
    _require_upper(z)
    s = _with_vectors(h, spectrum)
    v = s.eigenvectors
    assert v is not None
    return np.asarray((v * (1.0 / (s.eigenvalues - z))) @ v.conj().T, dtype=np.complex128)


def m_n(s: Spectrum, z: complex | ArrayLike) -> complex | NDArray[np.complex128]:
    """m_N(z) = (1/N) sum_j 1/(lambda_j - z); vectorised over ``z``."""
    zz = np.asarray(z, dtype=np.complex128)
    if np.any(zz.imag <= 0):
        raise DomainError("m_N needs Im z > 0")
    out = np.mean(1.0 / (s.eigenvalues[:, None] - zz.reshape(1, -1)), axis=0)
    return complex(out[0]) if zz.ndim == 0 else out.reshape(zz.shape)


def local_law_bound(n: int, z: complex) -> float:
    """sqrt(Im m_sc / (N eta)) + 1/(N eta)."""
    m = complex(semicircle_stieltjes(z))
    return math.sqrt(m.imag / (n * z.imag)) + 1.0 / (n * z.imag)


def default_probes(n: int) -> dict[str, ProbePair]:
    e1 = np.zeros(n, dtype=np.complex128)
    e1[0] = 1.0
    probes = {"e1,e1": (e1, e1)}
    if n > 1:
        e2 = np.zeros(n, dtype=np.complex128)
        e2[1] = 1.0
        probes["e1,e2"] = (e1, e2)
    u = np.full(n, 1.0 / math.sqrt(n), dtype=np.complex128)
    probes["u,u"] = (u, u)
    return probes


def local_law_report(
    h: WignerMatrix,
    z: complex,
    epsilon: float,
    probe_vectors: Mapping[str, ProbePair] | None = None,
    *,
    spectrum: Spectrum | None = None,
) -> LocalLawReport:
    """Entrywise, averaged and isotropic residuals of G(z) against m_sc(z)."""
    if not SpectralDomain(epsilon).contains(z, h.n):
        raise DomainError(f"z = {z!r} is outside S({epsilon}) for N = {h.n}")
    s = _with_vectors(h, spectrum)
    msc = complex(semicircle_stieltjes(z))
    g = green_entry_grid(h, z, spectrum=s)
    g[np.diag_indices(h.n)] -= msc
    v = s.eigenvectors
    assert v is not None
    weights = 1.0 / (s.eigenvalues - z)
    iso: dict[str, float] = {}
    for label, (a, b) in (probe_vectors or default_probes(h.n)).items():
        va, vb = v.conj().T @ a, v.conj().T @ b
        value = np.vdot(va, weights * vb) - msc * np.vdot(a, b)
        iso[label] = float(abs(value))
    return LocalLawReport(
        z=z,
        entrywise_max=float(np.abs(g).max()),
        trace_residual=abs(complex(m_n(s, z)) - msc),
        isotropic_residuals=iso,
        bound=local_law_bound(h.n, z),
        psi=h.n ** (-1.0 / 3.0 + epsilon),
    )


def green_derivative(g: NDArray[np.complex128], i: int, j: int, a: int, b: int) -> complex:
    """dG_ij / dh_ab = -(G_ia G_bj + G_ib G_aj) / (1 + delta_ab) for a symmetric entry pair."""
    num = g[i, a] * g[b, j] + g[i, b] * g[a, j]
    return complex(-num / (2.0 if a == b else 1.0))


def green_derivative_fd(
    entries: NDArray[np.float64],
    z: complex,
    i: int,
    j: int,
    a: int,
    b: int,
    step: float = 1e-6,
) -> complex:
    """Central finite difference of G_ij(z) when h_ab = h_ba moves by ``step``."""
    _require_upper(z)
    n = entries.shape[0]
    bump = np.zeros((n, n))
    bump[a, b] = 1.0
    bump[b, a] = 1.0
    eye = np.eye(n)

    def g_ij(delta: float) -> complex:
        g = scipy.linalg.solve(entries + delta * bump - z * eye, eye)
        return complex(g[i, j])

    return (g_ij(step) - g_ij(-step)) / (2.0 * step)
