"""Eigensolves for sampled matrices.

Both paths go through LAPACK's Hermitian drivers, which reduce to
tridiagonal form first.  The full solve uses the MRRR driver; the
largest-only path asks the bisection driver for a single index.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from edgelab.ensembles.sampling import WignerMatrix
from edgelab.errors import NumericInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Eigenvalues sorted non-decreasing (lambda_1 <= ... <= lambda_N)."""

    n: int
    eigenvalues: NDArray[np.float64]
    eigenvectors: NDArray[np.float64] | NDArray[np.complex128] | None = None

    @classmethod
    def from_values(cls, values: NDArray[np.float64] | list[float]) -> Spectrum:
        """Wrap explicit eigenvalues (sorted here) for deterministic checks."""
        arr = np.sort(np.asarray(values, dtype=np.float64))
        if not np.all(np.isfinite(arr)):
            raise NumericInputError("eigenvalues must be finite")
        arr.setflags(write=False)
        return cls(arr.size, arr)

    @property
    def largest(self) -> float:
        return float(self.eigenvalues[-1])


def _checked(h: WignerMatrix) -> NDArray[np.float64] | NDArray[np.complex128]:
    if not np.all(np.isfinite(h.entries)):
        raise NumericInputError(f"sample {h.sample_index} has non-finite entries")
    return h.entries


def eigen(h: WignerMatrix, *, eigenvectors: bool = False) -> Spectrum:
    """Full spectral decomposition; eigenvectors only when asked for."""
    a = _checked(h)
    if eigenvectors:
        values, vectors = scipy.linalg.eigh(a, driver="evr", check_finite=False)
    else:
        values = scipy.linalg.eigh(a, eigvals_only=True, driver="evr", check_finite=False)
        vectors = None
    values = np.asarray(values, dtype=np.float64)
    values.setflags(write=False)
    return Spectrum(h.n, values, vectors)


def largest_eigenvalue(h: WignerMatrix) -> float:
    """lambda_N alone, via tridiagonalisation and bisection on the top index."""
    a = _checked(h)
    top = scipy.linalg.eigh(
        a,
        eigvals_only=True,
        subset_by_index=[h.n - 1, h.n - 1],
        driver="evx",
        check_finite=False,
    )
    return float(top[0])


def edge_statistic(lambda_n: float, n: int) -> float:
    """N^{2/3} (lambda_N - 2), the Tracy-Widom scaled top eigenvalue."""
    return float(n ** (2.0 / 3.0) * (lambda_n - 2.0))
