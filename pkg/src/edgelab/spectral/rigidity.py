"""Eigenvalue rigidity diagnostics against the classical locations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from edgelab.spectral.eigen import Spectrum
from edgelab.spectral.semicircle import classical_locations


@dataclass(frozen=True, slots=True)
class RigidityReport:
    """Normalised residuals r_j = |lambda_j - gamma_j| N^{2/3} min(j, N-j+1)^{1/3}.

    ``flagged`` holds 1-based indices j with r_j above N^{tolerance_exponent}.
    """

    residuals: NDArray[np.float64]
    max_residual: float
    threshold: float
    flagged: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.flagged


def rigidity_report(s: Spectrum, tolerance_exponent: float) -> RigidityReport:
    n = s.n
    gamma = classical_locations(n).gamma
    j = np.arange(1, n + 1, dtype=np.float64)
    weight = n ** (2.0 / 3.0) * np.minimum(j, n - j + 1) ** (1.0 / 3.0)
    r = np.abs(s.eigenvalues - gamma) * weight
    threshold = float(n**tolerance_exponent)
    flagged = tuple(int(k) + 1 for k in np.flatnonzero(r > threshold))
    return RigidityReport(r, float(r.max()), threshold, flagged)
