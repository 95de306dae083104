"""Exact evaluation of the cumulant expansion E[h f(h)] for polynomial f."""

from __future__ import annotations

import math
from collections.abc import Sequence

from numpy.polynomial import Polynomial

from edgelab.ensembles.distributions import EntryDistribution, moment, moments_to_cumulants
from edgelab.errors import InvalidInputError


def _expect(poly: Polynomial, moments: list[float]) -> float:
    # moments[k] = E[h^k], moments[0] = 1
    return math.fsum(float(c) * moments[k] for k, c in enumerate(poly.coef))


def cumulant_expansion_residual(
    dist: EntryDistribution,
    poly_coeffs: Sequence[float],
    l: int,  # noqa: E741
    n_scale: int,
) -> float:
    """|E[h f(h)] - sum_{k=0}^{l-1} c^{(k+1)}(h)/k! E[f^{(k)}(h)]| with h = X / sqrt(n_scale).

    ``poly_coeffs`` are in increasing degree order. All expectations use exact
    moments, so the residual is the truncation term alone and vanishes once
    ``l`` exceeds the degree of f.
    """
    if len(poly_coeffs) == 0:
        raise InvalidInputError("poly_coeffs must be non-empty")
    if n_scale < 1:
        raise InvalidInputError(f"n_scale must be >= 1, got {n_scale}")
    f = Polynomial(list(poly_coeffs))
    degree = len(poly_coeffs) - 1
    if l < max(degree, 1):
        raise InvalidInputError(f"l = {l} is below the polynomial degree {degree}")

    top = max(degree + 1, l)
    s = 1.0 / math.sqrt(n_scale)
    h_moments = [1.0] + [moment(dist, k) * s**k for k in range(1, top + 1)]
    h_cumulants = moments_to_cumulants(h_moments[1:])

    lhs = _expect(Polynomial([0.0, 1.0]) * f, h_moments)
    rhs = 0.0
    deriv = f
    for k in range(l):
        rhs += h_cumulants[k] / math.factorial(k) * _expect(deriv, h_moments)
        deriv = deriv.deriv()
    return abs(lhs - rhs)
