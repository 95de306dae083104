"""det(I - K_Ai) on L^2(x, inf) by Nystrom discretisation.

Gauss-Legendre nodes on (-1, 1) are mapped to (x, inf) with
t = x + 10 tan(pi (u + 1) / 4); the order doubles until the determinant
settles.  Independent of the Painleve route, so it serves as an oracle.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.polynomial import legendre
from scipy import linalg

from edgelab.errors import DomainError, NumericError
from edgelab.kernels.airy import airy_kernel

logger = logging.getLogger(__name__)

ORACLE_RANGE = (-10.0, 10.0)
START_ORDER = 20
MAX_ORDER = 640
TOL = 1e-9
_MAP_SCALE = 10.0


def _determinant(x: float, order: int) -> float:
    u, w = legendre.leggauss(order)
    angle = math.pi * (u + 1.0) / 4.0
    nodes = x + _MAP_SCALE * np.tan(angle)
    weights = w * _MAP_SCALE * (math.pi / 4.0) / np.cos(angle) ** 2
    root_w = np.sqrt(weights)
    k = airy_kernel(nodes[:, None], nodes[None, :])
    matrix = np.eye(order) - root_w[:, None] * k * root_w[None, :]
    return float(linalg.det(matrix))


def fredholm_oracle(x: float, quadrature_order: int = START_ORDER) -> float:
    """TW_2(x) as a Fredholm determinant, converged to 1e-9 under order doubling."""
    lo, hi = ORACLE_RANGE
    if not lo <= x <= hi:
        raise DomainError(f"the Fredholm oracle is evaluated on [{lo}, {hi}], got {x!r}")
    order = quadrature_order
    previous = _determinant(x, order)
    while order < MAX_ORDER:
        order *= 2
        current = _determinant(x, order)
        if abs(current - previous) < TOL:
            logger.debug("Fredholm determinant at x=%s settled at order %d", x, order)
            return current
        previous = current
    raise NumericError(f"Fredholm determinant at x={x!r} did not settle by order {MAX_ORDER}")
