"""Composite Gauss-Legendre quadrature with panel refinement."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from functools import cache

import numpy as np
from numpy.polynomial import legendre
from numpy.typing import NDArray

from edgelab.errors import NumericError

logger = logging.getLogger(__name__)

PANEL_WIDTH = 0.25
ORDER = 16
RTOL = 1e-9
MAX_REFINEMENTS = 8

VectorFn = Callable[[NDArray[np.float64]], NDArray[np.float64]]


@cache
def _gauss_legendre(order: int) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    nodes, weights = legendre.leggauss(order)
    return nodes, weights


def panel_nodes(
    a: float, b: float, width: float, order: int = ORDER
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Nodes and weights of composite Gauss-Legendre on [a, b] with panels <= width."""
    panels = max(1, math.ceil((b - a) / width))
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    t, w = _gauss_legendre(order)
    nodes = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def composite_gauss_legendre(
    fn: VectorFn,
    a: float,
    b: float,
    *,
    width: float = PANEL_WIDTH,
    order: int = ORDER,
    rtol: float = RTOL,
    max_refinements: int = MAX_REFINEMENTS,
) -> float:
    """int_a^b fn, halving the panel width until two passes agree to rtol."""
    if b <= a:
        return 0.0
    nodes, weights = panel_nodes(a, b, width, order)
    previous = float(np.dot(weights, fn(nodes)))
    for _ in range(max_refinements):
        width /= 2.0
        nodes, weights = panel_nodes(a, b, width, order)
        current = float(np.dot(weights, fn(nodes)))
        if abs(current - previous) <= rtol * abs(current):
            return current
        previous = current
    raise NumericError(
        f"quadrature on [{a}, {b}] did not settle after {max_refinements} refinements"
    )
