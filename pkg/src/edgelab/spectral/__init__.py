"""Eigenvalues and semicircle-law reference quantities."""

from edgelab.spectral.eigen import Spectrum, edge_statistic, eigen, largest_eigenvalue
from edgelab.spectral.rigidity import RigidityReport, rigidity_report
from edgelab.spectral.semicircle import (
    ClassicalLocations,
    classical_locations,
    semicircle_cdf,
    semicircle_density,
    semicircle_stieltjes,
)

__all__ = [
    "ClassicalLocations",
    "RigidityReport",
    "Spectrum",
    "classical_locations",
    "edge_statistic",
    "eigen",
    "largest_eigenvalue",
    "rigidity_report",
    "semicircle_cdf",
    "semicircle_density",
    "semicircle_stieltjes",
]
