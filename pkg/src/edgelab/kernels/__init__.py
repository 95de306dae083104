"""Exact finite-N Gaussian edge quantities: Hermite functions, Airy, edge kernels."""

from edgelab.kernels.airy import (
    AIRY_RANGE,
    airy_ai,
    airy_ai_prime,
    airy_envelope,
    airy_integral_tail,
    airy_kernel,
    log_airy_ai,
)
from edgelab.kernels.asymptotics import PlancherelRotach, int_even_printed, plancherel_rotach, xi
from edgelab.kernels.edge import (
    EdgeKernelEval,
    GoeConvention,
    TailIntegral,
    edge_fg,
    goe_edge_one_point,
    goe_expected_count_above,
    gue_count_double_integral,
    gue_edge_kernel,
    gue_expected_count_above,
    hermite_half_integral,
)
from edgelab.kernels.hermite import HermiteContext, gue_one_point, hermite_phi, hermite_phi_pair
from edgelab.kernels.quadrature import composite_gauss_legendre, panel_nodes

__all__ = [
    "AIRY_RANGE",
    "EdgeKernelEval",
    "GoeConvention",
    "HermiteContext",
    "PlancherelRotach",
    "TailIntegral",
    "airy_ai",
    "airy_ai_prime",
    "airy_envelope",
    "airy_integral_tail",
    "airy_kernel",
    "composite_gauss_legendre",
    "edge_fg",
    "goe_edge_one_point",
    "goe_expected_count_above",
    "gue_count_double_integral",
    "gue_edge_kernel",
    "gue_expected_count_above",
    "gue_one_point",
    "hermite_half_integral",
    "hermite_phi",
    "hermite_phi_pair",
    "int_even_printed",
    "log_airy_ai",
    "panel_nodes",
    "plancherel_rotach",
    "xi",
]
