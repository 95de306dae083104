"""Interpolating matrix flow and the Green-function comparison observable."""

from edgelab.flow.comparison import (
    DEFAULT_LEFT_C0,
    EndpointDifference,
    FlowConfig,
    FlowCurve,
    FlowPoint,
    comparison_curve,
    endpoint_difference,
    observable_FX,
    theorem_bound,
)
from edgelab.flow.interpolation import flow_cumulant, flow_velocity, interpolate

__all__ = [
    "DEFAULT_LEFT_C0",
    "EndpointDifference",
    "FlowConfig",
    "FlowCurve",
    "FlowPoint",
    "comparison_curve",
    "endpoint_difference",
    "flow_cumulant",
    "flow_velocity",
    "interpolate",
    "observable_FX",
    "theorem_bound",
]
