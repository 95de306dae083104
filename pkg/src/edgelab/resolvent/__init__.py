"""Resolvent diagnostics, mollified counting and the smooth cut-off."""

from edgelab.resolvent.counting import (
    CountingConfig,
    CountingResult,
    SandwichResult,
    Side,
    count_window,
    edge_scales,
    mollified_count,
    mollified_count_quadrature,
    sandwich_check,
)
from edgelab.resolvent.cutoff import (
    RAMP_END,
    RAMP_START,
    cutoff_F,
    cutoff_F_array,
    cutoff_F_tilde,
    derivative_bound,
)
from edgelab.resolvent.green import (
    LocalLawReport,
    SpectralDomain,
    default_probes,
    green_derivative,
    green_derivative_fd,
    green_entry_grid,
    local_law_bound,
    local_law_report,
    m_n,
)

__all__ = [
    "RAMP_END",
    "RAMP_START",
    "CountingConfig",
    "CountingResult",
    "LocalLawReport",
    "SandwichResult",
    "Side",
    "SpectralDomain",
    "count_window",
    "cutoff_F",
    "cutoff_F_array",
    "cutoff_F_tilde",
    "default_probes",
    "derivative_bound",
    "edge_scales",
    "green_derivative",
    "green_derivative_fd",
    "green_entry_grid",
    "local_law_bound",
    "local_law_report",
    "m_n",
    "mollified_count",
    "mollified_count_quadrature",
    "sandwich_check",
]
