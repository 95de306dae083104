"""Observability helpers: logging setup and traced experiments."""

from edgelab.obs.setup import current_run_id, init_observability
from edgelab.obs.wrappers import traced_experiment

__all__ = [
    "current_run_id",
    "init_observability",
    "traced_experiment",
]
