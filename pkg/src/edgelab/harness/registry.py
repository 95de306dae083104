"""Experiment registry."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from edgelab.harness.config import ExperimentConfig
    from edgelab.harness.csvio import Cell

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ExperimentResult:
    header: tuple[str, ...]
    rows: list[list[Cell]]
    samples: int = 0
    failures: int = 0
    # Caveats echoed to stderr by the CLI, e.g. the finite-N edge drift.
    notes: dict[str, str] = field(default_factory=dict)


# Receives a validated config, returns the CSV-ready result.
Experiment = Callable[["ExperimentConfig"], ExperimentResult]

_registry: dict[str, Experiment] = {}


def register(kind: str) -> Callable[[Experiment], Experiment]:
    """Decorator to register an experiment under its CLI subcommand name."""

    def decorator(fn: Experiment) -> Experiment:
        _registry[kind] = fn
        return fn

    return decorator


def get_experiment(kind: str) -> Experiment | None:
    return _registry.get(kind)


def registered_kinds() -> list[str]:
    return list(_registry.keys())
