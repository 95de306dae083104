"""edgelab experiment CLI.

Provides the ``edgelab`` console script and the ``python -m edgelab`` entry point.
"""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence

from edgelab.cli._common import EXIT_BAD_ARGS, EXIT_IO, EXIT_OK, EXIT_SAMPLE_FAILURE
from edgelab.cli._parser import build_parser
from edgelab.cli.experiments import _cmd_experiment
from edgelab.config import Settings
from edgelab.harness.config import EXPERIMENT_KINDS
from edgelab.obs import init_observability

__all__ = [
    "EXIT_BAD_ARGS",
    "EXIT_IO",
    "EXIT_OK",
    "EXIT_SAMPLE_FAILURE",
    "build_parser",
    "main",
]

_DISPATCHERS: dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    kind: _cmd_experiment for kind in EXPERIMENT_KINDS
}


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point. Returns an integer exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    dispatch = _DISPATCHERS.get(args.command)
    if dispatch is None:
        parser.print_help()
        return EXIT_BAD_ARGS
    settings = Settings()
    init_observability(settings)
    return dispatch(args, settings)
