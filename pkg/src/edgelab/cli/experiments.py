"""Experiment subcommands."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import cast

from edgelab.cli._common import (
    EXIT_BAD_ARGS,
    EXIT_IO,
    EXIT_OK,
    EXIT_SAMPLE_FAILURE,
    _err,
    _output_path,
    _overrides,
)
from edgelab.config import Settings
from edgelab.errors import EdgeLabError, SampleFailureError
from edgelab.harness import ExperimentKind, build_config, emit_csv, get_experiment

logger = logging.getLogger(__name__)


def _cmd_experiment(args: argparse.Namespace, settings: Settings) -> int:
    """Build the config, run the experiment and write its CSV."""
    experiment = get_experiment(args.command)
    if experiment is None:
        _err(f"unknown experiment {args.command!r}")
        return EXIT_BAD_ARGS
    try:
        text = Path(args.config).read_text(encoding="utf-8") if args.config else None
    except OSError as exc:
        _err(f"cannot read config: {exc}")
        return EXIT_IO
    try:
        cfg = build_config(cast(ExperimentKind, args.command), text, _overrides(args), settings)
        for x in cfg.flagged_x():
            _err(f"warning: x={x!r} is outside the window x <= {cfg.window_limit:.6g}")
        result = experiment(cfg)
        for key, note in result.notes.items():
            _err(f"note: {key} = {note}")
    except SampleFailureError as exc:
        _err(f"{exc.code}: {exc}")
        return EXIT_SAMPLE_FAILURE
    except EdgeLabError as exc:
        _err(f"{exc.code}: {exc}")
        return EXIT_BAD_ARGS
    try:
        emit_csv(result.header, result.rows, _output_path(cfg.out, settings))
    except OSError as exc:
        _err(f"cannot write CSV: {exc}")
        return EXIT_IO
    return EXIT_OK
