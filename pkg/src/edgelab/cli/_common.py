"""Shared helpers and exit codes for the experiment CLI."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any

from edgelab.config import Settings

# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------
EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_SAMPLE_FAILURE = 3
EXIT_IO = 4


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _floats(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in raw.split(",") if part.strip())
    except ValueError:
        msg = f"expected comma-separated numbers, got {raw!r}"
        raise argparse.ArgumentTypeError(msg) from None


# Flag destination -> ExperimentConfig key
_FLAG_KEYS = {
    "n": "n",
    "samples": "samples",
    "beta": "beta",
    "dist": "dist",
    "x": "x_grid",
    "side": "side",
    "epsilon": "epsilon",
    "seed": "seed",
    "threads": "threads",
    "out": "out",
    "times": "times",
    "m": "window_m",
    "convention": "convention",
}


def _overrides(args: argparse.Namespace) -> dict[str, Any]:
    """Config keys set explicitly on the command line."""
    return {
        key: getattr(args, dest)
        for dest, key in _FLAG_KEYS.items()
        if getattr(args, dest, None) is not None
    }


def _output_path(out: str | None, settings: Settings) -> Path | None:
    if out is None or out == "-":
        return None
    path = Path(out)
    return path if path.is_absolute() else Path(settings.output_dir) / path
