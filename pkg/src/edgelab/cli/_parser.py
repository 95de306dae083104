"""Argument parser construction for the experiment CLI."""

from __future__ import annotations

import argparse

from edgelab.cli._common import _floats
from edgelab.version import __version__

_HELP = {
    "tail-mc": "Monte Carlo edge tail probabilities with Wilson intervals",
    "exact-tails": "Kernel-based GUE/GOE expected counts above the edge",
    "flow-compare": "Flow curve E[F(X(t))] and the Wigner-vs-Gaussian endpoint difference",
    "local-law": "Local-law residuals, rigidity and counting sandwich per sample",
    "tw-table": "Tracy-Widom CDFs and tail shapes on an x grid",
}


def build_parser() -> argparse.ArgumentParser:
    # Common flags shared by all subcommands
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="Experiment file (key = value lines)")
    common.add_argument("--n", type=int, default=None, help="Matrix dimension")
    common.add_argument("--samples", type=int, default=None, help="Number of Monte Carlo samples")
    common.add_argument("--beta", type=int, choices=[1, 2], default=None, help="Symmetry class")
    common.add_argument(
        "--dist",
        default=None,
        help="Entry family: gaussian, rademacher, symmetric-uniform, symmetric-discrete",
    )
    common.add_argument("--x", type=_floats, default=None, help="Comma-separated x grid")
    common.add_argument("--side", choices=["right", "left"], default=None, help="Tail side")
    common.add_argument("--epsilon", type=float, default=None, help="Edge scale exponent")
    common.add_argument("--seed", type=int, default=None, help="Master seed")
    common.add_argument("--threads", type=int, default=None, help="Worker threads")
    common.add_argument("--out", default=None, help="CSV path (default: stdout)")
    common.add_argument("--m", type=float, default=None, help="Window guard constant M")

    parser = argparse.ArgumentParser(prog="edgelab", description="Random-matrix edge statistics")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command")

    for kind, text in _HELP.items():
        sub = subparsers.add_parser(kind, parents=[common], help=text)
        if kind == "flow-compare":
            sub.add_argument(
                "--times", type=_floats, default=None, help="Comma-separated flow times"
            )
        if kind in ("tail-mc", "exact-tails"):
            sub.add_argument(
                "--convention",
                choices=["printed", "half-sgn"],
                default=None,
                help="GOE one-point correction weight",
            )
    return parser
