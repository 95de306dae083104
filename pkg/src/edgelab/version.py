"""Installed version of edgelab, read once for ``edgelab --version``."""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("edgelab")
except PackageNotFoundError:
    # source checkout without installed metadata
    __version__ = "0.0.0+source"

__all__ = ["__version__"]
