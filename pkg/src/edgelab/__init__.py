"""edgelab - edge statistics of Wigner matrices, numerically."""

from edgelab.config import Settings
from edgelab.version import __version__

__all__ = ["Settings", "__version__"]
