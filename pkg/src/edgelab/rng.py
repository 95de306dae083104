"""Counter-based random streams for reproducible parallel Monte Carlo.

Every sample's randomness is a pure function of ``(master_seed,
sample_index, stream)``.  A SHAKE-128 XOF absorbs a domain tag and the three
inputs and squeezes a 128-bit key for NumPy's Philox counter-based bit
generator.  No generator state is shared between samples, so results do not
depend on scheduling order or thread count.

Engine
------
* Key derivation: ``SHAKE128(domain || u64(master_seed) || u64(sample_index) || stream)``.
* Bit generator: ``numpy.random.Philox(key=<128-bit key>)`` with counter 0.
* Streams: a short ASCII label so one sample can draw independent matrices
  (``"h0"`` and ``"w"`` for the flow coupling, ``"entries"`` for moment checks).

Public API
----------
===========================  ==============================================
Helper                       Purpose
===========================  ==============================================
``derive_key``               Raw 16-byte Philox key for a sample/stream.
``sample_generator``         ``numpy.random.Generator`` bound to that key.
===========================  ==============================================
"""

from __future__ import annotations

import sys

import numpy as np
from cryptography.hazmat.primitives import hashes

# Domain separation tag; bump the version suffix if the derivation ever changes.
_DOMAIN = b"edgelab:sample-stream:v1\x00"

_U64_MASK = (1 << 64) - 1

__all__ = ["derive_key", "sample_generator", "DEFAULT_STREAM"]

DEFAULT_STREAM = "matrix"


def _u64le(x: int) -> bytes:
    # Negative seeds are folded into the unsigned 64-bit range.
    return (x & _U64_MASK).to_bytes(8, "little", signed=False)


def derive_key(master_seed: int, sample_index: int, stream: str = DEFAULT_STREAM) -> bytes:
    """Return the 16-byte Philox key for ``(master_seed, sample_index, stream)``.

    Parameters
    ----------
    master_seed:
        Experiment-wide 64-bit seed.
    sample_index:
        Zero-based Monte Carlo sample index.  Must be non-negative.
    stream:
        Label separating independent draws inside one sample.
    """
    if sample_index < 0:
        raise ValueError("sample_index must be >= 0")
    xof = hashes.XOFHash(hashes.SHAKE128(digest_size=sys.maxsize))
    xof.update(_DOMAIN)
    xof.update(_u64le(master_seed))
    xof.update(_u64le(sample_index))
    xof.update(stream.encode("ascii"))
    return xof.squeeze(16)


def sample_generator(
    master_seed: int, sample_index: int, stream: str = DEFAULT_STREAM
) -> np.random.Generator:
    """Return a fresh Philox-backed generator for one sample and stream."""
    key = int.from_bytes(derive_key(master_seed, sample_index, stream), "little")
    return np.random.Generator(np.random.Philox(key=key))
