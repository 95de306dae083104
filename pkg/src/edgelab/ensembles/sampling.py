"""Sampling dense Wigner matrices from ensemble specs."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from edgelab.ensembles.distributions import sample_entries
from edgelab.ensembles.spec import Beta, EnsembleSpec, gaussian_spec, validate_spec
from edgelab.errors import InvalidDimensionError, SpecValidationError
from edgelab.rng import DEFAULT_STREAM, sample_generator

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class WignerMatrix:
    """A dense Hermitian sample with provenance.

    ``entries`` is read-only; real ``float64`` for beta=1 and ``complex128``
    for beta=2.
    """

    n: int
    beta: Beta
    entries: NDArray[np.float64] | NDArray[np.complex128]
    master_seed: int
    sample_index: int

    @classmethod
    def from_array(
        cls,
        entries: NDArray[np.float64] | NDArray[np.complex128],
        *,
        beta: Beta | None = None,
        master_seed: int = 0,
        sample_index: int = 0,
    ) -> WignerMatrix:
        """Wrap an explicit Hermitian array (tests, deterministic fixtures)."""
        arr = np.array(entries, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise InvalidDimensionError(f"expected a non-empty square matrix, got {arr.shape}")
        if beta is None:
            beta = 2 if np.iscomplexobj(arr) else 1
        if beta == 1 and np.iscomplexobj(arr) and np.any(arr.imag != 0):
            raise SpecValidationError("beta=1 needs a real matrix, got non-zero imaginary parts")
        arr = arr.astype(np.complex128 if beta == 2 else np.float64)
        arr.setflags(write=False)
        return cls(arr.shape[0], beta, arr, master_seed, sample_index)

    @property
    def is_hermitian(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.conj().T))


def _hermitian_from_upper(
    upper: NDArray[np.float64] | NDArray[np.complex128], diag: NDArray[np.float64], n: int
) -> NDArray[np.float64] | NDArray[np.complex128]:
    h = np.zeros((n, n), dtype=upper.dtype)
    iu = np.triu_indices(n, k=1)
    h[iu] = upper
    h = h + h.conj().T
    h[np.diag_indices(n)] = diag
    return h


def sample_wigner(
    spec: EnsembleSpec,
    n: int,
    master_seed: int,
    sample_index: int,
    *,
    stream: str = DEFAULT_STREAM,
) -> WignerMatrix:
    """Draw H with sqrt(n) H_ij i.i.d. from the spec's laws (up to symmetry).

    For beta=2 the real and imaginary parts of an off-diagonal entry are
    i.i.d. with variance 1/2 each, so E[H_ij^2] = 0 holds by construction.
    """
    if n < 1:
        raise InvalidDimensionError(f"n must be >= 1, got {n}")
    report = validate_spec(spec)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise SpecValidationError(f"spec failed: {names}")

    rng = sample_generator(master_seed, sample_index, stream)
    m = n * (n - 1) // 2
    if spec.beta == 1:
        upper: NDArray[np.float64] | NDArray[np.complex128] = sample_entries(spec.offdiag, m, rng)
    else:
        re = sample_entries(spec.offdiag, m, rng)
        im = sample_entries(spec.offdiag, m, rng)
        upper = (re + 1j * im) / math.sqrt(2.0)
    diag = sample_entries(spec.diag, n, rng)
    h = _hermitian_from_upper(upper, diag, n) / math.sqrt(n)
    h.setflags(write=False)
    return WignerMatrix(n, spec.beta, h, master_seed, sample_index)


def sample_gaussian(
    beta: Beta,
    n: int,
    master_seed: int,
    sample_index: int,
    *,
    stream: str = DEFAULT_STREAM,
) -> WignerMatrix:
    """GOE (beta=1) or GUE (beta=2) sample normalised so the spectrum fills [-2, 2]."""
    return sample_wigner(gaussian_spec(beta), n, master_seed, sample_index, stream=stream)
