"""Entry distributions: exact moments, cumulants and scalar draws.

Every built-in family is normalised to mean 0 and variance 1 *before*
``scale`` is applied, so the analytic moments are

==================  ==========================================
Family              E[X^k] for even k (odd moments vanish)
==================  ==========================================
standard-gaussian   (k - 1)!!
rademacher          1
symmetric-uniform   3^(k/2) / (k + 1)   (uniform on [-sqrt 3, sqrt 3])
symmetric-discrete  sum_i p_i v_i^k     (odd moments computed, not assumed)
==================  ==========================================
"""

from __future__ import annotations

import math
from typing import Literal, Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from edgelab.errors import InvalidOrderError

Family = Literal["standard-gaussian", "rademacher", "symmetric-uniform", "symmetric-discrete"]

FAMILIES: tuple[Family, ...] = (
    "standard-gaussian",
    "rademacher",
    "symmetric-uniform",
    "symmetric-discrete",
)

_DISCRETE_TOL = 1e-12
_SQRT3 = math.sqrt(3.0)


class EntryDistribution(BaseModel):
    """A mean-zero, unit-variance scalar law, multiplied by ``scale`` when drawn."""

    model_config = ConfigDict(frozen=True)

    family: Family
    scale: float = Field(default=1.0, gt=0.0, allow_inf_nan=False)
    values: tuple[float, ...] = ()
    probabilities: tuple[float, ...] = ()

    @model_validator(mode="after")
    def _check_discrete(self) -> Self:
        if self.family != "symmetric-discrete":
            if self.values or self.probabilities:
                raise ValueError("values/probabilities are only valid for symmetric-discrete")
            return self
        if not self.values or len(self.values) != len(self.probabilities):
            msg = "symmetric-discrete needs equally long, non-empty values/probabilities"
            raise ValueError(msg)
        if any(p < 0 for p in self.probabilities):
            raise ValueError("probabilities must be non-negative")
        if abs(math.fsum(self.probabilities) - 1.0) > _DISCRETE_TOL:
            raise ValueError("probabilities must sum to 1 within 1e-12")
        mean = math.fsum(p * v for v, p in zip(self.values, self.probabilities, strict=True))
        var = math.fsum(p * v * v for v, p in zip(self.values, self.probabilities, strict=True))
        if abs(mean) > _DISCRETE_TOL or abs(var - 1.0) > _DISCRETE_TOL:
            raise ValueError("symmetric-discrete values must have mean 0 and variance 1")
        return self

    def scaled(self, scale: float) -> EntryDistribution:
        """Return the same family with a different post-normalisation scale."""
        return self.model_copy(update={"scale": scale})


def _unit_moment(dist: EntryDistribution, k: int) -> float:
    if dist.family == "symmetric-discrete":
        return math.fsum(p * v**k for v, p in zip(dist.values, dist.probabilities, strict=True))
    if k % 2 == 1:
        return 0.0
    match dist.family:
        case "standard-gaussian":
            return float(math.prod(range(k - 1, 0, -2)))
        case "rademacher":
            return 1.0
        case "symmetric-uniform":
            return 3 ** (k // 2) / (k + 1)
    raise AssertionError(dist.family)  # pragma: no cover


def moment(dist: EntryDistribution, k: int) -> float:
    """Exact raw moment E[(scale * X)^k]."""
    if k < 0:
        raise InvalidOrderError(f"moment order must be >= 0, got {k}")
    if k == 0:
        return 1.0
    return dist.scale**k * _unit_moment(dist, k)


def moments_to_cumulants(moments: list[float]) -> list[float]:
    """Convert raw moments ``[m_1, ..., m_K]`` into cumulants ``[c_1, ..., c_K]``.

    Uses ``c_n = m_n - sum_{j=1}^{n-1} C(n-1, j-1) c_j m_{n-j}``.
    """
    m = [1.0, *moments]
    c = [0.0]
    for n in range(1, len(m)):
        acc = m[n]
        for j in range(1, n):
            acc -= math.comb(n - 1, j - 1) * c[j] * m[n - j]
        c.append(acc)
    return c[1:]


def cumulant(dist: EntryDistribution, k: int) -> float:
    """The k-th cumulant of ``dist``, from its exact moments."""
    if k < 1:
        raise InvalidOrderError(f"cumulant order must be >= 1, got {k}")
    return moments_to_cumulants([moment(dist, j) for j in range(1, k + 1)])[-1]


def sample_entries(
    dist: EntryDistribution, size: int | tuple[int, ...], rng: np.random.Generator
) -> NDArray[np.float64]:
    """Draw i.i.d. real variates from ``dist`` (scale applied)."""
    match dist.family:
        case "standard-gaussian":
            out = rng.standard_normal(size)
        case "rademacher":
            out = 2.0 * rng.integers(0, 2, size=size).astype(np.float64) - 1.0
        case "symmetric-uniform":
            out = rng.uniform(-_SQRT3, _SQRT3, size=size)
        case "symmetric-discrete":
            out = rng.choice(
                np.asarray(dist.values, dtype=np.float64),
                size=size,
                p=np.asarray(dist.probabilities, dtype=np.float64),
            )
        case _:  # pragma: no cover
            raise AssertionError(dist.family)
    return np.asarray(out * dist.scale, dtype=np.float64)
