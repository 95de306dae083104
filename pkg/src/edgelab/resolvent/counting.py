"""Mollified eigenvalue counting and the sandwich bounds around the sharp count."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate

from edgelab.errors import DomainError
from edgelab.spectral.eigen import Spectrum

Side = Literal["right", "left"]


def edge_scales(n: int, epsilon: float) -> tuple[float, float, float]:
    """(eta, l, E_L) = (N^{-2/3-eps}, N^{-2/3-eps/9}, 2 + N^{-2/3+eps})."""
    return (
        n ** (-2.0 / 3.0 - epsilon),
        n ** (-2.0 / 3.0 - epsilon / 9.0),
        2.0 + n ** (-2.0 / 3.0 + epsilon),
    )


class CountingConfig(BaseModel):
    """Window [E1, E2] and mollifier width eta for Tr chi * theta_eta(H)."""

    model_config = ConfigDict(frozen=True)

    e1: float
    e2: float
    eta: float = Field(gt=0.0)
    epsilon: float = Field(default=0.15, gt=0.0)
    l: float | None = Field(default=None, gt=0.0)  # noqa: E741

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if not self.e1 < self.e2:
            raise ValueError(f"need E1 < E2, got [{self.e1}, {self.e2}]")
        return self

    @classmethod
    def from_edge(cls, x: float, n: int, epsilon: float, side: Side = "right") -> CountingConfig:
        """E1 = E_+ - l (right) or E_- + l (left); E2 = E_L."""
        eta, l, e_l = edge_scales(n, epsilon)  # noqa: E741
        shift = n ** (-2.0 / 3.0) * x
        e1 = 2.0 + shift - l if side == "right" else 2.0 - shift + l
        return cls(e1=e1, e2=e_l, eta=eta, epsilon=epsilon, l=l)

    def with_e1(self, e1: float) -> CountingConfig:
        return self.model_copy(update={"e1": e1})


@dataclass(frozen=True, slots=True)
class CountingResult:
    mollified: float
    sharp: int
    above_window: int


@dataclass(frozen=True, slots=True)
class SandwichResult:
    holds: bool
    sharp: int
    lower: float
    upper: float
    lower_margin: float
    upper_margin: float


def mollified_count(s: Spectrum, cfg: CountingConfig) -> float:
    """(1/pi) sum_j [arctan((E2 - l_j)/eta) - arctan((E1 - l_j)/eta)]."""
    lam = s.eigenvalues
    total = np.arctan((cfg.e2 - lam) / cfg.eta) - np.arctan((cfg.e1 - lam) / cfg.eta)
    return float(math.fsum(total) / math.pi)


def mollified_count_quadrature(s: Spectrum, cfg: CountingConfig) -> float:
    """(N/pi) int_{E1}^{E2} Im m_N(y + i eta) dy by adaptive quadrature."""
    lam = np.asarray(s.eigenvalues)

    def integrand(y: float) -> float:
        return float(np.sum(cfg.eta / ((lam - y) ** 2 + cfg.eta**2)))

    inside = [float(v) for v in lam if cfg.e1 < v < cfg.e2]
    value, _ = integrate.quad(
        integrand,
        cfg.e1,
        cfg.e2,
        points=inside or None,
        limit=max(200, 50 * len(inside)),
        epsabs=1e-13,
        epsrel=1e-12,
    )
    return float(value / math.pi)


def count_window(s: Spectrum, cfg: CountingConfig) -> CountingResult:
    """Mollified count, sharp count #{E1 <= l_j <= E2}, and eigenvalues above E2."""
    lam = s.eigenvalues
    sharp = int(np.count_nonzero((lam >= cfg.e1) & (lam <= cfg.e2)))
    above = int(np.count_nonzero(lam > cfg.e2))
    return CountingResult(mollified_count(s, cfg), sharp, above)


def sandwich_check(s: Spectrum, e: float, cfg: CountingConfig) -> SandwichResult:
    """Tr chi_{E+l}*theta - N^{-eps/9} <= #{E <= l_j <= E_L} <= Tr chi_{E-l}*theta + N^{-eps/9}."""
    n, eps = s.n, cfg.epsilon
    if abs(e - 2.0) > n ** (-2.0 / 3.0 + eps):
        raise DomainError(f"E = {e!r} is outside |E - 2| <= N^(-2/3+eps)")
    l = cfg.l if cfg.l is not None else edge_scales(n, eps)[1]  # noqa: E741
    slack = n ** (-eps / 9.0)
    sharp = int(np.count_nonzero((s.eigenvalues >= e) & (s.eigenvalues <= cfg.e2)))
    lower = mollified_count(s, cfg.with_e1(e + l)) - slack if e + l < cfg.e2 else -slack
    upper = mollified_count(s, cfg.with_e1(e - l)) + slack
    lower_margin = sharp - lower
    upper_margin = upper - sharp
    return SandwichResult(
        holds=lower_margin >= 0 and upper_margin >= 0,
        sharp=sharp,
        lower=lower,
        upper=upper,
        lower_margin=lower_margin,
        upper_margin=upper_margin,
    )
