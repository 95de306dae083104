"""Ensemble specs and the moment-condition checks they must pass before sampling."""

from __future__ import annotations

import math
from collections.abc import Mapping
from typing import Literal, cast, get_args

from pydantic import BaseModel, ConfigDict, Field, computed_field

from edgelab.ensembles.distributions import EntryDistribution, Family, moment
from edgelab.errors import ConfigError

# Symmetry class: 1 is real symmetric, 2 is complex Hermitian.
Beta = Literal[1, 2]

_VARIANCE_TOL = 1e-12
_CHECKED_MOMENTS = 8
_FAMILIES: frozenset[str] = frozenset(get_args(Family))


class EnsembleSpec(BaseModel):
    """Symmetry class plus the laws of the normalised entries sqrt(N) H_ij."""

    model_config = ConfigDict(frozen=True)

    beta: Beta
    offdiag: EntryDistribution
    diag: EntryDistribution
    # Correlation between real and imaginary parts of an off-diagonal entry
    # (beta=2 only). Non-zero values break E[H_ij^2] = 0.
    imag_correlation: float = Field(default=0.0, ge=-1.0, le=1.0)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def diag_second_moment(self) -> float:
        """m2 = E|sqrt(N) H_ii|^2, the analytic second moment of ``diag``."""
        return moment(self.diag, 2)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def complex_pseudo_variance_zero(self) -> bool:
        """True when E[(H_ij)^2] = 0; real parts and imaginary parts i.i.d. for beta=2."""
        return self.beta == 1 or self.imag_correlation == 0.0

    @property
    def is_gaussian(self) -> bool:
        return self.offdiag.family == "standard-gaussian" and self.diag.family == (
            "standard-gaussian"
        )


class SpecCheck(BaseModel):
    name: str
    passed: bool
    detail: str


class SpecReport(BaseModel):
    """Outcome of :func:`validate_spec`; failures are carried, never raised."""

    passed: bool
    checks: list[SpecCheck]

    def failures(self) -> list[SpecCheck]:
        return [c for c in self.checks if not c.passed]


def gaussian_diag_m2(beta: Beta) -> float:
    """Diagonal second moment of the Gaussian ensemble: 2 for GOE, 1 for GUE."""
    return 2.0 if beta == 1 else 1.0


def goe_spec() -> EnsembleSpec:
    g = EntryDistribution(family="standard-gaussian")
    return EnsembleSpec(beta=1, offdiag=g, diag=g.scaled(math.sqrt(2.0)))


def gue_spec() -> EnsembleSpec:
    g = EntryDistribution(family="standard-gaussian")
    return EnsembleSpec(beta=2, offdiag=g, diag=g)


def gaussian_spec(beta: Beta) -> EnsembleSpec:
    return goe_spec() if beta == 1 else gue_spec()


def wigner_spec(
    family: Family,
    beta: Beta = 1,
    *,
    m2: float | None = None,
    scale: float = 1.0,
    values: tuple[float, ...] = (),
    probabilities: tuple[float, ...] = (),
) -> EnsembleSpec:
    """Build a spec whose diagonal uses the off-diagonal family rescaled to variance ``m2``.

    ``m2`` defaults to the Gaussian value for ``beta`` so the diagonal second
    moment matches the Gaussian ensemble.
    """
    off = EntryDistribution(
        family=family, scale=scale, values=values, probabilities=probabilities
    )
    target = gaussian_diag_m2(beta) if m2 is None else m2
    return EnsembleSpec(beta=beta, offdiag=off, diag=off.scaled(math.sqrt(target)))


def _check(name: str, passed: bool, detail: str) -> SpecCheck:
    return SpecCheck(name=name, passed=passed, detail=detail)


def validate_spec(spec: EnsembleSpec) -> SpecReport:
    """Check the mean, variance and moment conditions on a spec."""
    off, diag = spec.offdiag, spec.diag
    checks = [
        _check("offdiag_mean_zero", abs(moment(off, 1)) <= _VARIANCE_TOL, f"{moment(off, 1)!r}"),
        _check(
            "offdiag_variance_one",
            abs(moment(off, 2) - 1.0) <= _VARIANCE_TOL,
            f"E[x^2] = {moment(off, 2)!r}",
        ),
        _check("diag_mean_zero", abs(moment(diag, 1)) <= _VARIANCE_TOL, f"{moment(diag, 1)!r}"),
        _check(
            "diag_m2_finite_positive",
            math.isfinite(spec.diag_second_moment) and spec.diag_second_moment > 0,
            f"m2 = {spec.diag_second_moment!r}",
        ),
    ]
    for label, dist in (("offdiag", off), ("diag", diag)):
        moments = [moment(dist, k) for k in range(1, _CHECKED_MOMENTS + 1)]
        checks.append(
            _check(
                f"{label}_moments_finite",
                all(math.isfinite(m) for m in moments),
                f"first {_CHECKED_MOMENTS} moments",
            )
        )
    if spec.beta == 2:
        checks.append(
            _check(
                "pseudo_variance_zero",
                spec.complex_pseudo_variance_zero,
                f"E[H_ij^2] = {spec.imag_correlation!r}i/N",
            )
        )
    return SpecReport(passed=all(c.passed for c in checks), checks=checks)


# ---------------------------------------------------------------------------
# Flat key/value form used by experiment configs
# ---------------------------------------------------------------------------


def _floats(raw: str) -> tuple[float, ...]:
    return tuple(float(part) for part in raw.split(",") if part.strip())


def spec_from_mapping(beta: Beta, entries: Mapping[str, str]) -> EnsembleSpec:
    """Build a spec from the config keys ``dist``, ``scale``, ``diag_m2``, ``values``
    and ``probabilities``.

    ``dist = gaussian`` is accepted as an alias for the Gaussian ensemble.
    """
    family = entries.get("dist", "gaussian")
    if family in ("gaussian", "standard-gaussian") and "diag_m2" not in entries:
        if float(entries.get("scale", "1")) == 1.0:
            return gaussian_spec(beta)
    if family == "gaussian":
        family = "standard-gaussian"
    if family not in _FAMILIES:
        raise ConfigError(f"unknown distribution family {family!r}", key="dist")
    m2 = float(entries["diag_m2"]) if "diag_m2" in entries else None
    return wigner_spec(
        cast(Family, family),
        beta,
        m2=m2,
        scale=float(entries.get("scale", "1")),
        values=_floats(entries.get("values", "")),
        probabilities=_floats(entries.get("probabilities", "")),
    )


def spec_to_mapping(spec: EnsembleSpec) -> dict[str, str]:
    """Inverse of :func:`spec_from_mapping` for specs built by the constructors above."""
    out = {"dist": spec.offdiag.family, "scale": repr(spec.offdiag.scale)}
    # the Gaussian diagonal is implied when diag_m2 is absent
    if spec.diag.scale != math.sqrt(gaussian_diag_m2(spec.beta)):
        out["diag_m2"] = repr(spec.diag_second_moment)
    if spec.offdiag.values:
        out["values"] = ",".join(repr(v) for v in spec.offdiag.values)
        out["probabilities"] = ",".join(repr(p) for p in spec.offdiag.probabilities)
    return out
