"""Experiment configuration: ``key = value`` files, CLI overrides and Settings defaults.

Precedence, lowest first: :class:`edgelab.config.Settings`, the config
file, command-line flags.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from edgelab.config import Settings
from edgelab.ensembles.spec import Beta, EnsembleSpec, spec_from_mapping, validate_spec
from edgelab.errors import ConfigError, SpecValidationError
from edgelab.flow.comparison import DEFAULT_LEFT_C0
from edgelab.kernels.edge import GoeConvention
from edgelab.resolvent.counting import Side

ExperimentKind = Literal["tail-mc", "flow-compare", "local-law", "exact-tails", "tw-table"]

EXPERIMENT_KINDS: tuple[ExperimentKind, ...] = (
    "tail-mc",
    "flow-compare",
    "local-law",
    "exact-tails",
    "tw-table",
)

_LIST_KEYS = frozenset({"x_grid", "times", "values", "probabilities"})
_SPEC_KEYS = ("dist", "scale", "diag_m2", "values", "probabilities")


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    experiment: ExperimentKind
    beta: Beta = 1
    dist: str = "gaussian"
    scale: float = Field(default=1.0, gt=0.0)
    diag_m2: float | None = None
    values: tuple[float, ...] = ()
    probabilities: tuple[float, ...] = ()
    n: int = Field(default=400, ge=1)
    samples: int = Field(default=1000, ge=1)
    x_grid: tuple[float, ...] = (1.0,)
    side: Side = "right"
    epsilon: float = Field(default=0.15, gt=0.0, lt=2.0 / 3.0)
    seed: int = Field(default=0, ge=0)
    out: str | None = None
    threads: int = Field(default=1, ge=1)
    window_m: float = Field(default=2.0, gt=0.0)
    times: tuple[float, ...] = (0.0, 50.0)
    fast_largest: bool = True
    convention: GoeConvention = "printed"
    c0: float = Field(default=DEFAULT_LEFT_C0, gt=0.0)
    rigidity_exponent: float = 0.1

    @field_validator("x_grid")
    @classmethod
    def _non_empty(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v:
            raise ValueError("x_grid must not be empty")
        return v

    @property
    def spec(self) -> EnsembleSpec:
        entries = {
            k: _render(getattr(self, k)) for k in _SPEC_KEYS if getattr(self, k) not in (None, ())
        }
        return spec_from_mapping(self.beta, entries)

    @property
    def window_limit(self) -> float:
        """M (log n)^{2/3} on the right side, M (log n)^{1/3} on the left."""
        power = 2.0 / 3.0 if self.side == "right" else 1.0 / 3.0
        return self.window_m * math.log(max(self.n, 2)) ** power

    def in_window(self, x: float) -> bool:
        return x <= self.window_limit

    def flagged_x(self) -> list[float]:
        return [x for x in self.x_grid if not self.in_window(x)]


def _render(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        return ", ".join(_render(v) for v in value)
    return str(value)


def _coerce(key: str, raw: str, line: int) -> Any:
    if key == "beta":
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"beta must be 1 or 2, got {raw!r}", line=line, key=key) from None
    if key in _LIST_KEYS:
        return tuple(part.strip() for part in raw.split(",") if part.strip())
    return raw


def _validated(data: Mapping[str, Any], lines: Mapping[str, int]) -> ExperimentConfig:
    try:
        cfg = ExperimentConfig.model_validate(dict(data))
        _ = cfg.spec
    except ValidationError as exc:
        first = exc.errors()[0]
        key = str(first["loc"][0]) if first["loc"] else None
        raise ConfigError(f"{key}: {first['msg']}", line=lines.get(key or ""), key=key) from exc
    except ConfigError as exc:
        raise ConfigError(str(exc), line=lines.get(exc.key or ""), key=exc.key) from exc
    report = validate_spec(cfg.spec)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise SpecValidationError(f"ensemble spec fails its moment checks: {names}")
    return cfg


def parse_entries(text: str) -> tuple[dict[str, Any], dict[str, int]]:
    """Raw ``key -> value`` pairs plus the line each key was set on."""
    known = ExperimentConfig.model_fields
    data: dict[str, Any] = {}
    lines: dict[str, int] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError("expected 'key = value'", line=number)
        if key not in known:
            raise ConfigError(f"unknown key {key!r}", line=number, key=key)
        if key in data:
            raise ConfigError(f"duplicate key {key!r}", line=number, key=key)
        lines[key] = number
        if value:
            data[key] = _coerce(key, value, number)
    return data, lines


def parse_config(text: str) -> ExperimentConfig:
    data, lines = parse_entries(text)
    return _validated(data, lines)


def settings_defaults(settings: Settings) -> dict[str, Any]:
    return {
        "threads": settings.threads,
        "epsilon": settings.epsilon,
        "window_m": settings.window_m,
        "fast_largest": settings.fast_largest_eigen,
        "times": (0.0, settings.flow_terminal_time),
    }


def build_config(
    experiment: ExperimentKind,
    text: str | None = None,
    overrides: Mapping[str, Any] | None = None,
    settings: Settings | None = None,
) -> ExperimentConfig:
    """Merge Settings defaults, an optional config file and CLI overrides."""
    data = settings_defaults(settings or Settings())
    lines: dict[str, int] = {}
    if text is not None:
        file_data, lines = parse_entries(text)
        if file_data.get("experiment", experiment) != experiment:
            raise ConfigError(
                f"config is for {file_data['experiment']!r}, not {experiment!r}",
                line=lines.get("experiment"),
                key="experiment",
            )
        data.update(file_data)
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    data["experiment"] = experiment
    return _validated(data, lines)


def config_echo(cfg: ExperimentConfig) -> str:
    """Render ``cfg`` as the ``key = value`` block :func:`parse_config` reads back."""
    out = []
    for key in ExperimentConfig.model_fields:
        value = getattr(cfg, key)
        if value is None or value == ():
            continue
        out.append(f"{key} = {_render(value)}")
    return "\n".join(out) + "\n"
