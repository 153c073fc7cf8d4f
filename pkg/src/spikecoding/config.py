"""Run configuration from a flat ``key=value`` file plus command-line flags.

Recognized keys::

    seed=0
    trials=500
    repeats=5
    out_dir=results
    methods=lif,sf,pwm,bsa
    signals=vibration,trended,rectangular,sinusoidal
    generator.length=16384
    generator.periods=8
    generator.noise_std=0.1
    generator.trend_slope=3.0
    <method>.<param>.low=...      # with .high, optional .scale=linear|log
    <method>.<param>.choices=a,b  # categorical

Search-space entries override the defaults for that parameter only.
Unknown keys are an error. Flags given on the command line win.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .converters import METHOD_ORDER, get_method
from .csvio import coerce_field, read_keyvalue
from .errors import InvalidParams, ParseError
from .generators import DEFAULT_LENGTH, KINDS
from .optimizer import Categorical, Continuous, Integer

TOP_LEVEL = {"seed": int, "trials": int, "repeats": int, "out_dir": str, "methods": str, "signals": str}
GENERATOR_KEYS = {"length": int, "periods": int, "noise_std": float, "trend_slope": float}
SPACE_FIELDS = ("low", "high", "scale", "choices")


@dataclass
class RunConfig:
    seed: int = 0
    trials: int | None = None
    repeats: int = 5
    out_dir: str = "results"
    methods: list[str] = field(default_factory=lambda: list(METHOD_ORDER))
    signals: list[str] = field(default_factory=lambda: list(KINDS))
    generator: dict[str, Any] = field(default_factory=lambda: {"length": DEFAULT_LENGTH})
    spaces: dict[str, dict] = field(default_factory=dict)

    def override(self, **flags) -> "RunConfig":
        for key, value in flags.items():
            if value is None:
                continue
            if key in ("length", "periods", "noise_std", "trend_slope"):
                self.generator[key] = value
            elif key in ("methods", "signals") and isinstance(value, str):
                setattr(self, key, split_list(value))
            else:
                setattr(self, key, value)
        return self


def split_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _space_entry(method: str, param: str, fields: dict[str, str], path: str, lineno: int):
    spec = get_method(method)
    if param not in spec.param_names():
        raise ParseError(f"unknown {method} parameter {param!r}", line=lineno, path=path)
    try:
        if "choices" in fields:
            if set(fields) - {"choices"}:
                raise InvalidParams("choices cannot be combined with low/high/scale")
            return Categorical(tuple(coerce_field(spec.params_type, param, c) for c in split_list(fields["choices"])))
        if not {"low", "high"} <= set(fields):
            raise InvalidParams("range needs both low and high")
        scale = fields.get("scale", "linear")
        if scale not in ("linear", "log"):
            raise InvalidParams(f"scale must be linear or log, got {scale!r}")
        low = coerce_field(spec.params_type, param, fields["low"])
        high = coerce_field(spec.params_type, param, fields["high"])
        if isinstance(low, bool):
            raise InvalidParams("boolean parameters take choices, not a range")
        if isinstance(low, int):
            return Integer(low, high, log=scale == "log")
        return Continuous(low, high, log=scale == "log")
    except (ValueError, InvalidParams) as exc:
        raise ParseError(f"{method}.{param}: {exc}", line=lineno, path=path) from None


def load_config(path) -> RunConfig:
    path = str(path)
    cfg = RunConfig()
    pending: dict[tuple[str, str], dict[str, str]] = {}
    first_line: dict[tuple[str, str], int] = {}
    seen = set()
    for lineno, key, value in read_keyvalue(path):
        if key in seen:
            raise ParseError(f"duplicate key {key!r}", line=lineno, path=path)
        seen.add(key)
        try:
            if key in TOP_LEVEL:
                if key in ("methods", "signals"):
                    setattr(cfg, key, split_list(value))
                else:
                    setattr(cfg, key, TOP_LEVEL[key](value))
                continue
            parts = key.split(".")
            if len(parts) == 2 and parts[0] == "generator" and parts[1] in GENERATOR_KEYS:
                cfg.generator[parts[1]] = GENERATOR_KEYS[parts[1]](value)
                continue
            if len(parts) == 3 and parts[0] in METHOD_ORDER and parts[2] in SPACE_FIELDS:
                slot = (parts[0], parts[1])
                pending.setdefault(slot, {})[parts[2]] = value
                first_line.setdefault(slot, lineno)
                continue
        except ValueError as exc:
            raise ParseError(f"bad value for {key}: {exc}", line=lineno, path=path) from None
        raise ParseError(f"unknown key {key!r}", line=lineno, path=path)
    for (method, param), fields in pending.items():
        entry = _space_entry(method, param, fields, path, first_line[(method, param)])
        cfg.spaces.setdefault(method, {})[param] = entry
    return cfg


def parse_param_assignments(method: str, assignments: list[str]) -> dict[str, Any]:
    """Turn ``["threshold=0.1", ...]`` into typed parameter values."""
    spec = get_method(method)
    values = {}
    for item in assignments:
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep:
            raise InvalidParams(f"expected name=value, got {item!r}")
        if key not in spec.param_names():
            raise InvalidParams(f"unknown {spec.name} parameter {key!r}")
        try:
            values[key] = coerce_field(spec.params_type, key, raw.strip())
        except ValueError as exc:
            raise InvalidParams(f"bad value for {key}: {exc}") from None
    return values


def load_params_file(path, method: str | None = None) -> tuple[str, dict[str, Any]]:
    """Read a params file written by ``optimize`` (``method=`` line optional)."""
    path = str(path)
    entries = read_keyvalue(path)
    file_method = next((v for _, k, v in entries if k == "method"), None)
    if method and file_method and get_method(method).name != get_method(file_method).name:
        raise InvalidParams(f"params file is for {file_method!r}, not {method!r}")
    method = method or file_method
    if not method:
        raise ParseError("no method given and none recorded in the file", path=path)
    assignments = [f"{k}={v}" for _, k, v in entries if k != "method"]
    return get_method(method).name, parse_param_assignments(method, assignments)


