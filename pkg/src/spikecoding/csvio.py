"""CSV and key=value file I/O with byte-stable formatting.

All files are UTF-8 with ``\\n`` line endings and are written atomically
(temporary file in the target directory, then rename).
"""
from __future__ import annotations

import dataclasses
import math
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import ParseError

SIGNAL_HEADER = ("step", "amplitude")
SPIKE_HEADER = ("step", "spike")
FEATURE_HEADER = ("step", "original", "reconstructed", "mse")


def format_float(x: float) -> str:
    """Shortest round-trip text, padded to at least 9 significant digits."""
    x = float(x)
    if not math.isfinite(x):
        return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
    padded = f"{x:#.9g}"
    if float(padded) == x:
        return padded
    return repr(x)


def format_value(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    return str(value)


def atomic_write_text(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(format_value(v) for v in row) for row in rows)
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_csv(path, header: Sequence[str] | None = None) -> tuple[list[str], list[list[str]]]:
    """Return (header, rows) as strings. ``header`` enforces an exact match."""
    path = str(path)
    with open(path, encoding="utf-8", newline="") as fh:
        text = fh.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty file", line=1, path=path)
    got = lines[0].rstrip("\r").split(",")
    if header is not None and tuple(got) != tuple(header):
        raise ParseError(f"expected header {','.join(header)!r}, got {lines[0]!r}", line=1, path=path)
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.rstrip("\r").split(",")
        if len(fields) != len(got):
            raise ParseError(f"expected {len(got)} fields, got {len(fields)}", line=lineno, path=path)
        rows.append(fields)
    return got, rows


def _parse_number(text: str, kind, lineno: int, path: str, column: str):
    try:
        value = kind(text)
    except ValueError:
        raise ParseError(f"bad {column} value {text!r}", line=lineno, path=path) from None
    if kind is float and not math.isfinite(value):
        raise ParseError(f"non-finite {column} value {text!r}", line=lineno, path=path)
    return value


def _read_stepped(path, header, value_kind) -> np.ndarray:
    path = str(path)
    _, rows = read_csv(path, header)
    values = []
    for i, (step, raw) in enumerate(rows):
        lineno = i + 2
        step_no = _parse_number(step, int, lineno, path, "step")
        if step_no != i + 1:
            raise ParseError(f"expected step {i + 1}, got {step_no}", line=lineno, path=path)
        values.append(_parse_number(raw, value_kind, lineno, path, header[1]))
    if not values:
        raise ParseError("no data rows", line=2, path=path)
    return np.array(values, dtype=np.float64 if value_kind is float else np.int8)


def read_signal_csv(path) -> np.ndarray:
    return _read_stepped(path, SIGNAL_HEADER, float)


def write_signal_csv(path, signal) -> None:
    write_csv(path, SIGNAL_HEADER, ((t, v) for t, v in enumerate(np.asarray(signal).tolist(), start=1)))


def read_spike_csv(path) -> np.ndarray:
    spikes = _read_stepped(path, SPIKE_HEADER, int)
    bad = np.flatnonzero((spikes < -1) | (spikes > 1))
    if bad.size:
        raise ParseError("spike values must be -1, 0 or 1", line=int(bad[0]) + 2, path=str(path))
    return spikes


def write_spike_csv(path, spikes) -> None:
    write_csv(path, SPIKE_HEADER, ((t, int(v)) for t, v in enumerate(np.asarray(spikes).tolist(), start=1)))


def write_feature_csv(path, original, reconstructed, running) -> None:
    rows = zip(
        range(1, len(original) + 1),
        np.asarray(original).tolist(),
        np.asarray(reconstructed).tolist(),
        np.asarray(running).tolist(),
    )
    write_csv(path, FEATURE_HEADER, rows)


# key=value files -----------------------------------------------------------


def read_keyvalue(path) -> list[tuple[int, str, str]]:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    path = str(path)
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise ParseError(f"expected key=value, got {line!r}", line=lineno, path=path)
            out.append((lineno, key.strip(), value.strip()))
    return out


def write_keyvalue(path, items: Iterable[tuple[str, Any]]) -> None:
    atomic_write_text(path, "".join(f"{k}={format_value(v)}\n" for k, v in items))


def parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def coerce_field(params_type: type, name: str, text: str):
    """Convert ``text`` to the declared type of ``params_type.name``."""
    types = {f.name: f.type for f in dataclasses.fields(params_type)}
    declared = str(types[name])
    if "bool" in declared:
        return parse_bool(text)
    if "int" in declared:
        return int(text)
    return float(text)


def params_items(method: str, params) -> list[tuple[str, Any]]:
    return [("method", method)] + [(f.name, getattr(params, f.name)) for f in dataclasses.fields(params)]
