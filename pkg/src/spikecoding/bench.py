"""Benchmark grid: optimize each (method, signal) cell, then measure it.

Encode timing covers only the encode call on an already-normalized signal,
including materialization of the spike train. Optimization, normalization
and I/O are outside the timed region.
"""
from __future__ import annotations

import platform
import statistics
import time
import traceback
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable, Iterable

import numpy as np

from . import __version__
from .converters import METHOD_ORDER, get_method, reconstruct
from .generators import GeneratorSpec, generate
from .optimizer import OptimizationResult, default_space, optimize
from .signal import mse, sparsity

DEFAULT_REPEATS = 5


@dataclass
class Cell:
    method: str
    signal: str
    mse: float = float("nan")
    sparsity_pct: float = float("nan")
    encode_time: float = float("nan")  # seconds, median over repeats
    best_params: Any = None
    n_trials: int = 0
    error: str | None = None
    detail: str | None = field(default=None, repr=False)
    original: np.ndarray | None = field(default=None, repr=False)
    reconstruction: np.ndarray | None = field(default=None, repr=False)
    optimization: OptimizationResult | None = field(default=None, repr=False)

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass
class BenchmarkReport:
    cells: list[Cell]
    environment: dict[str, Any]

    def cell(self, method: str, signal: str) -> Cell:
        for c in self.cells:
            if c.method == method and c.signal == signal:
                return c
        raise KeyError((method, signal))

    @property
    def methods(self) -> list[str]:
        return list(dict.fromkeys(c.method for c in self.cells))

    @property
    def signals(self) -> list[str]:
        return list(dict.fromkeys(c.signal for c in self.cells))

    @property
    def failed_cells(self) -> list[Cell]:
        return [c for c in self.cells if c.failed]


def time_encode(method: str, signal, params, repeats: int = DEFAULT_REPEATS) -> float:
    """Median wall time (seconds) of the encode step alone."""
    spec = get_method(method)
    prepared, _ = spec.prepare(signal)
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        spec.encode_prepared(prepared, params)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def run_cell(
    method: str,
    spec: GeneratorSpec,
    signal: np.ndarray,
    n_trials: int | None,
    seed: int,
    repeats: int,
    space=None,
) -> Cell:
    cell = Cell(method=method, signal=spec.kind, original=signal)
    try:
        if space:
            space = {**default_space(method, signal), **space}
        result = optimize(method, signal, space=space, n_trials=n_trials, seed=seed)
        train, recon = reconstruct(method, signal, result.best_params)
        cell.best_params = result.best_params
        cell.n_trials = result.n_trials
        cell.optimization = result
        cell.reconstruction = recon
        cell.mse = mse(signal, recon)
        cell.sparsity_pct = 100.0 * sparsity(train)
        cell.encode_time = time_encode(method, signal, result.best_params, repeats)
    except Exception as exc:  # a failed cell must not take the grid down
        cell.error = f"{type(exc).__name__}: {exc}"
        cell.detail = traceback.format_exc()
    return cell


def run_benchmark(
    methods: Iterable[str],
    signals: Iterable[GeneratorSpec],
    n_trials: int | None = None,
    seed: int = 0,
    repeats: int = DEFAULT_REPEATS,
    spaces: dict[str, dict] | None = None,
    on_cell: Callable[[Cell], None] | None = None,
) -> BenchmarkReport:
    """Run every (method, signal) cell.

    ``n_trials=None`` uses each method's default budget. Cells run serially,
    so timings are never measured under contention.
    """
    methods = [get_method(m).name for m in methods]
    signals = list(signals)
    if not methods or not signals:
        raise ValueError("need at least one method and one signal")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    spaces = spaces or {}
    cells = []
    for spec in signals:
        try:
            signal = generate(spec)
        except Exception as exc:
            for method in methods:
                cell = Cell(method=method, signal=spec.kind, error=f"{type(exc).__name__}: {exc}")
                cells.append(cell)
                if on_cell:
                    on_cell(cell)
            continue
        for method in methods:
            cell = run_cell(method, spec, signal, n_trials, seed, repeats, spaces.get(method))
            cells.append(cell)
            if on_cell:
                on_cell(cell)
    environment = {
        "seed": int(seed),
        "n_trials": "default" if n_trials is None else int(n_trials),
        "repeats": int(repeats),
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "build": f"spikecoding {__version__} / python {platform.python_version()} / numpy {np.__version__}",
    }
    return BenchmarkReport(cells, environment)


def mean_rows(report: BenchmarkReport) -> dict[str, dict[str, float]]:
    """Per-method arithmetic means of MSE and sparsity across signals.

    Failed cells are skipped; a method with no successful cell maps to NaN.
    """
    if not report.cells:
        raise ValueError("empty report")
    out = {}
    for method in report.methods:
        ok = [c for c in report.cells if c.method == method and not c.failed]
        out[method] = {
            "mse": float(np.mean([c.mse for c in ok])) if ok else float("nan"),
            "sparsity_pct": float(np.mean([c.sparsity_pct for c in ok])) if ok else float("nan"),
        }
    return out


def ordered_methods(methods: Iterable[str]) -> list[str]:
    """Sort method names into the canonical LIF, SF, PWM, BSA order."""
    names = {get_method(m).name for m in methods}
    return [m for m in METHOD_ORDER if m in names]
