"""Seeded random search over encoder parameters, minimizing reconstruction MSE.

Each trial draws its parameters from a generator seeded with
``SeedSequence([seed, trial_index])``, so trial ``i`` is the same whatever
the budget, worker count or evaluation order. Ties on MSE go to the earliest
trial.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Sequence, Union

import numpy as np

from .converters import Method, get_method, reconstruction_error
from .errors import DegenerateSignal, EmptySpace, InvalidParams
from .signal import as_signal

DEFAULT_TRIALS = 500
DEFAULT_TRIALS_BSA = 1000


@dataclass(frozen=True)
class Continuous:
    low: float
    high: float
    log: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.low) and math.isfinite(self.high)) or not self.low < self.high:
            raise InvalidParams(f"continuous range needs low < high, got [{self.low}, {self.high}]")
        if self.log and self.low <= 0:
            raise InvalidParams("log-scaled range needs low > 0")

    def sample(self, rng: np.random.Generator) -> float:
        u = rng.random()
        if self.log:
            lo, hi = math.log(self.low), math.log(self.high)
            return float(min(max(math.exp(lo + u * (hi - lo)), self.low), self.high))
        return float(self.low + u * (self.high - self.low))

    def contains(self, value) -> bool:
        return self.low <= value <= self.high


@dataclass(frozen=True)
class Integer:
    low: int
    high: int
    log: bool = False

    def __post_init__(self):
        if not self.low < self.high:
            raise InvalidParams(f"integer range needs low < high, got [{self.low}, {self.high}]")
        if self.log and self.low < 1:
            raise InvalidParams("log-scaled integer range needs low >= 1")

    def sample(self, rng: np.random.Generator) -> int:
        u = rng.random()
        if self.log:
            # uniform in log over [low - 0.5, high + 0.5], then rounded
            lo, hi = math.log(self.low - 0.5), math.log(self.high + 0.5)
            value = round(math.exp(lo + u * (hi - lo)))
        else:
            value = self.low + math.floor(u * (self.high - self.low + 1))
        return int(min(max(value, self.low), self.high))

    def contains(self, value) -> bool:
        return isinstance(value, (int, np.integer)) and self.low <= value <= self.high


@dataclass(frozen=True)
class Categorical:
    choices: tuple

    def __post_init__(self):
        if len(self.choices) == 0:
            raise EmptySpace("categorical parameter with no choices")
        object.__setattr__(self, "choices", tuple(self.choices))

    def sample(self, rng: np.random.Generator):
        if len(self.choices) == 1:
            # keep the stream aligned with multi-choice spaces
            rng.random()
            return self.choices[0]
        return self.choices[int(rng.integers(len(self.choices)))]

    def contains(self, value) -> bool:
        return value in self.choices


Distribution = Union[Continuous, Integer, Categorical]
SearchSpace = dict  # parameter name -> Distribution, sampled in insertion order


def default_space(method: str, signal) -> SearchSpace:
    """Per-method defaults; some bounds depend on the signal."""
    x = as_signal(signal)
    n = x.size
    name = get_method(method).name
    if name == "sf":
        span = float(x.max() - x.min())
        if not span > 0:
            span = 1.0
        return {"threshold": Continuous(1e-3 * span, span)}
    if name == "lif":
        return {"threshold": Continuous(0.01, 10.0, log=True), "membrane_constant": Continuous(0.5, 1.0)}
    if name == "pwm":
        top = max(n // 4, 1)
        freq = Integer(1, top, log=True) if top > 1 else Categorical((1,))
        return {"frequency": freq, "downspike": Categorical((True, False))}
    if name == "bsa":
        top = min(64, n - 1)
        order = Integer(min(2, top - 1), top)
        return {
            "filter_order": order,
            "filter_cutoff": Continuous(0.01, 0.49),
            "threshold": Continuous(1e-3, 2.0, log=True),
        }
    raise InvalidParams(method)


def default_trials(method: str) -> int:
    return DEFAULT_TRIALS_BSA if get_method(method).name == "bsa" else DEFAULT_TRIALS


def sample_params(space: SearchSpace, seed: int, index: int) -> dict[str, Any]:
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), int(index)]))
    return {name: dist.sample(rng) for name, dist in space.items()}


@dataclass(frozen=True)
class Trial:
    index: int
    values: dict
    params: Any
    mse: float


@dataclass
class OptimizationResult:
    method: str
    best_params: Any
    best_mse: float
    best_index: int
    seed: int
    n_trials: int
    trials: list[Trial] = field(repr=False)


def _evaluate(args) -> float:
    method, signal, params = args
    return reconstruction_error(method, signal, params)


def _check_space(space: SearchSpace, method: Method) -> None:
    if not space:
        raise EmptySpace(f"empty search space for {method.name}")
    unknown = set(space) - set(method.param_names())
    if unknown:
        raise InvalidParams(f"search space names unknown {method.name} parameter(s): {sorted(unknown)}")


def optimize(
    method: str,
    signal,
    space: SearchSpace | None = None,
    n_trials: int | None = None,
    seed: int = 0,
    workers: int = 1,
) -> OptimizationResult:
    """Evaluate ``n_trials`` random parameter sets and keep the lowest-MSE one."""
    spec = get_method(method)
    signal = as_signal(signal, min_length=2)
    if not signal.max() > signal.min():
        raise DegenerateSignal("cannot optimize on a constant signal")
    space = default_space(spec.name, signal) if space is None else dict(space)
    _check_space(space, spec)
    n_trials = default_trials(spec.name) if n_trials is None else int(n_trials)
    if n_trials < 1:
        raise InvalidParams("n_trials must be >= 1")

    sampled = [sample_params(space, seed, i) for i in range(n_trials)]
    params = [spec.make_params(values) for values in sampled]
    jobs = [(spec.name, signal, p) for p in params]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            errors = list(pool.map(_evaluate, jobs, chunksize=max(1, n_trials // (4 * workers))))
    else:
        errors = [_evaluate(job) for job in jobs]

    trials = [Trial(i, sampled[i], params[i], float(errors[i])) for i in range(n_trials)]
    best = min(trials, key=lambda tr: (tr.mse, tr.index))
    return OptimizationResult(spec.name, best.params, best.mse, best.index, int(seed), n_trials, trials)


def evaluate_fixed(method: str, signal, values: dict[str, Any]) -> float:
    """MSE for one explicit parameter set (reference point for comparisons)."""
    spec = get_method(method)
    return reconstruction_error(spec.name, signal, spec.make_params(values))


def space_from_values(values: dict[str, Sequence]) -> SearchSpace:
    """Build a categorical space, one choice list per parameter."""
    return {name: Categorical(tuple(choices)) for name, choices in values.items()}
