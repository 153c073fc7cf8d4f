"""Signal and spike-train value types, normalization and error metrics.

Signals are plain 1-D float64 numpy arrays; :func:`as_signal` validates and
freezes them. Spike trains wrap an int8 array together with its polarity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DegenerateSignal, InvalidParams, LengthMismatch, NonFiniteSignal

Polarity = Literal["bipolar", "unipolar"]


def as_signal(samples, min_length: int = 1) -> np.ndarray:
    """Return a read-only float64 copy of ``samples`` after validation."""
    arr = np.array(samples, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise ValueError(f"signal must be 1-D, got shape {arr.shape}")
    if arr.size < min_length:
        raise DegenerateSignal(f"signal needs at least {min_length} samples, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteSignal("signal contains NaN or Inf")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class SpikeTrain:
    """Spike events, one entry per time step.

    Bipolar trains take values in {-1, 0, +1}; unipolar trains in {0, 1}.
    """

    spikes: np.ndarray
    polarity: Polarity = "bipolar"

    def __post_init__(self):
        arr = np.array(self.spikes, dtype=np.int8, copy=True)
        if arr.ndim != 1:
            raise ValueError("spike train must be 1-D")
        if not np.array_equal(arr, np.asarray(self.spikes)):
            raise ValueError("spike values must be integers in {-1, 0, 1}")
        lo = 0 if self.polarity == "unipolar" else -1
        if self.polarity not in ("bipolar", "unipolar"):
            raise ValueError(f"unknown polarity {self.polarity!r}")
        if arr.size and (arr.min() < lo or arr.max() > 1):
            raise ValueError(f"{self.polarity} train has out-of-domain values")
        arr.flags.writeable = False
        object.__setattr__(self, "spikes", arr)

    def __len__(self) -> int:
        return int(self.spikes.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpikeTrain):
            return NotImplemented
        return self.polarity == other.polarity and np.array_equal(self.spikes, other.spikes)

    def __hash__(self):
        return hash((self.polarity, self.spikes.tobytes()))

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.spikes))

    def flipped(self) -> "SpikeTrain":
        """Polarity-flipped copy (bipolar trains only)."""
        return SpikeTrain(-self.spikes.astype(np.int8), "bipolar")


@dataclass(frozen=True)
class NormalizationRecord:
    """Affine map ``normalized = (x - offset) / scale``."""

    kind: Literal["minmax", "zscore", "identity"]
    offset: float
    scale: float

    def __post_init__(self):
        if not (self.scale > 0 and np.isfinite(self.scale)):
            raise InvalidParams(f"normalization scale must be positive, got {self.scale}")
        if not np.isfinite(self.offset):
            raise InvalidParams("normalization offset must be finite")

    @classmethod
    def identity(cls) -> "NormalizationRecord":
        return cls("identity", 0.0, 1.0)

    def apply(self, signal) -> np.ndarray:
        return (np.asarray(signal, dtype=np.float64) - self.offset) / self.scale


def min_max_normalize(signal) -> tuple[np.ndarray, NormalizationRecord]:
    """Rescale to [0, 1]. Raises :class:`DegenerateSignal` for constant input."""
    x = as_signal(signal)
    lo, hi = float(x.min()), float(x.max())
    if not hi > lo:
        raise DegenerateSignal("min-max normalization of a constant signal")
    record = NormalizationRecord("minmax", lo, hi - lo)
    # clip guards against 1 ulp excursions from the division
    out = np.clip(record.apply(x), 0.0, 1.0)
    return out, record


def zscore_normalize(signal) -> tuple[np.ndarray, NormalizationRecord]:
    """Zero mean, unit population variance."""
    x = as_signal(signal, min_length=2)
    mean = float(x.mean())
    std = float(x.std())
    if not std > 0:
        raise DegenerateSignal("z-score normalization of a zero-variance signal")
    record = NormalizationRecord("zscore", mean, std)
    return record.apply(x), record


def denormalize(signal, record: NormalizationRecord) -> np.ndarray:
    return np.asarray(signal, dtype=np.float64) * record.scale + record.offset


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise LengthMismatch(f"lengths differ: {a.shape} vs {b.shape}")
    return a, b


def mse(a, b) -> float:
    """Mean squared error between two equal-length signals."""
    a, b = _pair(a, b)
    if a.size == 0:
        raise LengthMismatch("mse of empty signals")
    return float(np.mean((a - b) ** 2))


def running_mse(a, b) -> np.ndarray:
    """Prefix means of the squared error; the last element equals :func:`mse`."""
    a, b = _pair(a, b)
    sq = (a - b) ** 2
    out = np.cumsum(sq) / np.arange(1, sq.size + 1)
    if sq.size:
        # pin the final value to the non-cumulative mean so it matches mse() bit for bit
        out[-1] = np.mean(sq)
    return out


def sparsity(train: SpikeTrain | np.ndarray) -> float:
    """Fraction of time steps carrying a nonzero spike."""
    spikes = train.spikes if isinstance(train, SpikeTrain) else np.asarray(train)
    if spikes.size == 0:
        return 0.0
    return np.count_nonzero(spikes) / spikes.size
