"""Ben's Spiker Algorithm with a Hamming-windowed sinc FIR filter."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParams
from ..signal import NormalizationRecord, SpikeTrain, denormalize, min_max_normalize


def fir_lowpass(filter_size: int, cutoff: float) -> np.ndarray:
    """Windowed-sinc lowpass taps at unit sampling frequency.

    ``cutoff`` is in cycles per sample, in (0, 0.5). Taps are Hamming
    windowed and scaled to sum to one.
    """
    if isinstance(filter_size, bool) or not isinstance(filter_size, (int, np.integer)) or filter_size < 1:
        raise InvalidParams(f"filter_size must be a positive integer, got {filter_size!r}")
    if not 0 < cutoff < 0.5:
        raise InvalidParams(f"cutoff must lie in (0, 0.5), got {cutoff!r}")
    if filter_size == 1:
        return np.ones(1)
    k = np.arange(filter_size)
    centre = (filter_size - 1) / 2.0
    taps = 2.0 * cutoff * np.sinc(2.0 * cutoff * (k - centre))
    taps *= 0.54 - 0.46 * np.cos(2.0 * np.pi * k / (filter_size - 1))
    return taps / taps.sum()


@dataclass(frozen=True)
class BSAParams:
    filter_order: int = 16
    filter_cutoff: float = 0.1
    threshold: float = 0.5

    def __post_init__(self):
        if isinstance(self.filter_order, bool) or not isinstance(self.filter_order, (int, np.integer)):
            raise InvalidParams(f"filter_order must be an integer, got {self.filter_order!r}")
        if self.filter_order < 0:
            raise InvalidParams("filter_order must be >= 0")
        if not 0 < self.filter_cutoff < 0.5:
            raise InvalidParams(f"filter_cutoff must lie in (0, 0.5), got {self.filter_cutoff!r}")
        if not (np.isfinite(self.threshold) and self.threshold > 0):
            raise InvalidParams(f"BSA threshold must be positive, got {self.threshold!r}")
        object.__setattr__(self, "filter_order", int(self.filter_order))

    @property
    def filter_size(self) -> int:
        return self.filter_order + 1

    def taps(self) -> np.ndarray:
        return fir_lowpass(self.filter_size, self.filter_cutoff)

    def check_length(self, n: int) -> None:
        if self.filter_size > n:
            raise InvalidParams(f"filter size {self.filter_size} exceeds signal length {n}")


def bsa_encode_normalized(signal, params: BSAParams) -> SpikeTrain:
    """Greedy BSA on a signal already scaled to [0, 1].

    At each step the filter is compared against the upcoming window of a
    working copy (truncated at the end of the signal). A spike is emitted
    and the filter subtracted when ``err1 <= err2 - threshold``.
    """
    work = np.asarray(signal, dtype=np.float64).tolist()
    n = len(work)
    params.check_length(n)
    fir = params.taps().tolist()
    size = len(fir)
    threshold = params.threshold
    spikes = [0] * n
    for t in range(n):
        span = min(size, n - t)
        err1 = 0.0
        err2 = 0.0
        for j in range(span):
            value = work[t + j]
            err1 += abs(value - fir[j])
            err2 += abs(value)
        if err1 <= err2 - threshold:
            spikes[t] = 1
            for j in range(span):
                work[t + j] -= fir[j]
    return SpikeTrain(np.array(spikes, dtype=np.int8), "unipolar")


def bsa_encode(signal, params: BSAParams) -> tuple[SpikeTrain, NormalizationRecord]:
    unit, record = min_max_normalize(signal)
    return bsa_encode_normalized(unit, params), record


def bsa_decode_normalized(train: SpikeTrain, params: BSAParams) -> np.ndarray:
    """Causal convolution of the train with the filter taps."""
    if train.polarity != "unipolar":
        raise InvalidParams("BSA decoding expects a unipolar train")
    n = len(train)
    return np.convolve(train.spikes.astype(np.float64), params.taps())[:n]


def bsa_decode(train: SpikeTrain, params: BSAParams, record: NormalizationRecord) -> np.ndarray:
    return denormalize(bsa_decode_normalized(train, params), record)
