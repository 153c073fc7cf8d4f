"""Leaky integrate-and-fire encoding with a rate-style decoder."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParams
from ..signal import NormalizationRecord, SpikeTrain, denormalize, min_max_normalize

MAX_WINDOW = 64
_EPS = 1e-9


@dataclass(frozen=True)
class LIFParams:
    threshold: float = 1.0
    membrane_constant: float = 0.9

    def __post_init__(self):
        if not (np.isfinite(self.threshold) and self.threshold > 0):
            raise InvalidParams(f"LIF threshold must be positive, got {self.threshold!r}")
        if not 0 < self.membrane_constant <= 1:
            raise InvalidParams(f"membrane_constant must lie in (0, 1], got {self.membrane_constant!r}")


def lif_normalize(signal) -> tuple[np.ndarray, NormalizationRecord]:
    """Min-max to [0, 1], then map onto [-1, 1]."""
    unit, record = min_max_normalize(signal)
    return unit * 2.0 - 1.0, record


def lif_encode_normalized(current, params: LIFParams, return_voltage: bool = False):
    """Integrate an already-normalized input current.

    With ``return_voltage`` the membrane voltage right after integration
    (before reset and leak) is returned alongside the train.
    """
    samples = np.asarray(current, dtype=np.float64).tolist()
    threshold = params.threshold
    leak = params.membrane_constant
    spikes = [0] * len(samples)
    if return_voltage:
        trace = [0.0] * len(samples)
    voltage = 0.0
    for t, value in enumerate(samples):
        voltage += value
        if return_voltage:
            trace[t] = voltage
        if voltage > threshold:
            spikes[t] = 1
            voltage = 0.0
        elif voltage < -threshold:
            spikes[t] = -1
            voltage = 0.0
        voltage *= leak
    train = SpikeTrain(np.array(spikes, dtype=np.int8), "bipolar")
    if return_voltage:
        return train, np.array(trace)
    return train


def lif_encode(signal, params: LIFParams) -> tuple[SpikeTrain, NormalizationRecord]:
    current, record = lif_normalize(signal)
    return lif_encode_normalized(current, params), record


def decode_window(membrane_constant: float) -> int:
    """Moving-average width used by :func:`lif_decode`.

    ``round(1 / (1 - m + eps))`` clipped to [1, 64]: roughly the membrane's
    memory in steps.
    """
    w = round(1.0 / (1.0 - membrane_constant + _EPS))
    return int(min(max(w, 1), MAX_WINDOW))


def lif_decode_normalized(train: SpikeTrain, params: LIFParams) -> np.ndarray:
    """Reconstruction in the [-1, 1] domain.

    Each spike carries ``threshold`` of integrated input, so the local mean
    input is ``threshold * (spikes in window) / w``. The window is causal and
    zero-padded before the first sample.
    """
    if train.polarity != "bipolar":
        raise InvalidParams("LIF decoding expects a bipolar train")
    w = decode_window(params.membrane_constant)
    csum = np.cumsum(train.spikes, dtype=np.int64)
    counts = csum.copy()
    counts[w:] -= csum[:-w]
    return params.threshold * counts / w


def lif_decode(train: SpikeTrain, params: LIFParams, record: NormalizationRecord) -> np.ndarray:
    current = lif_decode_normalized(train, params)
    return denormalize((current + 1.0) / 2.0, record)
