"""Step-Forward encoding: an adaptive baseline that moves one threshold per spike."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParams
from ..signal import SpikeTrain, as_signal


@dataclass(frozen=True)
class SFParams:
    threshold: float = 0.1

    def __post_init__(self):
        if not (np.isfinite(self.threshold) and self.threshold > 0):
            raise InvalidParams(f"SF threshold must be positive, got {self.threshold!r}")


def sf_encode(signal, params: SFParams) -> SpikeTrain:
    """Encode raw amplitudes; no normalization is applied.

    The baseline starts at 0. A sample above ``base + threshold`` emits +1
    and raises the baseline by ``threshold``; a sample below
    ``base - threshold`` emits -1 and lowers it.
    """
    samples = as_signal(signal).tolist()
    threshold = params.threshold
    spikes = [0] * len(samples)
    base = 0.0
    for t, value in enumerate(samples):
        if value > base + threshold:
            spikes[t] = 1
            base += threshold
        elif value < base - threshold:
            spikes[t] = -1
            base -= threshold
    return SpikeTrain(np.array(spikes, dtype=np.int8), "bipolar")


def sf_decode(train: SpikeTrain, params: SFParams, initial_value: float = 0.0) -> np.ndarray:
    """``initial_value + threshold * cumsum(spikes)``."""
    if train.polarity != "bipolar":
        raise InvalidParams("SF decoding expects a bipolar train")
    return initial_value + params.threshold * np.cumsum(train.spikes, dtype=np.float64)
