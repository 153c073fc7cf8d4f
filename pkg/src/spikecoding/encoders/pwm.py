"""Pulse-width modulation encoding against a rising sawtooth carrier."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParams
from ..signal import NormalizationRecord, SpikeTrain, denormalize, min_max_normalize

# normalized reconstruction used when a train carries no spikes at all
FALLBACK_LEVEL = 0.5


@dataclass(frozen=True)
class PWMParams:
    frequency: int = 64
    downspike: bool = True

    def __post_init__(self):
        if isinstance(self.frequency, bool) or not isinstance(self.frequency, (int, np.integer)):
            raise InvalidParams(f"PWM frequency must be an integer, got {self.frequency!r}")
        if self.frequency < 1:
            raise InvalidParams(f"PWM frequency must be >= 1, got {self.frequency}")
        object.__setattr__(self, "frequency", int(self.frequency))
        object.__setattr__(self, "downspike", bool(self.downspike))

    def check_length(self, n: int) -> None:
        if 2 * self.frequency > n:
            raise InvalidParams(f"frequency {self.frequency} exceeds half the signal length {n}")


def sawtooth(frequency: int, n: int) -> np.ndarray:
    """Rising sawtooth in [0, 1) with ``frequency`` periods over ``n`` steps.

    ``carrier[t] = frac(frequency * t / n)`` for 0-based ``t``, evaluated with
    integer modulus so period boundaries are exact.
    """
    t = np.arange(n, dtype=np.int64)
    return ((frequency * t) % n) / n


def pwm_levels(signal, carrier, downspike: bool) -> list[int]:
    samples = np.asarray(signal, dtype=np.float64).tolist()
    up = np.asarray(carrier, dtype=np.float64).tolist()
    levels = [0] * len(samples)
    for t, value in enumerate(samples):
        if value < up[t]:
            levels[t] = 1
        elif downspike and value > 1.0 - up[t]:
            levels[t] = -1
    return levels


def pwm_encode_normalized(signal, params: PWMParams) -> SpikeTrain:
    """Encode a signal already scaled to [0, 1].

    Spikes mark transitions of the comparator level into +1 or -1; the first
    step never spikes.
    """
    n = len(signal)
    params.check_length(n)
    levels = pwm_levels(signal, sawtooth(params.frequency, n), params.downspike)
    spikes = [0] * n
    for t in range(1, n):
        level = levels[t]
        if level == 1 and levels[t - 1] != 1:
            spikes[t] = 1
        elif level == -1 and levels[t - 1] != -1:
            spikes[t] = -1
    return SpikeTrain(np.array(spikes, dtype=np.int8), "bipolar")


def pwm_encode(signal, params: PWMParams) -> tuple[SpikeTrain, NormalizationRecord]:
    unit, record = min_max_normalize(signal)
    return pwm_encode_normalized(unit, params), record


def pwm_decode_normalized(train: SpikeTrain, params: PWMParams) -> np.ndarray:
    """Linear interpolation through carrier anchors at spike times.

    An up-spike at ``t`` pins the signal to ``carrier[t]``, a down-spike to
    ``1 - carrier[t]``. Values are held flat outside the first/last anchor.
    """
    if train.polarity != "bipolar":
        raise InvalidParams("PWM decoding expects a bipolar train")
    n = len(train)
    params.check_length(n)
    carrier = sawtooth(params.frequency, n)
    times = np.flatnonzero(train.spikes)
    if times.size == 0:
        return np.full(n, FALLBACK_LEVEL)
    anchors = np.where(train.spikes[times] > 0, carrier[times], 1.0 - carrier[times])
    return np.interp(np.arange(n), times, anchors)


def pwm_decode(train: SpikeTrain, params: PWMParams, record: NormalizationRecord) -> np.ndarray:
    return denormalize(pwm_decode_normalized(train, params), record)
